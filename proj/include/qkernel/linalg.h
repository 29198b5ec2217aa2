// Copyright 2026 The qkernel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QKERNEL_LINALG_H_
#define QKERNEL_LINALG_H_

#include <stdexcept>

#include <Eigen/Dense>

#include "qkernel/kernel_matrix.h"

namespace qkernel {

// Default absolute tolerance on the minimum eigenvalue for A >= B.
inline constexpr double kLoewnerTol = 1e-9;
// Tolerance for the inverse sandwich (K^ + lambda I)^-1 <= 2/(1-q) (K + lambda I)^-1.
inline constexpr double kSandwichTol = 1e-8;

// Raised when a matrix that must be positive definite is not. For the
// training solve this means the shift event failed; callers decide what to do.
class NotPositiveDefinite : public std::runtime_error {
 public:
  NotPositiveDefinite(const std::string& what, double min_eig)
      : std::runtime_error(what), min_eig_(min_eig) {}
  double min_eig() const { return min_eig_; }

 private:
  double min_eig_;
};

// All eigenvalues, ascending.
Eigen::VectorXd sym_eigvals(const KernelMatrix& a);
double min_eig(const KernelMatrix& a);

// True iff min_eig(a - b) >= -tol.
bool loewner_geq(const KernelMatrix& a, const KernelMatrix& b, double tol = kLoewnerTol);

// Solves a x = y for symmetric positive definite a (Cholesky). Throws
// NotPositiveDefinite when min_eig(a) <= 0.
Eigen::VectorXd solve_spd(const KernelMatrix& a, const Eigen::VectorXd& y);

// y^T a^-1 y for SPD a.
double quad_form_inv(const Eigen::VectorXd& y, const KernelMatrix& a);

// a^-1 for SPD a, through the eigendecomposition and symmetrized.
KernelMatrix spd_inverse(const KernelMatrix& a);

// K^ + (lambda/2) I >= K~ >= 0.
bool psd_shift_event(const KernelMatrix& k_hat, const KernelMatrix& k_tilde, double lambda);

// Same event with an arbitrary shift s in place of lambda/2.
bool shift_event(const KernelMatrix& k_hat, const KernelMatrix& k_tilde, double shift);

// (2/(1-q)) (K + lambda I)^-1 >= (K^ + lambda I)^-1 within kSandwichTol.
// Returns false (does not throw) when K^ + lambda I is not positive definite.
bool sandwich_inequality_check(const KernelMatrix& k_hat, const KernelMatrix& k, double lambda,
                               double q);

// Same check for an arbitrary training matrix T in place of K^ + lambda I.
bool sandwich_holds_for(const KernelMatrix& training_matrix, const KernelMatrix& k, double lambda,
                        double q);

// lambda' (W + lambda I) >= W + lambda^2 I with lambda' = max{1, lambda}.
bool remark1_operator_check(const KernelMatrix& w, double lambda);

}  // namespace qkernel

#endif  // QKERNEL_LINALG_H_
