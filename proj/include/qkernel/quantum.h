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

#ifndef QKERNEL_QUANTUM_H_
#define QKERNEL_QUANTUM_H_

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qkernel/kernel_matrix.h"
#include "qkernel/random.h"

namespace qkernel {

using Complex = std::complex<double>;

// Invariant tolerances. Fixed by design: they guard representation
// invariants, not experimental results.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kNormTol = 1e-10;
inline constexpr int kMaxQubits = 10;

enum class Encoding { kAngleProduct, kAngleEntangled };

std::string_view to_string(Encoding e);
// Accepts "angle_product" / "angle_entangled".
Encoding parse_encoding(std::string_view s);

struct FeatureMapSpec {
  int qubits = 1;
  Encoding kind = Encoding::kAngleProduct;

  int dim() const { return 1 << qubits; }
  // Throws std::invalid_argument unless 1 <= qubits <= kMaxQubits.
  void validate() const;
};

// D x D Hermitian, unit-trace, positive semidefinite complex matrix.
class DensityMatrix {
 public:
  // Validates all three invariants; throws std::invalid_argument otherwise.
  static DensityMatrix from_matrix(Eigen::MatrixXcd m);
  // |psi><psi|; psi must have unit norm within kNormTol.
  static DensityMatrix pure(const Eigen::VectorXcd& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  double purity() const;

 private:
  explicit DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {}
  friend DensityMatrix depolarize(const DensityMatrix& rho, double p);

  Eigen::MatrixXcd m_;
};

// Hermitian D x D matrix with operator norm <= 1.
class Observable {
 public:
  // Throws std::invalid_argument unless Hermitian (kHermitianTol) with
  // ||O|| <= 1 + kNormTol.
  static Observable from_matrix(Eigen::MatrixXcd m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  double operator_norm() const;

 private:
  explicit Observable(Eigen::MatrixXcd m) : m_(std::move(m)) {}
  friend Observable random_observable(Rng& rng, int dim);

  Eigen::MatrixXcd m_;
};

// Feature state |psi_x> of the encoding. Qubit 0 is the most significant bit
// of the basis index. AngleProduct: (x)_j (cos(x_j/2)|0> + sin(x_j/2)|1>).
// AngleEntangled: the same followed by controlled-phase(pi/2) on each
// adjacent pair (j, j+1).
Eigen::VectorXcd feature_state(std::span<const double> x, const FeatureMapSpec& spec);

// rho_x = |psi_x><psi_x|.
DensityMatrix encode(std::span<const double> x, const FeatureMapSpec& spec);

// tr(a b), clamped to [0, 1]. Bitwise symmetric in its arguments.
double hs_inner(const DensityMatrix& a, const DensityMatrix& b);

// (1 - p) rho + p I/D, 0 <= p < 1.
DensityMatrix depolarize(const DensityMatrix& rho, double p);

// q = 1 - (1 - p)^2.
double effective_noise_q(double p);

// Entrywise (1 - q) K_ij + q/D, i.e. tr(rho~_i rho~_j) for every (i, j).
KernelMatrix noisy_kernel_closed_form(const KernelMatrix& k, double p, int dim);

// Gaussian Hermitian matrix scaled to unit operator norm.
Observable random_observable(Rng& rng, int dim);

// tr(rho_x O), clamped to [-1, 1].
double label(std::span<const double> x, const Observable& o, const FeatureMapSpec& spec);
double expectation(const DensityMatrix& rho, const Observable& o);

// One input drawn uniformly from [-pi, pi]^qubits.
std::vector<double> draw_input(Rng& rng, int qubits);

// Gram matrix of hs_inner over `states`, computed on i <= j and mirrored.
KernelMatrix gram_matrix(std::span<const DensityMatrix> states);

}  // namespace qkernel

#endif  // QKERNEL_QUANTUM_H_
