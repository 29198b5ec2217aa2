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

#include "qkernel/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace qkernel {

KernelMatrix::KernelMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("KernelMatrix: not square");
  if (!m_.allFinite()) throw std::invalid_argument("KernelMatrix: non-finite entries");
  for (Eigen::Index j = 0; j < m_.cols(); ++j) {
    for (Eigen::Index i = j + 1; i < m_.rows(); ++i) {
      if (m_(i, j) != m_(j, i)) throw std::invalid_argument("KernelMatrix: not exactly symmetric");
    }
  }
}

KernelMatrix KernelMatrix::symmetrized(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("KernelMatrix: not square");
  Eigen::MatrixXd s = 0.5 * (m + m.transpose());
  return KernelMatrix(std::move(s));
}

KernelMatrix KernelMatrix::identity(Eigen::Index n) {
  return KernelMatrix(Eigen::MatrixXd::Identity(n, n), Trusted{});
}

KernelMatrix KernelMatrix::zero(Eigen::Index n) {
  return KernelMatrix(Eigen::MatrixXd::Zero(n, n), Trusted{});
}

KernelMatrix KernelMatrix::shifted(double s) const {
  Eigen::MatrixXd out = m_;
  out.diagonal().array() += s;
  return KernelMatrix(std::move(out), Trusted{});
}

KernelMatrix KernelMatrix::scaled(double s) const { return KernelMatrix(s * m_, Trusted{}); }

KernelMatrix operator+(const KernelMatrix& a, const KernelMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("KernelMatrix: size mismatch");
  return KernelMatrix(a.m_ + b.m_, KernelMatrix::Trusted{});
}

KernelMatrix operator-(const KernelMatrix& a, const KernelMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("KernelMatrix: size mismatch");
  return KernelMatrix(a.m_ - b.m_, KernelMatrix::Trusted{});
}

Eigen::VectorXd sym_eigvals(const KernelMatrix& a) {
  if (a.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("sym_eigvals: solver did not converge");
  return es.eigenvalues();
}

double min_eig(const KernelMatrix& a) {
  if (a.size() == 0) throw std::invalid_argument("min_eig: empty matrix");
  return sym_eigvals(a)(0);
}

bool loewner_geq(const KernelMatrix& a, const KernelMatrix& b, double tol) {
  return min_eig(a - b) >= -tol;
}

Eigen::VectorXd solve_spd(const KernelMatrix& a, const Eigen::VectorXd& y) {
  if (y.size() != a.size()) throw std::invalid_argument("solve_spd: size mismatch");
  const double lo = min_eig(a);
  if (!(lo > 0.0)) {
    throw NotPositiveDefinite("solve_spd: matrix is not positive definite (min eig " +
                                  std::to_string(lo) + ")",
                              lo);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(a.matrix());
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("solve_spd: Cholesky factorization failed", lo);
  }
  return llt.solve(y);
}

double quad_form_inv(const Eigen::VectorXd& y, const KernelMatrix& a) {
  return std::max(0.0, y.dot(solve_spd(a, y)));
}

KernelMatrix spd_inverse(const KernelMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.matrix());
  if (es.info() != Eigen::Success) throw std::runtime_error("spd_inverse: solver did not converge");
  const double lo = es.eigenvalues()(0);
  if (!(lo > 0.0)) throw NotPositiveDefinite("spd_inverse: matrix is not positive definite", lo);
  const Eigen::MatrixXd& v = es.eigenvectors();
  Eigen::MatrixXd inv = v * es.eigenvalues().cwiseInverse().asDiagonal() * v.transpose();
  return KernelMatrix::symmetrized(inv);
}

bool shift_event(const KernelMatrix& k_hat, const KernelMatrix& k_tilde, double shift) {
  if (k_hat.size() != k_tilde.size()) throw std::invalid_argument("shift_event: size mismatch");
  return loewner_geq(k_hat.shifted(shift), k_tilde) &&
         loewner_geq(k_tilde, KernelMatrix::zero(k_tilde.size()));
}

bool psd_shift_event(const KernelMatrix& k_hat, const KernelMatrix& k_tilde, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("psd_shift_event: lambda must be > 0");
  return shift_event(k_hat, k_tilde, lambda / 2.0);
}

bool sandwich_holds_for(const KernelMatrix& training_matrix, const KernelMatrix& k, double lambda,
                        double q) {
  if (!(lambda > 0.0)) throw std::invalid_argument("sandwich check: lambda must be > 0");
  if (!(q >= 0.0 && q < 1.0)) throw std::invalid_argument("sandwich check: q must be in [0,1)");
  if (training_matrix.size() != k.size()) throw std::invalid_argument("sandwich check: size mismatch");
  KernelMatrix lhs;
  try {
    lhs = spd_inverse(training_matrix);
  } catch (const NotPositiveDefinite&) {
    return false;
  }
  const KernelMatrix rhs = spd_inverse(k.shifted(lambda)).scaled(2.0 / (1.0 - q));
  return loewner_geq(rhs, lhs, kSandwichTol);
}

bool sandwich_inequality_check(const KernelMatrix& k_hat, const KernelMatrix& k, double lambda,
                               double q) {
  if (!(lambda > 0.0)) throw std::invalid_argument("sandwich check: lambda must be > 0");
  return sandwich_holds_for(k_hat.shifted(lambda), k, lambda, q);
}

bool remark1_operator_check(const KernelMatrix& w, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("remark1_operator_check: lambda must be > 0");
  const double lambda_prime = std::max(1.0, lambda);
  return loewner_geq(w.shifted(lambda).scaled(lambda_prime), w.shifted(lambda * lambda));
}

}  // namespace qkernel
