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

#include "qkernel/bounds.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "qkernel/linalg.h"

namespace qkernel {
namespace {

void check_common(const Eigen::VectorXd& y, const KernelMatrix& w, double delta, int n) {
  if (n < 1) throw std::invalid_argument("bound: N must be >= 1");
  if (y.size() != n || w.size() != n) throw std::invalid_argument("bound: y, W and N disagree in size");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("bound: delta must be in (0, 1)");
}

void check_psd(const KernelMatrix& w) {
  if (min_eig(w) < -kLoewnerTol) throw std::invalid_argument("bound: kernel matrix must be PSD");
}

double confidence_term(double delta, int n) { return std::sqrt(std::log(1.0 / delta) / n); }

}  // namespace

std::string_view to_string(BoundVariant v) {
  switch (v) {
    case BoundVariant::kTheorem1:
      return "theorem1";
    case BoundVariant::kRemark1:
      return "remark1";
    case BoundVariant::kTheorem2:
      return "theorem2";
  }
  return "unknown";
}

double m_threshold(int n, double lambda, double delta) {
  if (n < 1) throw std::invalid_argument("m_threshold: N must be >= 1");
  if (!(lambda > 0.0)) throw std::invalid_argument("m_threshold: lambda must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("m_threshold: delta must be in (0, 1)");
  return 8.0 * n * std::log(2.0 * n / delta) / (lambda * lambda);
}

double hoeffding_failure_bound(int n, double lambda, double m) {
  if (n < 1) throw std::invalid_argument("hoeffding_failure_bound: N must be >= 1");
  if (!(lambda > 0.0)) throw std::invalid_argument("hoeffding_failure_bound: lambda must be > 0");
  if (!(m >= 0.0)) throw std::invalid_argument("hoeffding_failure_bound: m must be >= 0");
  return n * std::exp(-lambda * lambda * m / (8.0 * n));
}

bool is_vacuous(double failure_bound) { return failure_bound >= 1.0; }

BoundReport theorem1_rhs(const Eigen::VectorXd& y, const KernelMatrix& w, double lambda, double delta, int n) {
  check_common(y, w, delta, n);
  if (!(lambda >= 0.0)) throw std::invalid_argument("theorem1_rhs: lambda must be >= 0");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w.matrix());
  if (es.info() != Eigen::Success) throw std::runtime_error("theorem1_rhs: eigensolver failed");
  const Eigen::VectorXd& mu = es.eigenvalues();
  if (mu(0) < -kLoewnerTol) throw std::invalid_argument("theorem1_rhs: W must be PSD");
  if (!(mu(0) + lambda > 0.0)) throw std::domain_error("theorem1_rhs: W + lambda I is singular");

  const Eigen::VectorXd c = es.eigenvectors().transpose() * y;
  double reg = 0.0;
  double ker = 0.0;
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    const double s = mu(k) + lambda;
    const double c2 = c(k) * c(k);
    reg += c2 / (s * s);
    ker += c2 * std::max(0.0, mu(k)) / (s * s);
  }
  BoundReport r;
  r.variant = BoundVariant::kTheorem1;
  r.term_regularizer = std::sqrt(lambda * lambda * reg / n);
  r.term_kernel = std::sqrt(ker / n);
  r.term_confidence = confidence_term(delta, n);
  r.total = r.term_regularizer + r.term_kernel + r.term_confidence;
  return r;
}

BoundReport remark1_rhs(const Eigen::VectorXd& y, const KernelMatrix& w, double lambda, double delta, int n) {
  check_common(y, w, delta, n);
  if (!(lambda > 0.0)) throw std::invalid_argument("remark1_rhs: lambda must be > 0");
  check_psd(w);
  const double lambda_prime = std::max(1.0, lambda);
  BoundReport r;
  r.variant = BoundVariant::kRemark1;
  r.term_regularizer = std::sqrt(lambda_prime * quad_form_inv(y, w.shifted(lambda)) / n);
  r.term_confidence = confidence_term(delta, n);
  r.total = r.term_regularizer + r.term_confidence;
  return r;
}

BoundReport theorem2_rhs(const Eigen::VectorXd& y, const KernelMatrix& k, double lambda, double p, double delta,
                         int n) {
  check_common(y, k, delta, n);
  if (!(lambda > 0.0)) throw std::invalid_argument("theorem2_rhs: lambda must be > 0");
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("theorem2_rhs: p must be in [0, 1)");
  check_psd(k);
  const double lambda_prime = std::max(1.0, lambda);
  const double keep = (1.0 - p) * (1.0 - p);
  BoundReport r;
  r.variant = BoundVariant::kTheorem2;
  r.term_regularizer = std::sqrt(lambda_prime * quad_form_inv(y, k.shifted(lambda)) / (keep * n));
  r.term_confidence = confidence_term(delta, n);
  r.total = r.term_regularizer + r.term_confidence;
  return r;
}

}  // namespace qkernel
