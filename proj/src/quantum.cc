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

#include "qkernel/quantum.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "qkernel/simd/kernels.h"

namespace qkernel {
namespace {

double max_hermitian_defect(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Complex storage viewed as interleaved doubles (std::complex is array-compatible).
std::span<const double> as_reals(const Eigen::MatrixXcd& m) {
  return {reinterpret_cast<const double*>(m.data()), static_cast<std::size_t>(2 * m.size())};
}

void require_unit_interval_open(double p, const char* who) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument(std::string(who) + ": p must be in [0, 1), got " + std::to_string(p));
  }
}

}  // namespace

std::string_view to_string(Encoding e) {
  switch (e) {
    case Encoding::kAngleProduct:
      return "angle_product";
    case Encoding::kAngleEntangled:
      return "angle_entangled";
  }
  return "unknown";
}

Encoding parse_encoding(std::string_view s) {
  if (s == "angle_product") return Encoding::kAngleProduct;
  if (s == "angle_entangled") return Encoding::kAngleEntangled;
  throw std::invalid_argument("unknown encoding: " + std::string(s));
}

void FeatureMapSpec::validate() const {
  if (qubits < 1 || qubits > kMaxQubits) {
    throw std::invalid_argument("FeatureMapSpec: qubits must be in [1, " + std::to_string(kMaxQubits) +
                                "], got " + std::to_string(qubits));
  }
}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument("DensityMatrix: must be square and non-empty");
  }
  if (!m.allFinite()) throw std::invalid_argument("DensityMatrix: non-finite entries");
  if (max_hermitian_defect(m) > kHermitianTol) throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -kPsdTol) throw std::invalid_argument("DensityMatrix: not PSD");
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  if (psi.size() == 0) throw std::invalid_argument("DensityMatrix::pure: empty state");
  if (std::abs(psi.norm() - 1.0) > kNormTol) throw std::invalid_argument("DensityMatrix::pure: state not normalized");
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw std::invalid_argument("DensityMatrix::maximally_mixed: dim must be >= 1");
  return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const { return hs_inner(*this, *this); }

Observable Observable::from_matrix(Eigen::MatrixXcd m) {
  if (m.rows() == 0 || m.rows() != m.cols()) throw std::invalid_argument("Observable: must be square and non-empty");
  if (!m.allFinite()) throw std::invalid_argument("Observable: non-finite entries");
  if (max_hermitian_defect(m) > kHermitianTol) throw std::invalid_argument("Observable: not Hermitian");
  Observable o(std::move(m));
  if (o.operator_norm() > 1.0 + kNormTol) throw std::invalid_argument("Observable: operator norm exceeds 1");
  return o;
}

double Observable::operator_norm() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::VectorXcd feature_state(std::span<const double> x, const FeatureMapSpec& spec) {
  spec.validate();
  if (static_cast<int>(x.size()) != spec.qubits) {
    throw std::invalid_argument("encode: input has length " + std::to_string(x.size()) + " but spec has " +
                                std::to_string(spec.qubits) + " qubits");
  }
  const int n = spec.qubits;
  const int dim = spec.dim();
  std::vector<double> c(n), s(n);
  for (int j = 0; j < n; ++j) {
    c[j] = std::cos(x[j] / 2.0);
    s[j] = std::sin(x[j] / 2.0);
  }
  Eigen::VectorXcd psi(dim);
  for (int idx = 0; idx < dim; ++idx) {
    double amp = 1.0;
    int adjacent_ones = 0;
    for (int j = 0; j < n; ++j) {
      const int bit = (idx >> (n - 1 - j)) & 1;
      amp *= bit ? s[j] : c[j];
      if (j + 1 < n && bit && ((idx >> (n - 2 - j)) & 1)) ++adjacent_ones;
    }
    Complex phase(1.0, 0.0);
    if (spec.kind == Encoding::kAngleEntangled) {
      // i^k, exact.
      static constexpr Complex kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      phase = kPowI[adjacent_ones % 4];
    }
    psi(idx) = amp * phase;
  }
  return psi;
}

DensityMatrix encode(std::span<const double> x, const FeatureMapSpec& spec) {
  return DensityMatrix::pure(feature_state(x, spec));
}

double hs_inner(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("hs_inner: dimension mismatch");
  // For Hermitian b, tr(ab) = sum_ij Re(a_ij conj(b_ij)): a real dot product
  // over the interleaved storage.
  const double v = simd::dot(as_reals(a.matrix()), as_reals(b.matrix()));
  return std::clamp(v, 0.0, 1.0);
}

DensityMatrix depolarize(const DensityMatrix& rho, double p) {
  require_unit_interval_open(p, "depolarize");
  Eigen::MatrixXcd out = (1.0 - p) * rho.matrix();
  out.diagonal().array() += p / static_cast<double>(rho.dim());
  return DensityMatrix(std::move(out));
}

double effective_noise_q(double p) {
  require_unit_interval_open(p, "effective_noise_q");
  return 1.0 - (1.0 - p) * (1.0 - p);
}

KernelMatrix noisy_kernel_closed_form(const KernelMatrix& k, double p, int dim) {
  const double q = effective_noise_q(p);
  if (dim < 1) throw std::invalid_argument("noisy_kernel_closed_form: dim must be >= 1");
  if (k.size() > 0 && (k.matrix().minCoeff() < 0.0 || k.matrix().maxCoeff() > 1.0)) {
    throw std::invalid_argument("noisy_kernel_closed_form: kernel entries must lie in [0, 1]");
  }
  Eigen::MatrixXd out = (1.0 - q) * k.matrix();
  out.array() += q / static_cast<double>(dim);
  return KernelMatrix(std::move(out));
}

Observable random_observable(Rng& rng, int dim) {
  if (dim < 1) throw std::invalid_argument("random_observable: dim must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  // Fill column-major with a fixed draw order so a seed pins the matrix.
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
  for (int i = 0; i < dim; ++i) h(i, i) = Complex(h(i, i).real(), 0.0);
  Observable o(std::move(h));
  const double norm = o.operator_norm();
  o.m_ /= norm;
  return o;
}

double expectation(const DensityMatrix& rho, const Observable& o) {
  if (rho.dim() != o.dim()) throw std::invalid_argument("expectation: dimension mismatch");
  const double v = simd::dot(as_reals(rho.matrix()), as_reals(o.matrix()));
  return std::clamp(v, -1.0, 1.0);
}

double label(std::span<const double> x, const Observable& o, const FeatureMapSpec& spec) {
  if (o.dim() != spec.dim()) throw std::invalid_argument("label: observable dimension does not match spec");
  return expectation(encode(x, spec), o);
}

std::vector<double> draw_input(Rng& rng, int qubits) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<double> x(static_cast<std::size_t>(qubits));
  for (double& v : x) v = angle(rng);
  return x;
}

KernelMatrix gram_matrix(std::span<const DensityMatrix> states) {
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      k(i, j) = k(j, i) = hs_inner(states[i], states[j]);
    }
  }
  return KernelMatrix(std::move(k));
}

}  // namespace qkernel
