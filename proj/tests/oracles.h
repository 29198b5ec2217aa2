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

// Independent reference computations used by the unit tests. None of these
// call into the library under test.

#ifndef QKERNEL_TESTS_ORACLES_H_
#define QKERNEL_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace qkernel::oracle {

// Characteristic polynomial coefficients c[0..n] of det(zI - A), c[n] = 1,
// by the Faddeev-LeVerrier recursion in long double.
inline std::vector<long double> charpoly(const Eigen::MatrixXd& a) {
  const auto n = a.rows();
  using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const LMat al = a.cast<long double>();
  std::vector<long double> c(static_cast<std::size_t>(n) + 1, 0.0L);
  c[static_cast<std::size_t>(n)] = 1.0L;
  LMat m = LMat::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = al * m + c[static_cast<std::size_t>(n - k + 1)] * LMat::Identity(n, n);
    c[static_cast<std::size_t>(n - k)] = -(al * m).trace() / static_cast<long double>(k);
  }
  return c;
}

// Real roots of a monic polynomial via the eigenvalues of its companion
// matrix (general nonsymmetric solver), each polished by Newton steps on the
// long-double polynomial. Sorted ascending.
inline std::vector<double> companion_roots(const std::vector<long double>& c) {
  const auto n = static_cast<Eigen::Index>(c.size()) - 1;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) comp(i, n - 1) = -static_cast<double>(c[static_cast<std::size_t>(i)]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<double> roots;
  for (Eigen::Index i = 0; i < n; ++i) {
    long double z = es.eigenvalues()(i).real();
    for (int it = 0; it < 20; ++it) {
      long double p = 1.0L;
      long double dp = 0.0L;
      for (Eigen::Index k = n - 1; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + c[static_cast<std::size_t>(k)];
      }
      if (dp == 0.0L) break;
      const long double step = p / dp;
      z -= step;
      if (std::fabs(step) < 1e-18L * (1.0L + std::fabs(z))) break;
    }
    roots.push_back(static_cast<double>(z));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Gauss-Jordan inverse with partial pivoting.
inline Eigen::MatrixXd gauss_jordan_inverse(const Eigen::MatrixXd& a) {
  const auto n = a.rows();
  Eigen::MatrixXd aug(n, 2 * n);
  aug << a, Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (std::abs(aug(r, col)) > std::abs(aug(piv, col))) piv = r;
    }
    if (aug(piv, col) == 0.0) throw std::runtime_error("singular");
    aug.row(col).swap(aug.row(piv));
    aug.row(col) /= aug(col, col);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r != col) aug.row(r) -= aug(r, col) * aug.row(col);
    }
  }
  return aug.rightCols(n);
}

// Full D x D product then trace.
inline double trace_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a * b).trace().real(); }

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

// Angle encoding built from explicit gate matrices: RY(x_j) on |0> for each
// qubit (qubit 0 leftmost in the tensor product), then, if entangled, the
// 4 x 4 controlled-phase(pi/2) gate embedded on every adjacent pair.
inline Eigen::VectorXcd brute_force_state(const std::vector<double>& x, bool entangled) {
  using C = std::complex<double>;
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1, 1);
  for (int j = 0; j < n; ++j) {
    Eigen::MatrixXcd ry(2, 2);
    ry << std::cos(x[j] / 2), -std::sin(x[j] / 2), std::sin(x[j] / 2), std::cos(x[j] / 2);
    u = kron(u, ry);
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(1 << n);
  psi(0) = 1.0;
  psi = u * psi;
  if (entangled) {
    Eigen::MatrixXcd cp = Eigen::MatrixXcd::Identity(4, 4);
    cp(3, 3) = C(0.0, 1.0);
    for (int j = 0; j + 1 < n; ++j) {
      Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(1 << j, 1 << j);
      g = kron(kron(g, cp), Eigen::MatrixXcd::Identity(1 << (n - j - 2), 1 << (n - j - 2)));
      psi = g * psi;
    }
  }
  return psi;
}

// Random symmetric PSD matrix with entries O(1).
inline Eigen::MatrixXd random_psd(std::mt19937_64& rng, Eigen::Index n, Eigen::Index rank) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(n, rank);
  for (Eigen::Index j = 0; j < rank; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = g(rng);
  }
  Eigen::MatrixXd w = a * a.transpose() / static_cast<double>(std::max<Eigen::Index>(rank, 1));
  return (w + w.transpose()) / 2.0;
}

inline Eigen::VectorXd random_vector(std::mt19937_64& rng, Eigen::Index n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = u(rng);
  return v;
}

}  // namespace qkernel::oracle

#endif  // QKERNEL_TESTS_ORACLES_H_
