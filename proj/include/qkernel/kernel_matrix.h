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

#ifndef QKERNEL_KERNEL_MATRIX_H_
#define QKERNEL_KERNEL_MATRIX_H_

#include <Eigen/Dense>

namespace qkernel {

// Real symmetric N x N matrix with exact storage symmetry: entry (i, j) and
// (j, i) are the same double. Holds the exact kernel K, the closed-form noisy
// kernel, shot estimates, and derived matrices such as K + lambda I.
// Positive semidefiniteness is not an invariant of the type; estimates need
// not be PSD.
class KernelMatrix {
 public:
  KernelMatrix() = default;

  // Throws std::invalid_argument unless `m` is square, finite and exactly symmetric.
  explicit KernelMatrix(Eigen::MatrixXd m);

  // (m + m^T) / 2, which is exactly symmetric in floating point.
  static KernelMatrix symmetrized(const Eigen::MatrixXd& m);
  static KernelMatrix identity(Eigen::Index n);
  static KernelMatrix zero(Eigen::Index n);

  Eigen::Index size() const { return m_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  const Eigen::MatrixXd& matrix() const { return m_; }

  // this + s * I
  KernelMatrix shifted(double s) const;
  KernelMatrix scaled(double s) const;

  friend KernelMatrix operator+(const KernelMatrix& a, const KernelMatrix& b);
  friend KernelMatrix operator-(const KernelMatrix& a, const KernelMatrix& b);
  friend bool operator==(const KernelMatrix& a, const KernelMatrix& b) { return a.m_ == b.m_; }

 private:
  struct Trusted {};
  KernelMatrix(Eigen::MatrixXd m, Trusted) : m_(std::move(m)) {}

  Eigen::MatrixXd m_;
};

}  // namespace qkernel

#endif  // QKERNEL_KERNEL_MATRIX_H_
