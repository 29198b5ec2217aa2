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

#ifndef QKERNEL_BOUNDS_H_
#define QKERNEL_BOUNDS_H_

#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

#include "qkernel/kernel_matrix.h"

namespace qkernel {

// Generalization-bound right-hand sides with every hidden O(.) constant set
// to 1. Terms are reported separately so experiments compare ratios, not
// pass/fail against an unknown constant. Logarithms are natural.

enum class BoundVariant { kTheorem1, kRemark1, kTheorem2 };

std::string_view to_string(BoundVariant v);

struct BoundReport {
  BoundVariant variant = BoundVariant::kTheorem1;
  double term_regularizer = 0.0;
  double term_kernel = 0.0;  // Theorem 1 only
  double term_confidence = 0.0;
  double total = 0.0;
};

// Smallest admissible shot count: 8 N log(2N / delta) / lambda^2.
double m_threshold(int n, double lambda, double delta);

// N exp(-lambda^2 m / (8 N)). Not clamped: values >= 1 are vacuous.
double hoeffding_failure_bound(int n, double lambda, double m);
bool is_vacuous(double failure_bound);

// term_regularizer = sqrt(lambda^2 y^T (W + lambda I)^-2 y / N)
// term_kernel      = sqrt(y^T (W + lambda I)^-1 W (W + lambda I)^-1 y / N)
// term_confidence  = sqrt(log(1/delta) / N)
// lambda = 0 is accepted when W itself is invertible.
BoundReport theorem1_rhs(const Eigen::VectorXd& y, const KernelMatrix& w, double lambda, double delta, int n);

// term_regularizer = sqrt(lambda' y^T (W + lambda I)^-1 y / N), lambda' = max{1, lambda}.
BoundReport remark1_rhs(const Eigen::VectorXd& y, const KernelMatrix& w, double lambda, double delta, int n);

// term_regularizer = sqrt(lambda' y^T (K + lambda I)^-1 y / ((1 - p)^2 N)).
BoundReport theorem2_rhs(const Eigen::VectorXd& y, const KernelMatrix& k, double lambda, double p, double delta,
                         int n);

}  // namespace qkernel

#endif  // QKERNEL_BOUNDS_H_
