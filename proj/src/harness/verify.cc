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

#include "qkernel/harness/verify.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "qkernel/bounds.h"
#include "qkernel/harness/campaign.h"
#include "qkernel/harness/io.h"
#include "qkernel/harness/sweep.h"
#include "qkernel/learning.h"
#include "qkernel/linalg.h"
#include "qkernel/quantum.h"
#include "qkernel/sampling.h"
#include "qkernel/simd/kernels.h"

namespace qkernel::harness {
namespace {

using ojson = nlohmann::ordered_json;

enum SuiteId : uint64_t {
  kSuiteFactorization = 1,
  kSuiteUnbiased,
  kSuiteEvent,
  kSuiteSandwich,
  kSuiteRemark1,
  kSuiteAntimonotone,
  kSuiteSolve,
  kSuiteTheorem2,
  kSuiteStates,
  kSuiteShotRange,
  kSuiteDeterminism,
  kSuiteLearning,
  kSuiteReproducible,
};

Rng suite_rng(const ExperimentConfig& config, SuiteId id, uint64_t sub = 0) {
  return Rng(derive_seed(config.seed, StreamDomain::kSuite, id, sub));
}

uint64_t suite_seed(const ExperimentConfig& config, SuiteId id, uint64_t a, uint64_t b = 0) {
  return derive_seed(derive_seed(config.seed, StreamDomain::kSuite, id), StreamDomain::kShots, a, b);
}

// Shift the pipeline applies before the event check, honouring the fault.
double pipeline_shift(const ExperimentConfig& config, double lambda) {
  return config.fault == Fault::kDisableShift ? 0.0 : lambda / 2.0;
}

CheckResult make(std::string name, bool passed, std::string detail, ojson metrics = ojson::object()) {
  return {std::move(name), passed, std::move(detail), std::move(metrics)};
}

Eigen::MatrixXd gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = g(rng);
  }
  return m;
}

// Random PSD matrix of random rank in [0, n], entries O(1).
KernelMatrix random_psd(Rng& rng, Eigen::Index n) {
  std::uniform_int_distribution<Eigen::Index> rank_dist(0, n);
  const Eigen::Index r = rank_dist(rng);
  if (r == 0) return KernelMatrix::zero(n);
  const Eigen::MatrixXd a = gaussian_matrix(rng, n, r);
  return KernelMatrix::symmetrized(a * a.transpose() / static_cast<double>(r));
}

Eigen::VectorXd random_labels(Rng& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) y(i) = u(rng);
  return y;
}

// Random states for a (qubits, N) ensemble from the configured encoding.
std::vector<DensityMatrix> random_states(Rng& rng, const FeatureMapSpec& spec, int count) {
  std::vector<DensityMatrix> states;
  states.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) states.push_back(encode(draw_input(rng, spec.qubits), spec));
  return states;
}

double binomial_sigma(double p, int trials) { return std::sqrt(std::max(p * (1.0 - p), 0.0) / trials); }

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool non_increasing_with_one_inversion(const std::vector<double>& medians, const std::vector<double>& iqrs) {
  int inversions = 0;
  for (std::size_t i = 1; i < medians.size(); ++i) {
    if (!std::isfinite(medians[i]) || !std::isfinite(medians[i - 1])) return false;
    const double rise = medians[i] - medians[i - 1];
    if (rise > 0.0) {
      ++inversions;
      if (rise > std::max(iqrs[i], iqrs[i - 1])) return false;
    }
  }
  return inversions <= 1;
}

CheckResult check_noisy_kernel_factorization(const ExperimentConfig& config) {
  Rng rng = suite_rng(config, kSuiteFactorization);
  constexpr std::array<double, 3> kNoise = {0.1, 0.3, 0.7};
  std::uniform_int_distribution<int> qubit_dist(1, 3);
  std::uniform_int_distribution<int> size_dist(1, 8);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const FeatureMapSpec spec{qubit_dist(rng), config.encoding};
    const int n = size_dist(rng);
    const double p = kNoise[static_cast<std::size_t>(trial) % kNoise.size()];
    const auto states = random_states(rng, spec, n);
    const KernelMatrix closed = noisy_kernel_closed_form(gram_matrix(states), p, spec.dim());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double direct = hs_inner(depolarize(states[i], p), depolarize(states[j], p));
        worst = std::max(worst, std::abs(direct - closed(i, j)));
      }
    }
  }
  return make("noisy_kernel_factorization", worst <= 1e-12, "max |tr(rho~_i rho~_j) - closed form| <= 1e-12",
              {{"max_abs_diff", worst}, {"ensembles", 100}});
}

CheckResult check_estimator_unbiasedness(const ExperimentConfig& config) {
  constexpr int kRepetitions = 100000;
  constexpr std::array<double, 4> kOverlaps = {0.0, 0.25, 0.625, 1.0};
  constexpr std::array<uint64_t, 2> kShots = {1, 8};
  const ShotModel base = config.shot_model();
  bool ok = true;
  ojson cases = ojson::array();
  for (SwapTestMode mode : {SwapTestMode::kIdealized, SwapTestMode::kPhysical}) {
    const ShotModel model{mode, base.bias};
    for (double t : kOverlaps) {
      for (uint64_t m : kShots) {
        ShotStream stream(suite_seed(config, kSuiteUnbiased, static_cast<uint64_t>(mode) * 100 + m,
                                     static_cast<uint64_t>(t * 1000)));
        double sum = 0.0;
        for (int r = 0; r < kRepetitions; ++r) sum += estimate_entry(t, m, model, stream);
        const double mean = sum / kRepetitions;
        const double v = mode == SwapTestMode::kIdealized ? t * (1.0 - t) : 1.0 - t * t;
        const double gate = 3.0 * std::sqrt(v / (static_cast<double>(m) * kRepetitions));
        const bool pass = std::abs(mean - t) <= gate;
        ok = ok && pass;
        cases.push_back({{"mode", std::string(to_string(mode))}, {"t", t}, {"m", m}, {"mean", mean},
                         {"gate", gate}, {"passed", pass}});
      }
    }
  }
  return make("estimator_unbiasedness", ok, "|mean of 1e5 estimates - t| <= 3 sqrt(v/(m 1e5))",
              {{"cases", std::move(cases)}});
}

CheckResult check_hoeffding_event_frequency(const ExperimentConfig& config) {
  constexpr int kTrials = 400;
  constexpr int kN = 8;
  constexpr double kLambda = 1.0;
  constexpr double kNoise = 0.3;
  const FeatureMapSpec spec{2, config.encoding};
  const uint64_t m_auto = static_cast<uint64_t>(std::ceil(m_threshold(kN, kLambda, 0.1)));
  // m_auto, plus a smaller m whose bound is still <= 0.2.
  const std::array<uint64_t, 2> shot_points = {m_auto, 250};
  const double shift = pipeline_shift(config, kLambda);

  bool ok = true;
  ojson points = ojson::array();
  for (uint64_t m : shot_points) {
    Rng rng = suite_rng(config, kSuiteEvent, m);
    int failures = 0;
    int physical_failures = 0;
    for (int t = 0; t < kTrials; ++t) {
      const auto states = random_states(rng, spec, kN);
      const KernelMatrix k_tilde = noisy_kernel_closed_form(gram_matrix(states), kNoise, spec.dim());
      const ShotModel model{SwapTestMode::kIdealized, config.shot_model().bias};
      const auto k_hat = estimate_kernel(k_tilde, m, model, suite_seed(config, kSuiteEvent, m, t));
      if (!shift_event(k_hat.entries, k_tilde, shift)) ++failures;
      const ShotModel physical{SwapTestMode::kPhysical, config.shot_model().bias};
      const auto k_phys = estimate_kernel(k_tilde, m, physical, suite_seed(config, kSuiteEvent, m, t + kTrials));
      if (!shift_event(k_phys.entries, k_tilde, shift)) ++physical_failures;
    }
    const double bound = hoeffding_failure_bound(kN, kLambda, static_cast<double>(m));
    const double bound_with_diagonal = (kN + 1) * std::exp(-kLambda * kLambda * m / (8.0 * (kN + 1)));
    const double rate = static_cast<double>(failures) / kTrials;
    const double gate = bound + 3.0 * binomial_sigma(bound, kTrials);
    const bool pass = rate <= gate;
    ok = ok && pass;
    points.push_back({{"N", kN},
                      {"lambda", kLambda},
                      {"m", m},
                      {"trials", kTrials},
                      {"failure_rate", rate},
                      {"hoeffding_bound", bound},
                      {"bound_with_diagonal_variance", bound_with_diagonal},
                      {"gate", gate},
                      {"physical_failure_rate_info", static_cast<double>(physical_failures) / kTrials},
                      {"passed", pass}});
  }
  return make("hoeffding_event_frequency", ok,
              "failure rate of K^ + (lambda/2) I >= K~ <= N exp(-lambda^2 m / 8N) + 3 sigma (idealized shots)",
              {{"points", std::move(points)}});
}

CheckResult check_sandwich_chain(const ExperimentConfig& config) {
  constexpr int kN = 6;
  constexpr double kLambda = 1.0;
  const FeatureMapSpec spec{2, config.encoding};
  const uint64_t m = static_cast<uint64_t>(std::ceil(m_threshold(kN, kLambda, 0.1)));
  const double shift = pipeline_shift(config, kLambda);
  struct Point {
    double p;
    int trials;
  };
  constexpr std::array<Point, 2> kPoints = {{{0.3, 500}, {0.0, 200}}};

  bool ok = true;
  ojson points = ojson::array();
  for (const Point& pt : kPoints) {
    Rng rng = suite_rng(config, kSuiteSandwich, static_cast<uint64_t>(pt.p * 10));
    const double q = effective_noise_q(pt.p);
    int events = 0;
    int violations = 0;
    int min_eig_violations = 0;
    for (int t = 0; t < pt.trials; ++t) {
      const auto states = random_states(rng, spec, kN);
      const KernelMatrix k = gram_matrix(states);
      const KernelMatrix k_tilde = noisy_kernel_closed_form(k, pt.p, spec.dim());
      const auto k_hat = estimate_kernel(k_tilde, m, config.shot_model(),
                                         suite_seed(config, kSuiteSandwich, static_cast<uint64_t>(pt.p * 10), t));
      if (!psd_shift_event(k_hat.entries, k_tilde, kLambda)) continue;
      ++events;
      // The matrix the pipeline inverts: W + (lambda/2) I with W = K^ + shift I.
      const KernelMatrix training = k_hat.entries.shifted(shift + kLambda / 2.0);
      if (!sandwich_holds_for(training, k, kLambda, q)) ++violations;
      if (min_eig(training) < min_eig(k_tilde) + kLambda / 2.0 - 2e-9) ++min_eig_violations;
    }
    const bool pass = events > 0 && violations == 0 && min_eig_violations == 0;
    ok = ok && pass;
    points.push_back({{"p", pt.p},
                      {"m", m},
                      {"trials", pt.trials},
                      {"event_trials", events},
                      {"sandwich_violations", violations},
                      {"min_eig_violations", min_eig_violations},
                      {"passed", pass}});
  }
  return make("sandwich_chain", ok,
              "under the shift event, (training matrix)^-1 <= 2/(1-q) (K + lambda I)^-1 and "
              "min_eig >= min_eig(K~) + lambda/2 in every trial",
              {{"points", std::move(points)}});
}

CheckResult check_remark1_algebra(const ExperimentConfig& config) {
  Rng rng = suite_rng(config, kSuiteRemark1);
  constexpr std::array<double, 5> kLambdas = {0.01, 0.5, 1.0, 3.0, 10.0};
  std::uniform_int_distribution<int> size_dist(1, 8);
  int operator_violations = 0;
  int consolidation_violations = 0;
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = size_dist(rng);
    const KernelMatrix w = random_psd(rng, n);
    const Eigen::VectorXd y = random_labels(rng, n);
    for (double lambda : kLambdas) {
      if (!remark1_operator_check(w, lambda)) ++operator_violations;
      const BoundReport t1 = theorem1_rhs(y, w, lambda, 0.1, n);
      const BoundReport r1 = remark1_rhs(y, w, lambda, 0.1, n);
      const double lhs = t1.term_regularizer + t1.term_kernel;
      const double rhs = 2.0 * r1.term_regularizer;
      if (rhs > 0.0) worst_ratio = std::max(worst_ratio, lhs / rhs);
      if (lhs > rhs * (1.0 + 1e-12) + 1e-15) ++consolidation_violations;
    }
  }
  const bool ok = operator_violations == 0 && consolidation_violations == 0;
  return make("remark1_algebra", ok,
              "lambda'(W + lambda I) >= W + lambda^2 I and theorem1_rhs terms <= 2 x remark1_rhs term",
              {{"instances", 100},
               {"operator_violations", operator_violations},
               {"consolidation_violations", consolidation_violations},
               {"max_lhs_over_rhs", worst_ratio}});
}

CheckResult check_threshold_inversion(const ExperimentConfig&) {
  constexpr std::array<int, 3> kSizes = {1, 8, 64};
  constexpr std::array<double, 3> kLambdas = {0.1, 1.0, 3.0};
  constexpr std::array<double, 3> kDeltas = {0.01, 0.1, 0.5};
  double worst = 0.0;
  for (int n : kSizes) {
    for (double lambda : kLambdas) {
      for (double delta : kDeltas) {
        const double b = hoeffding_failure_bound(n, lambda, m_threshold(n, lambda, delta));
        worst = std::max(worst, std::abs(b - delta / 2.0) / (delta / 2.0));
      }
    }
  }
  return make("threshold_inversion", worst <= 1e-12, "hoeffding_failure_bound(m_threshold) = delta/2 (rel 1e-12)",
              {{"max_rel_error", worst}});
}

namespace {

CheckResult check_inverse_antimonotone(const ExperimentConfig& config) {
  Rng rng = suite_rng(config, kSuiteAntimonotone);
  std::uniform_int_distribution<int> size_dist(1, 8);
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size_dist(rng);
    const KernelMatrix b = random_psd(rng, n).shifted(0.01);
    const KernelMatrix a = b + random_psd(rng, n);
    if (!loewner_geq(spd_inverse(b), spd_inverse(a), 1e-8)) ++violations;
  }
  return make("inverse_antimonotone", violations == 0, "A >= B >= 0.01 I implies B^-1 >= A^-1",
              {{"trials", 200}, {"violations", violations}});
}

CheckResult check_solve_round_trip(const ExperimentConfig& config) {
  Rng rng = suite_rng(config, kSuiteSolve);
  std::uniform_int_distribution<int> size_dist(1, 12);
  std::uniform_real_distribution<double> log_cond(0.0, 6.0);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size_dist(rng);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian_matrix(rng, n, n));
    const Eigen::MatrixXd q = qr.householderQ();
    const double c = std::pow(10.0, log_cond(rng));
    Eigen::VectorXd spectrum(n);
    for (int i = 0; i < n; ++i) spectrum(i) = n == 1 ? 1.0 : std::pow(c, -static_cast<double>(i) / (n - 1));
    const KernelMatrix a = KernelMatrix::symmetrized(q * spectrum.asDiagonal() * q.transpose());
    const Eigen::VectorXd y = random_labels(rng, n);
    if (y.norm() == 0.0) continue;
    const Eigen::VectorXd x = solve_spd(a, y);
    worst = std::max(worst, (a.matrix() * x - y).norm() / y.norm());
  }
  return make("solve_round_trip", worst <= 1e-8, "||A solve_spd(A, y) - y|| / ||y|| <= 1e-8 for cond <= 1e6",
              {{"max_rel_residual", worst}});
}

CheckResult check_theorem2_monotone(const ExperimentConfig& config) {
  Rng rng = suite_rng(config, kSuiteTheorem2);
  constexpr std::array<double, 6> kNoise = {0.0, 0.1, 0.3, 0.5, 0.7, 0.9};
  int violations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 8;
    const KernelMatrix k = random_psd(rng, n);
    const Eigen::VectorXd y = random_labels(rng, n);
    double prev = -1.0;
    for (double p : kNoise) {
      const double total = theorem2_rhs(y, k, 1.0, p, 0.1, n).total;
      if (total < prev) ++violations;
      prev = total;
    }
  }
  return make("theorem2_monotone_in_p", violations == 0, "theorem2_rhs non-decreasing in p",
              {{"violations", violations}});
}

CheckResult check_state_invariants(const ExperimentConfig& config) {
  Rng rng = suite_rng(config, kSuiteStates);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double purity_defect = 0.0;
  int range_violations = 0;
  int asymmetric = 0;
  int invalid_depolarized = 0;
  int label_violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    for (Encoding kind : {Encoding::kAngleProduct, Encoding::kAngleEntangled}) {
      const FeatureMapSpec spec{1 + trial % 3, kind};
      const auto states = random_states(rng, spec, 2);
      purity_defect = std::max(purity_defect, std::abs(states[0].purity() - 1.0));
      const double ab = hs_inner(states[0], states[1]);
      const double ba = hs_inner(states[1], states[0]);
      if (ab != ba) ++asymmetric;
      if (ab < 0.0 || ab > 1.0) ++range_violations;
      const double p = std::min(unit(rng), 0.999999);
      try {
        (void)DensityMatrix::from_matrix(depolarize(states[0], p).matrix());
      } catch (const std::invalid_argument&) {
        ++invalid_depolarized;
      }
      Rng obs_rng(derive_seed(config.seed, StreamDomain::kSuite, kSuiteStates, static_cast<uint64_t>(trial)));
      const Observable o = random_observable(obs_rng, spec.dim());
      const double y = label(draw_input(rng, spec.qubits), o, spec);
      if (std::abs(y) > 1.0) ++label_violations;
    }
  }
  const bool ok = purity_defect <= 1e-10 && range_violations == 0 && asymmetric == 0 && invalid_depolarized == 0 &&
                  label_violations == 0;
  return make("state_invariants", ok,
              "encode purity 1, hs_inner symmetric in [0,1], depolarize keeps density invariants, |label| <= 1",
              {{"max_purity_defect", purity_defect},
               {"hs_range_violations", range_violations},
               {"hs_asymmetric", asymmetric},
               {"invalid_depolarized", invalid_depolarized},
               {"label_violations", label_violations}});
}

CheckResult check_shot_range(const ExperimentConfig& config) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Rng rng = suite_rng(config, kSuiteShotRange);
  double worst_ideal = 0.0;
  double worst_physical = 0.0;
  ShotStream stream(suite_seed(config, kSuiteShotRange, 0));
  for (int i = 0; i < 100000; ++i) {
    const double t = unit(rng);
    worst_ideal = std::max(worst_ideal, std::abs(t - swap_test_shot(t, SwapTestMode::kIdealized, stream)));
    worst_physical = std::max(worst_physical, std::abs(t - swap_test_shot(t, SwapTestMode::kPhysical, stream)));
  }
  const bool ok = worst_ideal <= 1.0 && worst_physical <= 2.0;
  return make("shot_range", ok, "|K~_ij - R_ij| <= 1 (idealized), <= 2 (physical)",
              {{"max_dev_idealized", worst_ideal}, {"max_dev_physical", worst_physical}});
}

CheckResult check_sampling_determinism(const ExperimentConfig& config) {
  Rng rng = suite_rng(config, kSuiteDeterminism);
  const FeatureMapSpec spec{2, config.encoding};
  const KernelMatrix k_tilde = noisy_kernel_closed_form(gram_matrix(random_states(rng, spec, 12)), 0.2, spec.dim());
  const uint64_t seed = suite_seed(config, kSuiteDeterminism, 0);
  const auto serial = estimate_kernel(k_tilde, 1000, config.shot_model(), seed, 1);
  const auto parallel = estimate_kernel(k_tilde, 1000, config.shot_model(), seed, 4);
  bool ok = serial.entries == parallel.entries;

  bool isa_ok = true;
  const simd::Isa saved = simd::active_isa();
  std::vector<KernelMatrix> per_isa;
  for (simd::Isa isa : {simd::Isa::kScalar, simd::Isa::kAvx2}) {
    if (!simd::isa_supported(isa)) continue;
    simd::set_isa(isa);
    per_isa.push_back(estimate_kernel(k_tilde, 1000, config.shot_model(), seed, 1).entries);
  }
  simd::set_isa(saved);
  for (const KernelMatrix& m : per_isa) isa_ok = isa_ok && m == per_isa.front();
  ok = ok && isa_ok;
  return make("sampling_determinism", ok, "estimate_kernel bit-identical across thread counts and ISAs",
              {{"threads_identical", serial.entries == parallel.entries},
               {"isas_compared", static_cast<int>(per_isa.size())},
               {"isas_identical", isa_ok}});
}

CheckResult check_learning_limits(const ExperimentConfig& config) {
  Rng rng = suite_rng(config, kSuiteLearning);
  const FeatureMapSpec spec{3, Encoding::kAngleEntangled};
  const int n = 4;
  const auto states = random_states(rng, spec, n);
  const KernelMatrix k = gram_matrix(states);
  const Eigen::VectorXd y = random_labels(rng, n);

  const TrainedModel interp = train(k, y, 1e-10);
  double interp_dev = 0.0;
  for (int i = 0; i < n; ++i) {
    std::vector<double> row(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = k(i, j);
    interp_dev = std::max(interp_dev, std::abs(predict(interp, row) - clip(y(i))));
  }

  const double big = 1e6;
  const TrainedModel shrink = train(k, y, big);
  double shrink_dev = 0.0;
  for (int i = 0; i < n; ++i) {
    if (y(i) != 0.0) shrink_dev = std::max(shrink_dev, std::abs(shrink.alpha(i) * big / y(i) - 1.0));
  }

  double out_of_range = 0.0;
  std::uniform_real_distribution<double> wide(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = clip(wide(rng));
    out_of_range = std::max(out_of_range, std::abs(v) - 1.0);
  }
  const bool ok = interp_dev <= 1e-6 && shrink_dev <= 1e-4 && out_of_range <= 0.0;
  return make("learning_limits", ok, "interpolation at lambda=1e-10, shrinkage alpha ~ y/lambda at 1e6, |h| <= 1",
              {{"interpolation_dev", interp_dev}, {"shrinkage_rel_dev", shrink_dev}});
}

CheckResult check_campaign_reproducible(const ExperimentConfig& config) {
  ExperimentConfig c = config;
  c.n_train = 8;
  c.n_test = 100;
  c.trials = 4;
  c.qubits = 2;
  c.m_auto = true;
  const std::string first = runs_to_csv(run_campaign(c).records);
  const std::string second = runs_to_csv(run_campaign(c).records);
  c.threads = 3;
  const std::string threaded = runs_to_csv(run_campaign(c).records);
  const bool ok = first == second && first == threaded;
  return make("campaign_reproducible", ok, "identical config gives byte-identical CSV (also across thread counts)",
              {{"bytes", first.size()}});
}

}  // namespace

CheckResult check_end_to_end_trends(const ExperimentConfig& config) {
  ExperimentConfig base = config;
  base.n_train = 32;
  base.lambda = 1.0;
  base.trials = 20;
  base.fault = config.fault;

  // Error versus m at p = 0.3, starting from m_auto.
  ExperimentConfig m_base = base;
  m_base.p = 0.3;
  m_base.m_auto = true;
  const auto m0 = static_cast<double>(m_base.shots());
  const auto m_rows = sweep(m_base, SweepAxis::kShots, {m0, 4 * m0, 16 * m0});
  std::vector<double> medians, iqrs;
  for (const auto& r : m_rows) {
    medians.push_back(r.summary.median_error);
    iqrs.push_back(r.summary.iqr_error);
  }
  const bool m_ok = non_increasing_with_one_inversion(medians, iqrs);

  // Bound and ratio versus p at m_auto with exact test rows.
  ExperimentConfig p_base = base;
  p_base.m_auto = true;
  p_base.test_eval = TestEval::kExactRow;
  const std::vector<double> noise = {0.0, 0.3, 0.5};
  const auto p_rows = sweep(p_base, SweepAxis::kNoise, noise);
  double worst_scaling = 0.0;
  std::vector<double> ratios;
  for (const auto& r : p_rows) {
    const double expected = p_rows.front().summary.mean_theorem2_regularizer / (1.0 - r.value);
    worst_scaling = std::max(worst_scaling, std::abs(r.summary.mean_theorem2_regularizer - expected) / expected);
    ratios.push_back(r.summary.median_ratio);
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  const bool ratios_finite = std::all_of(ratios.begin(), ratios.end(), [](double v) { return std::isfinite(v) && v > 0; });
  const double spread = ratios_finite ? *hi / *lo : std::numeric_limits<double>::infinity();
  const bool p_ok = worst_scaling <= 1e-12 && spread <= 3.0;

  return make("end_to_end_trends", m_ok && p_ok,
              "median error non-increasing in m (<= 1 inversion within 1 IQR); theorem2_rhs regularizer term scales "
              "as 1/(1-p); median error/bound ratio within a factor of 3 across p",
              {{"m_values", {m0, 4 * m0, 16 * m0}},
               {"m_medians", medians},
               {"m_iqrs", iqrs},
               {"m_trend_ok", m_ok},
               {"p_values", noise},
               {"p_median_ratios", ratios},
               {"ratio_spread", spread},
               {"max_scaling_rel_error", worst_scaling}});
}

const std::vector<SuiteCheck>& suite_checks() {
  static const std::vector<SuiteCheck> checks = {
      {"state_invariants", false, check_state_invariants},
      {"noisy_kernel_factorization", false, check_noisy_kernel_factorization},
      {"estimator_unbiasedness", false, check_estimator_unbiasedness},
      {"shot_range", false, check_shot_range},
      {"sampling_determinism", false, check_sampling_determinism},
      {"hoeffding_event_frequency", false, check_hoeffding_event_frequency},
      {"sandwich_chain", false, check_sandwich_chain},
      {"remark1_algebra", false, check_remark1_algebra},
      {"threshold_inversion", false, check_threshold_inversion},
      {"inverse_antimonotone", false, check_inverse_antimonotone},
      {"solve_round_trip", false, check_solve_round_trip},
      {"theorem2_monotone_in_p", false, check_theorem2_monotone},
      {"learning_limits", false, check_learning_limits},
      {"campaign_reproducible", false, check_campaign_reproducible},
      {"end_to_end_trends", true, check_end_to_end_trends},
  };
  return checks;
}

VerifyReport verify_suite(const ExperimentConfig& config, const VerifyOptions& options) {
  VerifyReport report;
  for (const SuiteCheck& check : suite_checks()) {
    if (check.slow && options.skip_slow) continue;
    try {
      report.checks.push_back(check.run(config));
    } catch (const std::exception& e) {
      report.checks.push_back(make(check.name, false, std::string("exception: ") + e.what()));
    }
  }
  return report;
}

ojson report_to_json(const VerifyReport& report) {
  ojson j;
  j["passed"] = report.passed();
  j["isa"] = simd::isa_name(simd::active_isa());
  ojson checks = ojson::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"metrics", c.metrics}});
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace qkernel::harness
