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

#include "qkernel/harness/sweep.h"

#include <cmath>
#include <string>

namespace qkernel::harness {
namespace {

int as_count(double v, const char* what) {
  if (!(v >= 1.0) || v != std::floor(v)) throw ConfigError(std::string("sweep: ") + what + " values must be positive integers");
  return static_cast<int>(v);
}

}  // namespace

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::kShots:
      return "m";
    case SweepAxis::kNoise:
      return "p";
    case SweepAxis::kTrainingSize:
      return "N";
    case SweepAxis::kLambda:
      return "lambda";
  }
  return "unknown";
}

SweepAxis parse_axis(std::string_view s) {
  if (s == "m") return SweepAxis::kShots;
  if (s == "p") return SweepAxis::kNoise;
  if (s == "N") return SweepAxis::kTrainingSize;
  if (s == "lambda") return SweepAxis::kLambda;
  throw ConfigError("unknown sweep axis: " + std::string(s));
}

ExperimentConfig config_at(const ExperimentConfig& base, SweepAxis axis, double value) {
  ExperimentConfig c = base;
  switch (axis) {
    case SweepAxis::kShots:
      c.m = static_cast<uint64_t>(as_count(value, "m"));
      c.m_auto = false;
      break;
    case SweepAxis::kNoise:
      c.p = value;
      break;
    case SweepAxis::kTrainingSize:
      c.n_train = as_count(value, "N");
      break;
    case SweepAxis::kLambda:
      c.lambda = value;
      break;
  }
  c.validate();
  return c;
}

std::vector<SweepRow> sweep(const ExperimentConfig& base, SweepAxis axis, const std::vector<double>& values) {
  if (values.empty()) throw ConfigError("sweep: no values given");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) throw ConfigError("sweep: values must be strictly increasing");
  }
  std::vector<ExperimentConfig> configs;
  configs.reserve(values.size());
  for (double v : values) configs.push_back(config_at(base, axis, v));

  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    rows.push_back({axis, values[i], run_campaign(configs[i]).summary});
  }
  return rows;
}

}  // namespace qkernel::harness
