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

#ifndef QKERNEL_HARNESS_SWEEP_H_
#define QKERNEL_HARNESS_SWEEP_H_

#include <string_view>
#include <vector>

#include "qkernel/harness/campaign.h"
#include "qkernel/harness/config.h"

namespace qkernel::harness {

enum class SweepAxis { kShots, kNoise, kTrainingSize, kLambda };

std::string_view to_string(SweepAxis a);
// "m", "p", "N", "lambda".
SweepAxis parse_axis(std::string_view s);

struct SweepRow {
  SweepAxis axis = SweepAxis::kShots;
  double value = 0.0;
  CampaignSummary summary;
};

// `base` with the swept field set to `value` (m sweeps switch m_auto off).
ExperimentConfig config_at(const ExperimentConfig& base, SweepAxis axis, double value);

// One campaign per value; values must be strictly increasing. Throws
// ConfigError for unsorted values or an invalid per-point config.
std::vector<SweepRow> sweep(const ExperimentConfig& base, SweepAxis axis, const std::vector<double>& values);

}  // namespace qkernel::harness

#endif  // QKERNEL_HARNESS_SWEEP_H_
