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

#ifndef QKERNEL_HARNESS_IO_H_
#define QKERNEL_HARNESS_IO_H_

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qkernel/bounds.h"
#include "qkernel/harness/campaign.h"
#include "qkernel/harness/problem.h"
#include "qkernel/harness/sweep.h"

namespace qkernel::harness {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Column order is part of the format; do not reorder.
inline constexpr const char* kRunCsvHeader =
    "trial,seed,event_ok,empirical_error,remark1_bound,theorem2_bound,theorem2_regularizer,"
    "error_to_bound_ratio,min_eig_Khat,max_abs_dev";
inline constexpr const char* kSweepCsvHeader =
    "axis,value,m,trials,event_failures,event_failure_rate,hoeffding_bound,successful,median_error,iqr_error,"
    "mean_remark1_bound,mean_theorem2_bound,mean_theorem2_regularizer,median_ratio";

// 17 significant digits ("%.17g"); NaN and absent values serialize as "".
std::string format_double(double v);

std::string runs_to_csv(const std::vector<RunRecord>& records);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

nlohmann::ordered_json summary_to_json(const CampaignSummary& s);
nlohmann::ordered_json campaign_to_json(const CampaignResult& r);
nlohmann::ordered_json bound_to_json(const BoundReport& b);

nlohmann::ordered_json problem_to_json(const ExperimentConfig& config, const Problem& problem);
// Inverse of problem_to_json; recomputes nothing. Throws IoError on malformed input.
Problem problem_from_json(const nlohmann::json& j, ExperimentConfig* config_out = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace qkernel::harness

#endif  // QKERNEL_HARNESS_IO_H_
