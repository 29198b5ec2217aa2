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

#include "qkernel/harness/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace qkernel::harness {
namespace {

using ojson = nlohmann::ordered_json;

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

ojson json_number(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

ojson matrix_to_json(const Eigen::MatrixXd& m) {
  ojson rows = ojson::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::MatrixXd m(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != rows) throw IoError("problem file: matrix is not square");
    for (Eigen::Index c = 0; c < rows; ++c) m(i, c) = row.at(static_cast<std::size_t>(c)).get<double>();
  }
  return m;
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return {};
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string runs_to_csv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  out << kRunCsvHeader << '\n';
  for (const RunRecord& r : records) {
    out << r.trial << ',' << r.seed << ',' << (r.event_ok ? 1 : 0) << ',' << opt(r.empirical_error) << ','
        << opt(r.remark1_bound) << ',' << format_double(r.theorem2_bound) << ','
        << format_double(r.theorem2_regularizer) << ',' << opt(r.error_to_bound_ratio) << ','
        << format_double(r.min_eig_khat) << ',' << format_double(r.max_abs_dev) << '\n';
  }
  return out.str();
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    const CampaignSummary& s = row.summary;
    const double rate = s.trials > 0 ? static_cast<double>(s.event_failures) / s.trials : 0.0;
    out << to_string(row.axis) << ',' << format_double(row.value) << ',' << s.shots << ',' << s.trials << ','
        << s.event_failures << ',' << format_double(rate) << ',' << format_double(s.hoeffding_bound) << ','
        << s.successful << ',' << format_double(s.median_error) << ',' << format_double(s.iqr_error) << ','
        << format_double(s.mean_remark1_bound) << ',' << format_double(s.mean_theorem2_bound) << ','
        << format_double(s.mean_theorem2_regularizer) << ',' << format_double(s.median_ratio) << '\n';
  }
  return out.str();
}

ojson summary_to_json(const CampaignSummary& s) {
  ojson j;
  j["shots"] = s.shots;
  j["trials"] = s.trials;
  j["event_failures"] = s.event_failures;
  j["event_failure_rate"] = s.trials > 0 ? static_cast<double>(s.event_failures) / s.trials : 0.0;
  j["hoeffding_failure_bound"] = s.hoeffding_bound;
  j["hoeffding_vacuous"] = s.hoeffding_vacuous;
  j["successful"] = s.successful;
  j["median_error"] = json_number(s.median_error);
  j["iqr_error"] = json_number(s.iqr_error);
  j["mean_remark1_bound"] = json_number(s.mean_remark1_bound);
  j["mean_theorem2_bound"] = json_number(s.mean_theorem2_bound);
  j["mean_theorem2_regularizer"] = json_number(s.mean_theorem2_regularizer);
  j["median_error_to_bound_ratio"] = json_number(s.median_ratio);
  return j;
}

ojson campaign_to_json(const CampaignResult& r) {
  ojson j;
  j["config"] = to_json(r.config);
  j["summary"] = summary_to_json(r.summary);
  // Failure sources reported separately: the shot-event budget (delta/2 in
  // the threshold choice) and the dataset draw, which is not observable here.
  ojson budget;
  budget["delta"] = r.config.delta;
  budget["event_budget"] = r.config.delta / 2.0;
  budget["event_failure_rate"] = j["summary"]["event_failure_rate"];
  budget["dataset_budget"] = r.config.delta / 2.0;
  j["failure_budget"] = std::move(budget);
  ojson times = ojson::array();
  for (const RunRecord& rec : r.records) times.push_back(rec.wall_time);
  j["wall_time_seconds"] = std::move(times);
  return j;
}

ojson bound_to_json(const BoundReport& b) {
  ojson j;
  j["variant"] = std::string(to_string(b.variant));
  j["term_regularizer"] = b.term_regularizer;
  if (b.variant == BoundVariant::kTheorem1) j["term_kernel"] = b.term_kernel;
  j["term_confidence"] = b.term_confidence;
  j["total"] = b.total;
  return j;
}

ojson problem_to_json(const ExperimentConfig& config, const Problem& problem) {
  ojson j;
  j["config"] = to_json(config);
  j["p"] = problem.p;
  const Eigen::MatrixXcd& o = problem.observable.matrix();
  j["observable"]["real"] = matrix_to_json(o.real());
  j["observable"]["imag"] = matrix_to_json(o.imag());
  j["inputs"] = problem.inputs;
  j["labels"] = std::vector<double>(problem.labels.data(), problem.labels.data() + problem.labels.size());
  j["kernel"] = matrix_to_json(problem.kernel.matrix());
  j["noisy_kernel"] = matrix_to_json(problem.noisy_kernel.matrix());
  return j;
}

Problem problem_from_json(const nlohmann::json& j, ExperimentConfig* config_out) {
  try {
    const ExperimentConfig config = config_from_json(j.at("config"));
    if (config_out) *config_out = config;
    Eigen::MatrixXcd o(matrix_from_json(j.at("observable").at("real")).cast<Complex>());
    o.imag() = matrix_from_json(j.at("observable").at("imag"));
    auto inputs = j.at("inputs").get<std::vector<std::vector<double>>>();
    const auto labels = j.at("labels").get<std::vector<double>>();
    Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(labels.data(), static_cast<Eigen::Index>(labels.size()));
    return Problem{config.feature_map(),
                   Observable::from_matrix(std::move(o)),
                   std::move(inputs),
                   std::move(y),
                   KernelMatrix(matrix_from_json(j.at("kernel"))),
                   KernelMatrix(matrix_from_json(j.at("noisy_kernel"))),
                   j.at("p").get<double>()};
  } catch (const ConfigError&) {
    throw;
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    throw IoError(std::string("malformed problem file: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace qkernel::harness
