// Copyright 2026 The numctx Authors.
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

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "numctx/eval.h"

namespace numctx {
namespace {

std::string Pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * v);
  return buf;
}

std::string ConfigString(const TrainConfig& cfg) {
  std::ostringstream out;
  out << "classifier=" << AlgorithmName(cfg.algorithm);
  switch (cfg.algorithm) {
    case Algorithm::kKnn: out << " k=" << cfg.k; break;
    case Algorithm::kDecisionTree:
      out << " max_depth=" << cfg.max_depth << " min_leaf=" << cfg.min_leaf;
      break;
    case Algorithm::kLda: out << " shrinkage=" << cfg.shrinkage; break;
    case Algorithm::kLinearSvm: out << " c_reg=" << cfg.c_reg << " epochs=" << cfg.epochs; break;
  }
  return out.str();
}

std::string RunName(const RunSummary& run) {
  std::string name(AlgorithmName(run.config.algorithm));
  if (run.config.algorithm == Algorithm::kKnn) name += std::to_string(run.config.k);
  return name;
}

nlohmann::ordered_json RunJson(const RunSummary& run) {
  nlohmann::ordered_json j;
  j["extractor"] = ExtractorName(run.extractor);
  j["classifier"] = RunName(run);
  j["config"] = ConfigString(run.config);
  j["folds"] = run.folds;
  j["seed"] = run.seed;
  j["summary"] = {{"highest", run.summary.highest},
                  {"mean", run.summary.mean},
                  {"std", run.summary.std}};
  j["fold_accuracies"] = run.fold_accuracies;
  j["fold_sizes"] = run.fold_sizes;
  auto matrix = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < run.pooled.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < run.pooled.cols(); ++c) row.push_back(run.pooled(r, c));
    matrix.push_back(row);
  }
  j["confusion"] = {{"orientation", "rows=true, columns=predicted"},
                    {"aggregation", "pooled over folds"},
                    {"labels", nlohmann::ordered_json::array()},
                    {"counts", matrix}};
  auto per_class = nlohmann::ordered_json::object();
  for (FormatLabel l : kAllLabels) {
    j["confusion"]["labels"].push_back(LabelName(l));
    const auto m = MetricsFor(run.pooled, l);
    per_class[std::string(LabelName(l))] = {
        {"precision", m.precision}, {"recall", m.recall}, {"f_measure", m.f_measure}};
  }
  j["per_class"] = per_class;
  return j;
}

}  // namespace

std::string FormatRunReport(const RunSummary& run, ReportFormat format) {
  if (format == ReportFormat::kJson) return RunJson(run).dump(2) + "\n";

  std::ostringstream out;
  out << "# extractor=" << ExtractorName(run.extractor) << ' ' << ConfigString(run.config)
      << " folds=" << run.folds << " seed=" << run.seed << '\n';
  out << "# confusion matrix pooled over all folds; rows=true, columns=predicted\n";
  out << "true\\predicted";
  for (FormatLabel l : kAllLabels) out << '\t' << LabelName(l);
  out << "\tRecall (%)\n";
  for (FormatLabel t : kAllLabels) {
    const auto r = static_cast<Eigen::Index>(Index(t));
    out << LabelName(t);
    for (Eigen::Index c = 0; c < run.pooled.cols(); ++c) out << '\t' << run.pooled(r, c);
    out << '\t' << Pct(Recall(run.pooled, t)) << '\n';
  }
  out << "Precision (%)";
  for (FormatLabel l : kAllLabels) out << '\t' << Pct(Precision(run.pooled, l));
  out << "\t\n";
  out << "F-measure (%)";
  for (FormatLabel l : kAllLabels) out << '\t' << Pct(MetricsFor(run.pooled, l).f_measure);
  out << "\t\n\n";

  out << "classifier\textractor\tHighest Accuracy (%)\tMean Accuracy (%)\tStandard Deviation (%)\n";
  out << RunName(run) << '\t' << ExtractorName(run.extractor) << '\t' << Pct(run.summary.highest)
      << '\t' << Pct(run.summary.mean) << '\t' << Pct(run.summary.std) << "\n\n";

  out << "fold\tsize\taccuracy (%)\n";
  for (std::size_t f = 0; f < run.fold_accuracies.size(); ++f) {
    out << f + 1 << '\t' << run.fold_sizes[f] << '\t' << Pct(run.fold_accuracies[f]) << '\n';
  }
  return out.str();
}

std::string FormatComparisonReport(const RunSummary& context, const RunSummary& bow,
                                   ReportFormat format) {
  const double delta = context.summary.mean - bow.summary.mean;
  if (format == ReportFormat::kJson) {
    nlohmann::ordered_json j;
    j["classifier"] = RunName(context);
    j["folds"] = context.folds;
    j["seed"] = context.seed;
    j["context"] = RunJson(context);
    j["bow"] = RunJson(bow);
    j["delta_mean"] = delta;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "# mean classification accuracy, context vs bag-of-words; " << ConfigString(context.config)
      << " folds=" << context.folds << " seed=" << context.seed << '\n';
  out << "technique\tclassifier\tMean Accuracy (%)\tStandard Deviation (%)\tdelta vs bow (points)\n";
  out << "context\t" << RunName(context) << '\t' << Pct(context.summary.mean) << '\t'
      << Pct(context.summary.std) << '\t' << Pct(delta) << '\n';
  out << "bow\t" << RunName(bow) << '\t' << Pct(bow.summary.mean) << '\t' << Pct(bow.summary.std)
      << '\t' << Pct(0.0) << '\n';
  return out.str();
}

}  // namespace numctx
