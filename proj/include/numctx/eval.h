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

#ifndef NUMCTX_EVAL_H_
#define NUMCTX_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "numctx/classifiers.h"
#include "numctx/context_features.h"
#include "numctx/corpus.h"
#include "numctx/label.h"

namespace numctx {

// Rows are true labels, columns predicted labels, both in FormatLabel order.
using ConfusionMatrix = Eigen::Matrix<std::int64_t, 6, 6>;

inline ConfusionMatrix EmptyConfusion() { return ConfusionMatrix::Zero(); }

// Diagonal over column sum; 1.0 when the class was never predicted.
double Precision(const ConfusionMatrix& cm, FormatLabel c);
// Diagonal over row sum; 1.0 when the class never occurs.
double Recall(const ConfusionMatrix& cm, FormatLabel c);
// Harmonic mean; 0 when p + r == 0.
double FMeasure(double p, double r);
// Trace over total. Throws Error on an empty matrix.
double Accuracy(const ConfusionMatrix& cm);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

ClassMetrics MetricsFor(const ConfusionMatrix& cm, FormatLabel c);

struct Summary {
  double highest = 0.0;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation
};

// Throws ContractError for fewer than two values.
Summary Summarize(std::span<const double> accuracies);

enum class Extractor { kContext, kBow };

std::string_view ExtractorName(Extractor e);

struct RunSummary {
  Extractor extractor = Extractor::kContext;
  TrainConfig config;
  std::size_t folds = 0;
  std::uint64_t seed = 0;

  std::vector<double> fold_accuracies;
  std::vector<std::size_t> fold_sizes;
  Summary summary;
  ConfusionMatrix pooled = EmptyConfusion();
  // Out-of-fold prediction for every corpus row.
  std::vector<FormatLabel> predictions;
  // BoW vocabulary fingerprint per fold; empty for context features.
  std::vector<std::uint64_t> vocab_fingerprints;

  friend bool operator==(const RunSummary& a, const RunSummary& b) {
    return a.fold_accuracies == b.fold_accuracies && a.fold_sizes == b.fold_sizes &&
           a.pooled == b.pooled && a.predictions == b.predictions &&
           a.vocab_fingerprints == b.vocab_fingerprints;
  }
};

struct CrossValidateOptions {
  std::size_t folds = 10;
  std::uint64_t seed = 42;
  // 0 picks hardware concurrency; results never depend on it.
  unsigned threads = 0;
};

// Stratified k-fold evaluation. The BoW vocabulary is rebuilt from each
// training split; context features need no fitting.
RunSummary CrossValidate(const Corpus& corpus, Extractor extractor, const Lexicon& lexicon,
                         const TrainConfig& cfg, const CrossValidateOptions& options = {});

// ---- reports

enum class ReportFormat { kTsv, kJson };

// Per-class table (rows true label, precision row, F-measure row) followed
// by the highest/mean/std summary of one run.
std::string FormatRunReport(const RunSummary& run, ReportFormat format);

// Context vs BoW mean accuracy with the delta between them.
std::string FormatComparisonReport(const RunSummary& context, const RunSummary& bow,
                                   ReportFormat format);

}  // namespace numctx

#endif  // NUMCTX_EVAL_H_
