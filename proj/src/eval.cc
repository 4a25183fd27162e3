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

#include "numctx/eval.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include "numctx/errors.h"
#include "numctx/pipeline.h"

namespace numctx {

double Precision(const ConfusionMatrix& cm, FormatLabel c) {
  const auto i = static_cast<Eigen::Index>(Index(c));
  const auto predicted = cm.col(i).sum();
  if (predicted == 0) return 1.0;
  return static_cast<double>(cm(i, i)) / static_cast<double>(predicted);
}

double Recall(const ConfusionMatrix& cm, FormatLabel c) {
  const auto i = static_cast<Eigen::Index>(Index(c));
  const auto actual = cm.row(i).sum();
  if (actual == 0) return 1.0;
  return static_cast<double>(cm(i, i)) / static_cast<double>(actual);
}

double FMeasure(double p, double r) {
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

double Accuracy(const ConfusionMatrix& cm) {
  const auto total = cm.sum();
  if (total == 0) throw Error("accuracy of an empty confusion matrix");
  return static_cast<double>(cm.trace()) / static_cast<double>(total);
}

ClassMetrics MetricsFor(const ConfusionMatrix& cm, FormatLabel c) {
  ClassMetrics m;
  m.precision = Precision(cm, c);
  m.recall = Recall(cm, c);
  m.f_measure = FMeasure(m.precision, m.recall);
  return m;
}

Summary Summarize(std::span<const double> accuracies) {
  if (accuracies.size() < 2) {
    throw ContractError("standard deviation needs at least two folds");
  }
  const double n = static_cast<double>(accuracies.size());
  Summary s;
  s.highest = *std::max_element(accuracies.begin(), accuracies.end());
  s.mean = std::accumulate(accuracies.begin(), accuracies.end(), 0.0) / n;
  double ss = 0.0;
  for (double a : accuracies) ss += (a - s.mean) * (a - s.mean);
  s.std = std::sqrt(ss / (n - 1.0));
  return s;
}

std::string_view ExtractorName(Extractor e) {
  return e == Extractor::kContext ? "context" : "bow";
}

namespace {

struct FoldResult {
  ConfusionMatrix cm = EmptyConfusion();
  std::vector<std::pair<std::size_t, FormatLabel>> predictions;
  std::uint64_t fingerprint = 0;
};

template <typename T>
std::vector<T> Gather(const std::vector<T>& all, const std::vector<std::size_t>& idx) {
  std::vector<T> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

Matrix GatherRows(const Matrix& all, const std::vector<std::size_t>& idx) {
  Matrix out(static_cast<Eigen::Index>(idx.size()), all.cols());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    out.row(static_cast<Eigen::Index>(r)) = all.row(static_cast<Eigen::Index>(idx[r]));
  }
  return out;
}

}  // namespace

RunSummary CrossValidate(const Corpus& corpus, Extractor extractor, const Lexicon& lexicon,
                         const TrainConfig& cfg, const CrossValidateOptions& options) {
  cfg.Validate();
  const auto folds = StratifiedFolds(corpus, options.folds, options.seed);
  const auto instances = MakeInstances(corpus);
  std::vector<FormatLabel> labels;
  labels.reserve(corpus.size());
  for (const auto& s : corpus.sentences) labels.push_back(s.label);

  Matrix context;
  if (extractor == Extractor::kContext) context = ContextMatrix(instances, lexicon);

  auto run_fold = [&](std::size_t f) {
    std::vector<std::size_t> train_idx;
    std::vector<bool> in_test(corpus.size(), false);
    for (auto i : folds[f]) in_test[i] = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!in_test[i]) train_idx.push_back(i);
    }
    const auto& test_idx = folds[f];

    FoldResult result;
    Matrix X_train, X_test;
    if (extractor == Extractor::kBow) {
      const auto train_inst = Gather(instances, train_idx);
      const auto test_inst = Gather(instances, test_idx);
      const BowVocab vocab = VocabFor(train_inst);
      result.fingerprint = vocab.Fingerprint();
      X_train = BowMatrix(train_inst, vocab);
      X_test = BowMatrix(test_inst, vocab);
    } else {
      X_train = GatherRows(context, train_idx);
      X_test = GatherRows(context, test_idx);
    }
    const auto y_train = Gather(labels, train_idx);
    const TrainedModel model = Train(X_train, y_train, cfg);
    for (std::size_t r = 0; r < test_idx.size(); ++r) {
      const FormatLabel predicted = model.Predict(X_test.row(static_cast<Eigen::Index>(r)).transpose());
      const FormatLabel truth = labels[test_idx[r]];
      ++result.cm(static_cast<Eigen::Index>(Index(truth)), static_cast<Eigen::Index>(Index(predicted)));
      result.predictions.emplace_back(test_idx[r], predicted);
    }
    return result;
  };

  std::vector<FoldResult> results(folds.size());
  std::vector<std::exception_ptr> errors(folds.size());
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(folds.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t f; (f = next.fetch_add(1)) < folds.size();) {
      try {
        results[f] = run_fold(f);
      } catch (...) {
        errors[f] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  RunSummary run;
  run.extractor = extractor;
  run.config = cfg;
  run.folds = options.folds;
  run.seed = options.seed;
  run.predictions.resize(corpus.size());
  for (std::size_t f = 0; f < folds.size(); ++f) {
    run.pooled += results[f].cm;
    run.fold_accuracies.push_back(Accuracy(results[f].cm));
    run.fold_sizes.push_back(folds[f].size());
    for (const auto& [i, label] : results[f].predictions) run.predictions[i] = label;
    if (extractor == Extractor::kBow) run.vocab_fingerprints.push_back(results[f].fingerprint);
  }
  run.summary = Summarize(run.fold_accuracies);
  return run;
}

}  // namespace numctx
