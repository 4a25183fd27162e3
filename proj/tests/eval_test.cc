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

#include <cmath>
#include <numeric>
#include <set>

#include <json.hpp>

#include <gtest/gtest.h>

#include "numctx/errors.h"
#include "numctx/pipeline.h"

namespace numctx {
namespace {

using L = FormatLabel;

ConfusionMatrix ReferenceMatrix() {
  ConfusionMatrix cm;
  cm << 69, 0, 0, 0, 15, 0,
        0, 89, 0, 0, 0, 0,
        0, 1, 9, 0, 0, 0,
        1, 0, 0, 76, 0, 0,
        0, 0, 0, 2, 68, 0,
        0, 0, 0, 1, 3, 81;
  return cm;
}

const Lexicon& Bundled() {
  static const Lexicon lexicon = Lexicon::Load(std::string(NUMCTX_DATA_DIR) + "/lexicon_ms.tsv");
  return lexicon;
}

TEST(MetricsTest, ReferenceMatrixMarginals) {
  const auto cm = ReferenceMatrix();
  EXPECT_NEAR(100 * Precision(cm, L::kDate), 98.57, 0.02);
  EXPECT_NEAR(100 * Precision(cm, L::kMeasurement), 79.07, 0.02);
  EXPECT_NEAR(100 * Recall(cm, L::kDate), 82.14, 0.02);
  EXPECT_NEAR(100 * Recall(cm, L::kTime), 100.00, 0.02);
  EXPECT_NEAR(100 * Recall(cm, L::kCurrency), 98.70, 0.01);
  EXPECT_EQ(Precision(cm, L::kPhone), 1.0);
}

TEST(MetricsTest, ZeroDenominators) {
  const auto cm = EmptyConfusion();
  EXPECT_EQ(Precision(cm, L::kTime), 1.0);
  EXPECT_EQ(Recall(cm, L::kTime), 1.0);
  EXPECT_THROW(Accuracy(cm), Error);
  ConfusionMatrix diag = ConfusionMatrix::Identity() * 3;
  for (auto c : kAllLabels) EXPECT_EQ(Precision(diag, c), 1.0);
  EXPECT_EQ(Accuracy(diag), 1.0);
  ConfusionMatrix off = EmptyConfusion();
  off(0, 1) = 4;
  EXPECT_EQ(Accuracy(off), 0.0);
}

TEST(MetricsTest, FMeasure) {
  EXPECT_EQ(FMeasure(1, 1), 1.0);
  EXPECT_EQ(FMeasure(0, 0), 0.0);
  EXPECT_NEAR(FMeasure(0.9857, 0.8214), 0.8961, 5e-5);
}

TEST(MetricsTest, PooledAccuracy) {
  EXPECT_EQ(ReferenceMatrix().sum(), 415);
  EXPECT_EQ(ReferenceMatrix().trace(), 392);
  EXPECT_NEAR(100 * Accuracy(ReferenceMatrix()), 94.46, 0.005);
}

TEST(SummarizeTest, Values) {
  const std::vector<double> ones(10, 1.0);
  const auto s1 = Summarize(ones);
  EXPECT_EQ(s1.highest, 1.0);
  EXPECT_EQ(s1.mean, 1.0);
  EXPECT_EQ(s1.std, 0.0);
  const std::vector<double> two = {0.9, 1.0};
  const auto s2 = Summarize(two);
  EXPECT_EQ(s2.highest, 1.0);
  EXPECT_NEAR(s2.mean, 0.95, 1e-12);
  EXPECT_NEAR(s2.std, 0.0707, 5e-5);
  const std::vector<double> one = {0.5};
  EXPECT_THROW(Summarize(one), ContractError);
}

Corpus Separable() {
  const std::vector<std::pair<L, std::string>> templates = {
      {L::kDate, "pada # januari lalu"},  {L::kTime, "kira kira # pagi tadi"},
      {L::kPhone, "nombor telefon # sahaja"}, {L::kCurrency, "harga # ringgit sahaja"},
      {L::kMeasurement, "berat # kilogram sahaja"}, {L::kPercentage, "naik # peratus lagi"}};
  Corpus corpus;
  int id = 0;
  for (const auto& [label, tmpl] : templates) {
    for (int i = 0; i < 8; ++i) {
      std::string text = tmpl;
      const auto at = text.find('#');
      const std::string number = std::to_string(3 + 7 * i);
      text.replace(at, 1, number);
      const auto start = static_cast<std::size_t>(at);  // ASCII only
      corpus.sentences.push_back({"t" + std::to_string(id++), text,
                                  Span{start, start + number.size()}, label});
    }
  }
  return corpus;
}

TEST(CrossValidateTest, SeparableCorpusIsPerfect) {
  const auto run = CrossValidate(Separable(), Extractor::kContext, Bundled(), TrainConfig{},
                                 {.folds = 4, .seed = 1, .threads = 2});
  EXPECT_EQ(run.summary.mean, 1.0);
  EXPECT_EQ(run.summary.std, 0.0);
  EXPECT_EQ(run.fold_accuracies.size(), 4u);
}

TEST(CrossValidateTest, DeterministicAcrossThreadCounts) {
  const auto corpus = LoadCorpus(std::string(NUMCTX_DATA_DIR) + "/corpus.csv");
  for (auto extractor : {Extractor::kContext, Extractor::kBow}) {
    const auto a = CrossValidate(corpus, extractor, Bundled(), TrainConfig{}, {.threads = 1});
    const auto b = CrossValidate(corpus, extractor, Bundled(), TrainConfig{}, {.threads = 4});
    EXPECT_EQ(a, b);
    EXPECT_EQ(FormatRunReport(a, ReportFormat::kTsv), FormatRunReport(b, ReportFormat::kTsv));
  }
}

TEST(CrossValidateTest, PooledMatrixMatchesIndependentTally) {
  const auto corpus = LoadCorpus(std::string(NUMCTX_DATA_DIR) + "/corpus.csv");
  const auto run = CrossValidate(corpus, Extractor::kContext, Bundled(), TrainConfig{});
  EXPECT_EQ(run.pooled.sum(), static_cast<std::int64_t>(corpus.size()));
  ASSERT_EQ(run.predictions.size(), corpus.size());

  std::int64_t tally[kNumLabels][kNumLabels] = {};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ++tally[Index(corpus.sentences[i].label)][Index(run.predictions[i])];
  }
  for (std::size_t r = 0; r < kNumLabels; ++r) {
    for (std::size_t c = 0; c < kNumLabels; ++c) EXPECT_EQ(run.pooled(r, c), tally[r][c]);
  }

  double weighted = 0.0;
  for (std::size_t f = 0; f < run.fold_accuracies.size(); ++f) {
    weighted += run.fold_accuracies[f] * static_cast<double>(run.fold_sizes[f]);
  }
  EXPECT_NEAR(weighted / static_cast<double>(corpus.size()), Accuracy(run.pooled), 1e-12);
  EXPECT_GE(run.summary.highest, run.summary.mean);
}

TEST(CrossValidateTest, BowVocabularyRebuiltPerFold) {
  const auto corpus = LoadCorpus(std::string(NUMCTX_DATA_DIR) + "/corpus.csv");
  const auto run = CrossValidate(corpus, Extractor::kBow, Bundled(), TrainConfig{});
  const auto folds = StratifiedFolds(corpus, 10, 42);
  const auto instances = MakeInstances(corpus);
  ASSERT_EQ(run.vocab_fingerprints.size(), folds.size());
  for (std::size_t f = 0; f < folds.size(); ++f) {
    std::vector<bool> held(corpus.size(), false);
    for (auto i : folds[f]) held[i] = true;
    std::vector<Instance> train;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!held[i]) train.push_back(instances[i]);
    }
    EXPECT_EQ(run.vocab_fingerprints[f], VocabFor(train).Fingerprint()) << "fold " << f;
  }
  EXPECT_TRUE(CrossValidate(corpus, Extractor::kContext, Bundled(), TrainConfig{})
                  .vocab_fingerprints.empty());
}

TEST(ReportTest, TsvAndJsonLayouts) {
  const auto run = CrossValidate(Separable(), Extractor::kContext, Bundled(), TrainConfig{},
                                 {.folds = 4, .seed = 1});
  const auto tsv = FormatRunReport(run, ReportFormat::kTsv);
  EXPECT_NE(tsv.find("Recall (%)"), std::string::npos);
  EXPECT_NE(tsv.find("Precision (%)"), std::string::npos);
  EXPECT_NE(tsv.find("Mean Accuracy (%)"), std::string::npos);
  const auto json = nlohmann::json::parse(FormatRunReport(run, ReportFormat::kJson));
  EXPECT_TRUE(json.is_object());
  const auto cmp = FormatComparisonReport(run, run, ReportFormat::kTsv);
  EXPECT_NE(cmp.find("delta"), std::string::npos);
}

}  // namespace
}  // namespace numctx
