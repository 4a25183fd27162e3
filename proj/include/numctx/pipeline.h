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

#ifndef NUMCTX_PIPELINE_H_
#define NUMCTX_PIPELINE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numctx/bow_features.h"
#include "numctx/classifiers.h"
#include "numctx/context_features.h"
#include "numctx/corpus.h"
#include "numctx/eval.h"
#include "numctx/verbalizer.h"

namespace numctx {

// A number in its sentence, ready for either feature extractor.
struct Instance {
  NumberToken token;
  NumberShape shape;
  ContextWindow window;
  std::string next_word;  // postposition 1 as written, or empty
};

Instance MakeInstance(std::string_view text, const NumberToken& token);
Instance MakeInstance(const LabeledSentence& sentence);
std::vector<Instance> MakeInstances(const Corpus& corpus);

Matrix ContextMatrix(std::span<const Instance> instances, const Lexicon& lexicon);
Matrix BowMatrix(std::span<const Instance> instances, const BowVocab& vocab);
BowVocab VocabFor(std::span<const Instance> instances, std::size_t cap = kDefaultBowCap);

// Feature extractor plus trained classifier, persisted as one text file.
class Pipeline {
 public:
  static Pipeline Fit(const Corpus& corpus, Extractor extractor, const Lexicon& lexicon,
                      const TrainConfig& cfg);

  Extractor extractor() const { return extractor_; }
  const TrainedModel& model() const { return model_; }
  const std::optional<BowVocab>& vocab() const { return vocab_; }
  const std::string& lexicon_version() const { return lexicon_version_; }

  Vector Features(const Instance& instance, const Lexicon& lexicon) const;
  FormatLabel Classify(const Instance& instance, const Lexicon& lexicon) const;

  std::string Serialize() const;
  // Throws FormatError on malformed input.
  static Pipeline Deserialize(std::string_view blob);

 private:
  Pipeline(Extractor extractor, std::optional<BowVocab> vocab, TrainedModel model,
           std::string lexicon_version);

  Extractor extractor_;
  std::optional<BowVocab> vocab_;
  TrainedModel model_;
  std::string lexicon_version_;
};

struct ClassifiedNumber {
  NumberToken token;
  FormatLabel label;
  std::optional<std::string> verbalization;
  std::string error;  // set when verbalization is absent
};

// Locates, classifies and verbalizes every number of `text`, in span order.
std::vector<ClassifiedNumber> ClassifySentence(std::string_view text, const Pipeline& pipeline,
                                               const Lexicon& lexicon,
                                               const VerbalizationStyle& style = {});

}  // namespace numctx

#endif  // NUMCTX_PIPELINE_H_
