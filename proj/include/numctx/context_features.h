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

#ifndef NUMCTX_CONTEXT_FEATURES_H_
#define NUMCTX_CONTEXT_FEATURES_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "numctx/locator.h"

namespace numctx {

// Semantic class of a word near a number. Unknown covers lexicon misses;
// Boundary marks slots that fall outside the sentence.
enum class KeywordClass : int {
  kMonth = 0,
  kTimeWord,
  kPhoneWord,
  kCurrencyWord,
  kMeasurementUnit,
  kCollectiveNoun,
  kPercentWord,
  kMagnitudeWord,
  kValueWord,
  kUnknown,
  kBoundary,
};

inline constexpr std::size_t kNumKeywordClasses = 11;

std::string_view KeywordClassName(KeywordClass cls);
std::optional<KeywordClass> ParseKeywordClass(std::string_view name);

// Lowercase word -> keyword class. Text format: one `word<TAB>Class` per
// line, '#' starts a comment, and an optional `# version: <v>` line.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon Parse(std::istream& in);
  static Lexicon Load(const std::string& path);
  // NUMCTX_LEXICON if set, otherwise the bundled keyword list.
  static std::string DefaultPath();

  // Throws ContractError for Unknown/Boundary or a word that is already
  // mapped to a different class.
  void Add(std::string_view word, KeywordClass cls);

  // Case-insensitive; misses are Unknown.
  KeywordClass Classify(std::string_view word) const;

  const std::map<std::string, KeywordClass>& entries() const { return entries_; }
  const std::string& version() const { return version_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, KeywordClass> entries_;
  std::string version_ = "unversioned";
};

// nullopt is the sentence boundary.
using WindowSlot = std::optional<std::string>;

struct ContextWindow {
  WindowSlot preposition2;
  WindowSlot preposition1;
  WindowSlot postposition1;
  WindowSlot postposition2;

  std::array<const WindowSlot*, 4> Slots() const {
    return {&preposition2, &preposition1, &postposition1, &postposition2};
  }
  friend bool operator==(const ContextWindow&, const ContextWindow&) = default;
};

// Two lowered words either side of tokens[number_index].
ContextWindow ExtractWindow(const std::vector<WordToken>& tokens, std::size_t number_index);

// Same, for a number that spans tokens[first..last] (e.g. "RM 5").
ContextWindow ExtractWindow(const std::vector<WordToken>& tokens, std::size_t first,
                            std::size_t last);

// Window around a located number of `text`.
ContextWindow WindowFor(std::string_view text, const NumberToken& number);

KeywordClass ClassifyWord(const Lexicon& lexicon, const WindowSlot& word);

// Layout: four 11-wide one-hot blocks (P2, P1, S1, S2), a 9-wide shape
// one-hot, then the digit-count bucket (<=2, 3-4, >=5).
inline constexpr Eigen::Index kContextDim = 4 * kNumKeywordClasses + kNumShapeKinds + 3;

using FeatureVector = Eigen::VectorXd;

FeatureVector Encode(const ContextWindow& window, const NumberShape& shape,
                     const Lexicon& lexicon);

// Human-readable column names, in Encode order.
std::vector<std::string> ContextFeatureNames();

}  // namespace numctx

#endif  // NUMCTX_CONTEXT_FEATURES_H_
