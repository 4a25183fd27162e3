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

#ifndef NUMCTX_LOCATOR_H_
#define NUMCTX_LOCATOR_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace numctx {

// Half-open [start, end) range in Unicode scalar values.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool Overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

struct WordToken {
  std::string surface;
  Span span;
  std::string lowered;
};

// A number located in running text together with its attached symbols.
struct NumberToken {
  std::string raw;  // exact source substring, symbols included
  Span span;
  std::vector<std::string> digit_groups;
  std::vector<char> separators;  // separators[i] sits between groups i and i+1
  std::optional<std::string> prefix_symbol;  // "RM" or "+"
  bool prefix_spaced = false;                // "RM 5" rather than "RM5"
  std::optional<std::string> suffix_symbol;  // "%"

  std::set<char> InternalPunct() const {
    return {separators.begin(), separators.end()};
  }
  std::string Digits() const;
  // Rebuilds the source substring from its parts.
  std::string Reconstruct() const;
};

enum class ShapeKind : int {
  kPlainInt = 0,
  kDecimal,
  kSlashDate,
  kHyphenGroups,
  kColonTime,
  kDotTime,
  kSignedPhone,
  kCurrencyPrefixed,
  kPercentSuffixed,
};

inline constexpr std::size_t kNumShapeKinds = 9;

std::string_view ShapeKindName(ShapeKind kind);

struct NumberShape {
  ShapeKind kind = ShapeKind::kPlainInt;
  std::size_t digit_count = 0;
  std::vector<std::size_t> group_lengths;
};

// Whitespace split; sentence punctuation .,;!?()"' is peeled off both ends
// of every chunk. Chunks that are pure punctuation are dropped.
std::vector<WordToken> Tokenize(std::string_view text);

// Every maximal digit run, joined across . / : , - only when a digit sits on
// both sides, plus an adjacent "+" / "RM" prefix or "%" suffix.
std::vector<NumberToken> LocateNumbers(std::string_view text);

// Precedence: slash, colon, "+", "RM", "%", hyphen, dot, plain.
NumberShape ShapeOf(const NumberToken& token);

// Indices [first, last] of the word tokens covered by `span`. Throws
// ContractError when nothing overlaps.
std::pair<std::size_t, std::size_t> CoveringTokens(
    const std::vector<WordToken>& tokens, const Span& span);

}  // namespace numctx

#endif  // NUMCTX_LOCATOR_H_
