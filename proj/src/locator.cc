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

#include "numctx/locator.h"

#include <array>

#include "numctx/errors.h"
#include "numctx/utf8.h"

namespace numctx {
namespace {

bool IsDigit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool IsAsciiAlnum(char32_t c) {
  return IsDigit(c) || (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}

bool IsJoiner(char32_t c) {
  return c == U'.' || c == U',' || c == U':' || c == U'-' || c == U'/';
}

bool IsSentencePunct(char32_t c) {
  switch (c) {
    case U'.': case U',': case U';': case U'!': case U'?':
    case U'(': case U')': case U'"': case U'\'':
      return true;
    default:
      return false;
  }
}

constexpr std::array<std::string_view, kNumShapeKinds> kShapeNames = {
    "PlainInt",  "Decimal", "SlashDate",   "HyphenGroups",     "ColonTime",
    "DotTime",   "SignedPhone", "CurrencyPrefixed", "PercentSuffixed",
};

}  // namespace

std::string_view ShapeKindName(ShapeKind kind) {
  return kShapeNames[static_cast<std::size_t>(kind)];
}

std::string NumberToken::Digits() const {
  std::string out;
  for (const auto& g : digit_groups) out += g;
  return out;
}

std::string NumberToken::Reconstruct() const {
  std::string out;
  if (prefix_symbol) {
    out += *prefix_symbol;
    if (prefix_spaced) out += ' ';
  }
  for (std::size_t i = 0; i < digit_groups.size(); ++i) {
    if (i > 0) out += separators[i - 1];
    out += digit_groups[i];
  }
  if (suffix_symbol) out += *suffix_symbol;
  return out;
}

std::vector<WordToken> Tokenize(std::string_view text) {
  const std::u32string chars = utf8::Decode(text);
  std::vector<WordToken> tokens;
  std::size_t i = 0;
  while (i < chars.size()) {
    if (utf8::IsSpace(chars[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < chars.size() && !utf8::IsSpace(chars[i])) ++i;
    std::size_t end = i;
    while (start < end && IsSentencePunct(chars[start])) ++start;
    while (end > start && IsSentencePunct(chars[end - 1])) --end;
    if (start == end) continue;
    const std::u32string_view word(chars.data() + start, end - start);
    tokens.push_back({utf8::Encode(word), {start, end}, utf8::Encode(utf8::Lower(word))});
  }
  return tokens;
}

std::vector<NumberToken> LocateNumbers(std::string_view text) {
  const std::u32string chars = utf8::Decode(text);
  std::vector<NumberToken> found;
  std::size_t i = 0;
  while (i < chars.size()) {
    if (!IsDigit(chars[i])) {
      ++i;
      continue;
    }
    NumberToken token;
    std::size_t start = i;
    std::string group;
    while (true) {
      while (i < chars.size() && IsDigit(chars[i])) group.push_back(static_cast<char>(chars[i++]));
      token.digit_groups.push_back(group);
      group.clear();
      if (i + 1 < chars.size() && IsJoiner(chars[i]) && IsDigit(chars[i + 1])) {
        token.separators.push_back(static_cast<char>(chars[i]));
        ++i;
        continue;
      }
      break;
    }
    std::size_t end = i;

    if (start >= 1 && chars[start - 1] == U'+' && (start < 2 || !IsDigit(chars[start - 2]))) {
      token.prefix_symbol = "+";
      start -= 1;
    } else {
      auto rm_at = [&](std::size_t pos) {
        return chars[pos] == U'R' && chars[pos + 1] == U'M' &&
               (pos == 0 || !IsAsciiAlnum(chars[pos - 1]));
      };
      if (start >= 2 && rm_at(start - 2)) {
        token.prefix_symbol = "RM";
        start -= 2;
      } else if (start >= 3 && chars[start - 1] == U' ' && rm_at(start - 3)) {
        token.prefix_symbol = "RM";
        token.prefix_spaced = true;
        start -= 3;
      }
    }
    if (end < chars.size() && chars[end] == U'%') {
      token.suffix_symbol = "%";
      ++end;
    }

    token.span = {start, end};
    token.raw = utf8::Encode(std::u32string_view(chars.data() + start, end - start));
    found.push_back(std::move(token));
    i = end;
  }
  return found;
}

NumberShape ShapeOf(const NumberToken& token) {
  NumberShape shape;
  for (const auto& g : token.digit_groups) {
    shape.group_lengths.push_back(g.size());
    shape.digit_count += g.size();
  }
  const auto punct = token.InternalPunct();
  const bool is_plus = token.prefix_symbol == "+";
  const bool is_rm = token.prefix_symbol == "RM";
  if (punct.count('/')) {
    shape.kind = ShapeKind::kSlashDate;
  } else if (punct.count(':')) {
    shape.kind = ShapeKind::kColonTime;
  } else if (is_plus) {
    shape.kind = ShapeKind::kSignedPhone;
  } else if (is_rm) {
    shape.kind = ShapeKind::kCurrencyPrefixed;
  } else if (token.suffix_symbol) {
    shape.kind = ShapeKind::kPercentSuffixed;
  } else if (punct.count('-')) {
    shape.kind = ShapeKind::kHyphenGroups;
  } else if (token.separators.size() == 1 && token.separators[0] == '.' &&
             shape.group_lengths[0] <= 2) {
    shape.kind = shape.group_lengths[1] == 2 ? ShapeKind::kDotTime : ShapeKind::kDecimal;
  } else if (punct.count('.')) {
    shape.kind = ShapeKind::kDecimal;
  } else {
    shape.kind = ShapeKind::kPlainInt;
  }
  return shape;
}

std::pair<std::size_t, std::size_t> CoveringTokens(const std::vector<WordToken>& tokens,
                                                   const Span& span) {
  std::optional<std::size_t> first;
  std::size_t last = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].span.Overlaps(span)) {
      if (!first) first = i;
      last = i;
    }
  }
  if (!first) {
    throw ContractError("no word token overlaps span [" + std::to_string(span.start) + ", " +
                        std::to_string(span.end) + ")");
  }
  return {*first, last};
}

}  // namespace numctx
