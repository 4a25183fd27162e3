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

#include "numctx/context_features.h"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include "numctx/errors.h"
#include "numctx/utf8.h"

namespace numctx {
namespace {

constexpr std::array<std::string_view, kNumKeywordClasses> kClassNames = {
    "Month",          "TimeWord",    "PhoneWord",     "CurrencyWord",
    "MeasurementUnit", "CollectiveNoun", "PercentWord", "MagnitudeWord",
    "ValueWord",      "Unknown",     "Boundary",
};

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string LowerUtf8(std::string_view s) { return utf8::Encode(utf8::Lower(utf8::Decode(s))); }

}  // namespace

std::string_view KeywordClassName(KeywordClass cls) {
  return kClassNames[static_cast<std::size_t>(cls)];
}

std::optional<KeywordClass> ParseKeywordClass(std::string_view name) {
  for (std::size_t i = 0; i < kNumKeywordClasses; ++i) {
    if (kClassNames[i] == name) return static_cast<KeywordClass>(i);
  }
  return std::nullopt;
}

Lexicon Lexicon::Parse(std::istream& in) {
  Lexicon lexicon;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = Trim(line);
    if (trimmed.empty()) continue;
    if (trimmed[0] == '#') {
      constexpr std::string_view kVersionTag = "# version:";
      if (trimmed.rfind(kVersionTag, 0) == 0) {
        lexicon.version_ = Trim(std::string_view(trimmed).substr(kVersionTag.size()));
      }
      continue;
    }
    const auto tab = trimmed.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected `word<TAB>Class`", line_no);
    }
    const std::string word = Trim(std::string_view(trimmed).substr(0, tab));
    const std::string cls_name = Trim(std::string_view(trimmed).substr(tab + 1));
    const auto cls = ParseKeywordClass(cls_name);
    if (!cls || *cls == KeywordClass::kUnknown || *cls == KeywordClass::kBoundary) {
      throw ParseError("unknown keyword class '" + cls_name + "'", line_no);
    }
    if (word.empty()) throw ParseError("empty word", line_no);
    try {
      lexicon.Add(word, *cls);
    } catch (const ContractError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return lexicon;
}

Lexicon Lexicon::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon '" + path + "'");
  return Parse(in);
}

std::string Lexicon::DefaultPath() {
  if (const char* env = std::getenv("NUMCTX_LEXICON"); env != nullptr && *env != '\0') {
    return env;
  }
  return std::string(NUMCTX_DATA_DIR) + "/lexicon_ms.tsv";
}

void Lexicon::Add(std::string_view word, KeywordClass cls) {
  if (cls == KeywordClass::kUnknown || cls == KeywordClass::kBoundary) {
    throw ContractError("lexicon entries cannot map to Unknown or Boundary");
  }
  const std::string key = LowerUtf8(Trim(word));
  if (key.empty()) throw ContractError("empty lexicon word");
  auto [it, inserted] = entries_.emplace(key, cls);
  if (!inserted && it->second != cls) {
    throw ContractError("'" + key + "' already mapped to " +
                        std::string(KeywordClassName(it->second)));
  }
}

KeywordClass Lexicon::Classify(std::string_view word) const {
  auto it = entries_.find(LowerUtf8(word));
  return it == entries_.end() ? KeywordClass::kUnknown : it->second;
}

ContextWindow ExtractWindow(const std::vector<WordToken>& tokens, std::size_t number_index) {
  return ExtractWindow(tokens, number_index, number_index);
}

ContextWindow ExtractWindow(const std::vector<WordToken>& tokens, std::size_t first,
                            std::size_t last) {
  if (first > last || last >= tokens.size()) {
    throw ContractError("number token index out of range");
  }
  auto at = [&](std::ptrdiff_t i) -> WindowSlot {
    if (i < 0 || i >= static_cast<std::ptrdiff_t>(tokens.size())) return std::nullopt;
    return tokens[static_cast<std::size_t>(i)].lowered;
  };
  const auto f = static_cast<std::ptrdiff_t>(first);
  const auto l = static_cast<std::ptrdiff_t>(last);
  return {at(f - 2), at(f - 1), at(l + 1), at(l + 2)};
}

ContextWindow WindowFor(std::string_view text, const NumberToken& number) {
  const auto tokens = Tokenize(text);
  const auto [first, last] = CoveringTokens(tokens, number.span);
  return ExtractWindow(tokens, first, last);
}

KeywordClass ClassifyWord(const Lexicon& lexicon, const WindowSlot& word) {
  if (!word) return KeywordClass::kBoundary;
  return lexicon.Classify(*word);
}

FeatureVector Encode(const ContextWindow& window, const NumberShape& shape,
                     const Lexicon& lexicon) {
  FeatureVector v = FeatureVector::Zero(kContextDim);
  Eigen::Index offset = 0;
  for (const WindowSlot* slot : window.Slots()) {
    v(offset + static_cast<Eigen::Index>(ClassifyWord(lexicon, *slot))) = 1.0;
    offset += kNumKeywordClasses;
  }
  v(offset + static_cast<Eigen::Index>(shape.kind)) = 1.0;
  offset += kNumShapeKinds;
  const Eigen::Index bucket = shape.digit_count <= 2 ? 0 : shape.digit_count <= 4 ? 1 : 2;
  v(offset + bucket) = 1.0;
  return v;
}

std::vector<std::string> ContextFeatureNames() {
  std::vector<std::string> names;
  for (std::string_view pos : {"P2", "P1", "S1", "S2"}) {
    for (auto cls : kClassNames) names.push_back(std::string(pos) + ":" + std::string(cls));
  }
  for (std::size_t k = 0; k < kNumShapeKinds; ++k) {
    names.push_back("shape:" + std::string(ShapeKindName(static_cast<ShapeKind>(k))));
  }
  for (std::string_view b : {"digits:small", "digits:medium", "digits:large"}) {
    names.emplace_back(b);
  }
  return names;
}

}  // namespace numctx
