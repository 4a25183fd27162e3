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

#ifndef NUMCTX_CORPUS_H_
#define NUMCTX_CORPUS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "numctx/label.h"
#include "numctx/locator.h"

namespace numctx {

// One labeled number inside a sentence. A sentence with several numbers
// appears as several rows that share the text.
struct LabeledSentence {
  std::string id;
  std::string text;  // UTF-8, '\n' line endings
  Span span;         // in Unicode scalar values
  FormatLabel label;

  friend bool operator==(const LabeledSentence&, const LabeledSentence&) = default;
};

struct Corpus {
  std::vector<LabeledSentence> sentences;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }
  std::array<std::size_t, kNumLabels> ClassCounts() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// CSV with header `id,text,start,end,label` (RFC 4180 quoting). Every row is
// validated: the span must coincide with a number located in the text.
Corpus ParseCorpus(std::string_view csv);
Corpus LoadCorpus(const std::string& path);

// Lenient variant for diagnostics: keeps the valid rows and one message
// (with line number) per rejected row. Header or quoting damage yields a
// single problem and no rows.
struct CorpusCheck {
  Corpus corpus;
  std::vector<std::string> problems;
};
CorpusCheck CheckCorpus(std::string_view csv);

// Whole file as bytes; throws Error when it cannot be opened.
std::string ReadFile(const std::string& path);
void WriteCorpus(std::ostream& out, const Corpus& corpus);

std::string DefaultCorpusPath();

// The located number a row points at.
NumberToken ResolveToken(const LabeledSentence& sentence);

using Fold = std::vector<std::size_t>;

// Stratified k-fold partition. Members of each class are shuffled with
// `seed` and dealt round-robin, continuing across classes, so every class
// and every fold is balanced within one. Classes with no members are
// ignored; a class with 1..k-1 members is a StratificationError.
std::vector<Fold> StratifiedFolds(const Corpus& corpus, std::size_t k, std::uint64_t seed);

}  // namespace numctx

#endif  // NUMCTX_CORPUS_H_
