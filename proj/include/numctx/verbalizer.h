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

#ifndef NUMCTX_VERBALIZER_H_
#define NUMCTX_VERBALIZER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "numctx/label.h"
#include "numctx/locator.h"

namespace numctx {

enum class YearMode { kPaired, kFull };       // "sembilan belas dua puluh empat"
enum class CurrencyMode { kSymbolic, kSpoken };  // "rm dua" vs "dua ringgit"
enum class UnitMode { kAbbrev, kFull };       // "cm" vs "sentimeter"

struct VerbalizationStyle {
  YearMode year_mode = YearMode::kFull;
  CurrencyMode currency_mode = CurrencyMode::kSpoken;
  UnitMode unit_mode = UnitMode::kFull;
};

// Malay cardinal number words. Throws RangeError for n >= 10^18.
std::string Cardinal(std::uint64_t n);

// Renders a classified number as lowercase Malay words.
//
// `next_word` is the word following the number in the sentence. It supplies
// what the digits alone cannot: the month after a bare day ("21 Januari"),
// the am/pm or pagi/petang marker after a time, and the unit after a
// measurement.
//
// Throws CompatibilityError when the token's shape cannot carry `label`
// (e.g. a "%" token labeled Date), naming both.
std::string Verbalize(const NumberToken& token, FormatLabel label,
                      const VerbalizationStyle& style = {}, std::string_view next_word = {});

// Spoken form of a unit abbreviation or name ("cm" -> "sentimeter"), if known.
std::optional<std::string> UnitWord(std::string_view word, UnitMode mode);

}  // namespace numctx

#endif  // NUMCTX_VERBALIZER_H_
