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

#ifndef NUMCTX_LABEL_H_
#define NUMCTX_LABEL_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace numctx {

// The six number formats. Declaration order is the canonical ordering
// used for tie-breaks and for confusion-matrix rows and columns.
enum class FormatLabel : int {
  kDate = 0,
  kTime,
  kPhone,
  kCurrency,
  kMeasurement,
  kPercentage,
};

inline constexpr std::size_t kNumLabels = 6;

inline constexpr std::array<FormatLabel, kNumLabels> kAllLabels = {
    FormatLabel::kDate,     FormatLabel::kTime,        FormatLabel::kPhone,
    FormatLabel::kCurrency, FormatLabel::kMeasurement, FormatLabel::kPercentage,
};

constexpr std::size_t Index(FormatLabel label) {
  return static_cast<std::size_t>(label);
}

// "Date", "Time", ... as written in corpus files and reports.
std::string_view LabelName(FormatLabel label);

// Exact, case-sensitive inverse of LabelName.
std::optional<FormatLabel> ParseLabel(std::string_view name);

}  // namespace numctx

#endif  // NUMCTX_LABEL_H_
