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

#include "numctx/label.h"

namespace numctx {
namespace {

constexpr std::array<std::string_view, kNumLabels> kNames = {
    "Date", "Time", "Phone", "Currency", "Measurement", "Percentage",
};

}  // namespace

std::string_view LabelName(FormatLabel label) { return kNames[Index(label)]; }

std::optional<FormatLabel> ParseLabel(std::string_view name) {
  for (FormatLabel label : kAllLabels) {
    if (kNames[Index(label)] == name) return label;
  }
  return std::nullopt;
}

}  // namespace numctx
