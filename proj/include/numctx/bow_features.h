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

#ifndef NUMCTX_BOW_FEATURES_H_
#define NUMCTX_BOW_FEATURES_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace numctx {

// Character-unigram baseline: each character of the number token becomes
// its code value clamped to one byte, and tokens are encoded as per-byte
// counts over a vocabulary built from training tokens.

inline constexpr std::size_t kDefaultBowCap = 1000;

class BowVocab {
 public:
  explicit BowVocab(std::size_t cap = kDefaultBowCap);

  std::size_t cap() const { return cap_; }
  std::size_t size() const { return columns_; }
  // -1 when the byte has no column.
  int Column(std::uint8_t byte) const { return byte_to_column_[byte]; }
  // Assigns the next column; returns false when the byte is known or the
  // vocabulary is full.
  bool Insert(std::uint8_t byte);
  // Bytes in column order.
  std::vector<std::uint8_t> Bytes() const;
  std::uint64_t Fingerprint() const;

  friend bool operator==(const BowVocab&, const BowVocab&) = default;

 private:
  std::array<int, 256> byte_to_column_;
  std::size_t cap_;
  std::size_t columns_ = 0;
};

using BowVector = Eigen::VectorXi;

std::vector<char32_t> Unigrams(std::string_view token_raw);

// Code point if <= 255, else the 255 overflow bucket.
std::uint8_t GramByte(char32_t gram);
// Throws ContractError unless `gram` is exactly one character.
std::uint8_t GramByte(std::u32string_view gram);

// Columns are handed out in order of first appearance. cap must be >= 1.
BowVocab BuildVocab(std::span<const std::string> training_tokens,
                    std::size_t cap = kDefaultBowCap);

BowVector BowEncode(std::string_view token_raw, const BowVocab& vocab);

}  // namespace numctx

#endif  // NUMCTX_BOW_FEATURES_H_
