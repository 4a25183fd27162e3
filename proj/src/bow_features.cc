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

#include "numctx/bow_features.h"

#include "numctx/errors.h"
#include "numctx/utf8.h"

namespace numctx {

BowVocab::BowVocab(std::size_t cap) : cap_(cap) { byte_to_column_.fill(-1); }

bool BowVocab::Insert(std::uint8_t byte) {
  if (byte_to_column_[byte] >= 0 || columns_ >= cap_) return false;
  byte_to_column_[byte] = static_cast<int>(columns_++);
  return true;
}

std::vector<std::uint8_t> BowVocab::Bytes() const {
  std::vector<std::uint8_t> bytes(columns_);
  for (int b = 0; b < 256; ++b) {
    if (byte_to_column_[b] >= 0) bytes[byte_to_column_[b]] = static_cast<std::uint8_t>(b);
  }
  return bytes;
}

std::uint64_t BowVocab::Fingerprint() const {
  // FNV-1a over (byte, column) pairs.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  for (int b = 0; b < 256; ++b) {
    mix(static_cast<std::uint64_t>(byte_to_column_[b] + 1));
  }
  mix(cap_);
  return h;
}

std::vector<char32_t> Unigrams(std::string_view token_raw) {
  const std::u32string chars = utf8::Decode(token_raw);
  return {chars.begin(), chars.end()};
}

std::uint8_t GramByte(char32_t gram) {
  return gram <= 255 ? static_cast<std::uint8_t>(gram) : std::uint8_t{255};
}

std::uint8_t GramByte(std::u32string_view gram) {
  if (gram.size() != 1) {
    throw ContractError("gram must be a single character, got " +
                        std::to_string(gram.size()));
  }
  return GramByte(gram[0]);
}

BowVocab BuildVocab(std::span<const std::string> training_tokens, std::size_t cap) {
  if (cap < 1) throw ContractError("vocabulary cap must be at least 1");
  BowVocab vocab(cap);
  for (const auto& token : training_tokens) {
    for (char32_t gram : Unigrams(token)) vocab.Insert(GramByte(gram));
  }
  return vocab;
}

BowVector BowEncode(std::string_view token_raw, const BowVocab& vocab) {
  BowVector counts = BowVector::Zero(static_cast<Eigen::Index>(vocab.size()));
  for (char32_t gram : Unigrams(token_raw)) {
    const int col = vocab.Column(GramByte(gram));
    if (col >= 0) ++counts(col);
  }
  return counts;
}

}  // namespace numctx
