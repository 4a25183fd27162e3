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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "numctx/errors.h"

namespace numctx {
namespace {

TEST(UnigramsTest, Examples) {
  EXPECT_EQ(Unigrams("1500"), (std::vector<char32_t>{U'1', U'5', U'0', U'0'}));
  EXPECT_TRUE(Unigrams("").empty());
  EXPECT_EQ(Unigrams("RM5"), (std::vector<char32_t>{U'R', U'M', U'5'}));
}

TEST(GramByteTest, Examples) {
  EXPECT_EQ(GramByte(U'1'), 49);
  EXPECT_EQ(GramByte(U'5'), 53);
  EXPECT_EQ(GramByte(U'0'), 48);
  EXPECT_EQ(GramByte(U'\0'), 0);
  // ASCII table: 'R' = 0x52, 'M' = 0x4D.
  EXPECT_EQ(GramByte(U'R'), 0x52);
  EXPECT_EQ(GramByte(U'M'), 0x4D);
  EXPECT_EQ(GramByte(U'ÿ'), 255);
  EXPECT_EQ(GramByte(U'€'), 255);  // overflow bucket
}

TEST(GramByteTest, MultiCharacterIsContractViolation) {
  EXPECT_THROW(GramByte(std::u32string_view(U"12")), ContractError);
  EXPECT_THROW(GramByte(std::u32string_view(U"")), ContractError);
  EXPECT_EQ(GramByte(std::u32string_view(U"%")), 37);
}

TEST(BuildVocabTest, FirstAppearanceOrder) {
  const std::vector<std::string> tokens = {"1500"};
  const auto vocab = BuildVocab(tokens);
  EXPECT_EQ(vocab.size(), 3u);
  EXPECT_EQ(vocab.Column(49), 0);
  EXPECT_EQ(vocab.Column(53), 1);
  EXPECT_EQ(vocab.Column(48), 2);
  EXPECT_EQ(vocab.Column(50), -1);
  EXPECT_EQ(vocab.cap(), 1000u);
}

TEST(BuildVocabTest, EmptyAndCapped) {
  EXPECT_EQ(BuildVocab({}).size(), 0u);
  const std::vector<std::string> tokens = {"123456"};
  const auto capped = BuildVocab(tokens, 4);
  EXPECT_EQ(capped.size(), 4u);
  EXPECT_EQ(capped.Column('5'), -1);
  EXPECT_THROW(BuildVocab(tokens, 0), ContractError);
}

TEST(BowEncodeTest, Examples) {
  const std::vector<std::string> tokens = {"1500"};
  const auto vocab = BuildVocab(tokens);
  EXPECT_EQ(BowEncode("1500", vocab), (BowVector(3) << 1, 1, 2).finished());
  EXPECT_EQ(BowEncode("", vocab), BowVector::Zero(3));

  const std::vector<std::string> no_five = {"10"};
  const auto small = BuildVocab(no_five);
  const auto v = BowEncode("1500", small);
  EXPECT_EQ(v.sum(), 3);
  EXPECT_EQ(v, (BowVector(2) << 1, 2).finished());
}

TEST(BowPropertyTest, PermutationSumAndHygiene) {
  std::mt19937_64 rng(3);
  const std::string alphabet = "0123456789.,:-/%RM +";
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::string> train(1 + rng() % 5);
    for (auto& t : train) {
      for (int i = 0, n = static_cast<int>(rng() % 8); i < n; ++i) t += alphabet[rng() % 12];
    }
    const auto vocab = BuildVocab(train);
    const auto before = vocab;
    std::string token;
    for (int i = 0, n = static_cast<int>(rng() % 10); i < n; ++i) token += alphabet[rng() % alphabet.size()];

    const auto counts = BowEncode(token, vocab);
    std::string shuffled = token;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(BowEncode(shuffled, vocab), counts);

    EXPECT_LE(counts.sum(), static_cast<int>(token.size()));
    const bool all_known = std::all_of(token.begin(), token.end(), [&](char c) {
      return vocab.Column(static_cast<std::uint8_t>(c)) >= 0;
    });
    EXPECT_EQ(counts.sum() == static_cast<int>(token.size()), all_known);
    EXPECT_EQ(vocab, before);
    EXPECT_EQ(vocab.Fingerprint(), before.Fingerprint());
  }
}

}  // namespace
}  // namespace numctx
