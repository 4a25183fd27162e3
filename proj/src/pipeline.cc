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

#include "numctx/pipeline.h"

#include <sstream>

#include "numctx/errors.h"

namespace numctx {

Instance MakeInstance(std::string_view text, const NumberToken& token) {
  const auto tokens = Tokenize(text);
  const auto [first, last] = CoveringTokens(tokens, token.span);
  Instance inst{token, ShapeOf(token), ExtractWindow(tokens, first, last), {}};
  if (last + 1 < tokens.size()) inst.next_word = tokens[last + 1].surface;
  return inst;
}

Instance MakeInstance(const LabeledSentence& sentence) {
  return MakeInstance(sentence.text, ResolveToken(sentence));
}

std::vector<Instance> MakeInstances(const Corpus& corpus) {
  std::vector<Instance> out;
  out.reserve(corpus.size());
  for (const auto& s : corpus.sentences) out.push_back(MakeInstance(s));
  return out;
}

Matrix ContextMatrix(std::span<const Instance> instances, const Lexicon& lexicon) {
  Matrix X(static_cast<Eigen::Index>(instances.size()), kContextDim);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    X.row(static_cast<Eigen::Index>(i)) =
        Encode(instances[i].window, instances[i].shape, lexicon).transpose();
  }
  return X;
}

Matrix BowMatrix(std::span<const Instance> instances, const BowVocab& vocab) {
  Matrix X(static_cast<Eigen::Index>(instances.size()), static_cast<Eigen::Index>(vocab.size()));
  for (std::size_t i = 0; i < instances.size(); ++i) {
    X.row(static_cast<Eigen::Index>(i)) =
        BowEncode(instances[i].token.raw, vocab).cast<double>().transpose();
  }
  return X;
}

BowVocab VocabFor(std::span<const Instance> instances, std::size_t cap) {
  std::vector<std::string> raws;
  raws.reserve(instances.size());
  for (const auto& inst : instances) raws.push_back(inst.token.raw);
  return BuildVocab(raws, cap);
}

Pipeline::Pipeline(Extractor extractor, std::optional<BowVocab> vocab, TrainedModel model,
                   std::string lexicon_version)
    : extractor_(extractor),
      vocab_(std::move(vocab)),
      model_(std::move(model)),
      lexicon_version_(std::move(lexicon_version)) {}

Pipeline Pipeline::Fit(const Corpus& corpus, Extractor extractor, const Lexicon& lexicon,
                       const TrainConfig& cfg) {
  if (corpus.empty()) throw Error("cannot train on an empty corpus");
  const auto instances = MakeInstances(corpus);
  std::vector<FormatLabel> labels;
  for (const auto& s : corpus.sentences) labels.push_back(s.label);
  if (extractor == Extractor::kBow) {
    BowVocab vocab = VocabFor(instances);
    TrainedModel model = Train(BowMatrix(instances, vocab), labels, cfg);
    return Pipeline(extractor, std::move(vocab), std::move(model), lexicon.version());
  }
  return Pipeline(extractor, std::nullopt, Train(ContextMatrix(instances, lexicon), labels, cfg),
                  lexicon.version());
}

Vector Pipeline::Features(const Instance& instance, const Lexicon& lexicon) const {
  if (extractor_ == Extractor::kBow) {
    return BowEncode(instance.token.raw, *vocab_).cast<double>();
  }
  return Encode(instance.window, instance.shape, lexicon);
}

FormatLabel Pipeline::Classify(const Instance& instance, const Lexicon& lexicon) const {
  return model_.Predict(Features(instance, lexicon));
}

std::string Pipeline::Serialize() const {
  std::ostringstream out;
  out << "numctx-pipeline 1\n";
  out << "extractor " << ExtractorName(extractor_) << '\n';
  out << "lexicon " << lexicon_version_ << '\n';
  if (vocab_) {
    out << "vocab " << vocab_->cap() << ' ' << vocab_->size();
    for (auto b : vocab_->Bytes()) out << ' ' << static_cast<int>(b);
    out << '\n';
  }
  out << numctx::Serialize(model_);
  return out.str();
}

Pipeline Pipeline::Deserialize(std::string_view blob) {
  std::istringstream in{std::string(blob)};
  auto next_words = [&in](std::string_view key) {
    std::string line;
    if (!std::getline(in, line)) {
      throw FormatError("pipeline file truncated before '" + std::string(key) + "'");
    }
    std::istringstream ws(line);
    std::vector<std::string> words;
    for (std::string w; ws >> w;) words.push_back(w);
    if (words.empty() || words[0] != key) {
      throw FormatError("pipeline file: expected '" + std::string(key) + "'");
    }
    return words;
  };
  auto to_int = [](const std::string& s) {
    try {
      std::size_t pos = 0;
      const long v = std::stol(s, &pos);
      if (pos != s.size() || v < 0) throw FormatError("bad integer '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      throw FormatError("bad integer '" + s + "'");
    }
  };

  const auto magic = next_words("numctx-pipeline");
  if (magic.size() != 2 || magic[1] != "1") throw FormatError("unsupported pipeline version");
  const auto ext = next_words("extractor");
  if (ext.size() != 2 || (ext[1] != "context" && ext[1] != "bow")) {
    throw FormatError("unknown extractor");
  }
  const Extractor extractor = ext[1] == "bow" ? Extractor::kBow : Extractor::kContext;
  const auto lex = next_words("lexicon");
  std::string version = lex.size() > 1 ? lex[1] : std::string();
  std::optional<BowVocab> vocab;
  if (extractor == Extractor::kBow) {
    const auto words = next_words("vocab");
    if (words.size() < 3) throw FormatError("vocab line too short");
    const auto cap = static_cast<std::size_t>(to_int(words[1]));
    const auto n = static_cast<std::size_t>(to_int(words[2]));
    if (cap < 1 || n > cap || n > 256 || words.size() != 3 + n) {
      throw FormatError("vocab line inconsistent");
    }
    vocab.emplace(cap);
    for (std::size_t i = 0; i < n; ++i) {
      const long b = to_int(words[3 + i]);
      if (b > 255 || !vocab->Insert(static_cast<std::uint8_t>(b))) {
        throw FormatError("vocab byte invalid or repeated");
      }
    }
  }
  std::ostringstream rest;
  rest << in.rdbuf();
  TrainedModel model = numctx::Deserialize(rest.str());
  const Eigen::Index expected =
      extractor == Extractor::kBow ? static_cast<Eigen::Index>(vocab->size()) : kContextDim;
  if (model.dim() != expected) {
    throw DimensionError("model dimension " + std::to_string(model.dim()) +
                         " does not match the " + std::string(ExtractorName(extractor)) +
                         " extractor (" + std::to_string(expected) + ")");
  }
  return Pipeline(extractor, std::move(vocab), std::move(model), std::move(version));
}

std::vector<ClassifiedNumber> ClassifySentence(std::string_view text, const Pipeline& pipeline,
                                               const Lexicon& lexicon,
                                               const VerbalizationStyle& style) {
  std::vector<ClassifiedNumber> out;
  for (const auto& token : LocateNumbers(text)) {
    const Instance inst = MakeInstance(text, token);
    ClassifiedNumber result{token, pipeline.Classify(inst, lexicon), std::nullopt, {}};
    try {
      result.verbalization = Verbalize(token, result.label, style, inst.next_word);
    } catch (const CompatibilityError& e) {
      result.error = e.what();
    } catch (const RangeError& e) {
      result.error = e.what();
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace numctx
