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

#include "numctx/corpus.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "numctx/errors.h"
#include "numctx/utf8.h"

namespace numctx {
namespace {

struct Record {
  std::vector<std::string> fields;
  int line = 0;
};

std::string NormalizeNewlines(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < in.size() && in[i + 1] == '\n') ++i;
    } else {
      out.push_back(in[i]);
    }
  }
  return out;
}

// RFC 4180 records; quoted fields may span lines.
std::vector<Record> SplitRecords(const std::string& data) {
  std::vector<Record> records;
  std::size_t i = 0;
  int line = 1;
  while (i < data.size()) {
    Record rec;
    rec.line = line;
    std::string field;
    bool quoted_field = false;
    bool at_field_start = true;
    while (true) {
      if (i >= data.size()) {
        rec.fields.push_back(std::move(field));
        break;
      }
      char c = data[i];
      if (at_field_start && c == '"') {
        quoted_field = true;
        at_field_start = false;
        ++i;
        while (true) {
          if (i >= data.size()) throw ParseError("unterminated quoted field", rec.line);
          if (data[i] == '"') {
            if (i + 1 < data.size() && data[i + 1] == '"') {
              field.push_back('"');
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          if (data[i] == '\n') ++line;
          field.push_back(data[i++]);
        }
        if (i < data.size() && data[i] != ',' && data[i] != '\n') {
          throw ParseError("unexpected character after closing quote", line);
        }
        continue;
      }
      at_field_start = false;
      if (c == ',') {
        rec.fields.push_back(std::move(field));
        field.clear();
        quoted_field = false;
        at_field_start = true;
        ++i;
      } else if (c == '\n') {
        rec.fields.push_back(std::move(field));
        ++line;
        ++i;
        break;
      } else {
        if (c == '"' && !quoted_field) throw ParseError("stray quote in unquoted field", line);
        field.push_back(c);
        ++i;
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::size_t ParseOffset(const std::string& s, const char* what, int line) {
  std::size_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(std::string("invalid ") + what + " offset '" + s + "'", line);
  }
  return value;
}

bool NeedsQuoting(std::string_view s) {
  return s.find_first_of(",\"\n\r") != std::string_view::npos ||
         (!s.empty() && (s.front() == ' ' || s.back() == ' '));
}

std::string Quote(std::string_view s) {
  if (!NeedsQuoting(s)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::array<std::size_t, kNumLabels> Corpus::ClassCounts() const {
  std::array<std::size_t, kNumLabels> counts{};
  for (const auto& s : sentences) ++counts[Index(s.label)];
  return counts;
}

namespace {

std::vector<Record> ReadRecords(std::string_view csv) {
  std::string data = NormalizeNewlines(csv);
  if (data.rfind("\xEF\xBB\xBF", 0) == 0) data.erase(0, 3);
  auto records = SplitRecords(data);
  if (records.empty()) throw ParseError("missing header `id,text,start,end,label`", 1);
  const std::vector<std::string> kHeader = {"id", "text", "start", "end", "label"};
  if (records[0].fields != kHeader) {
    throw ParseError("header must be `id,text,start,end,label`", records[0].line);
  }
  records.erase(records.begin());
  std::erase_if(records, [](const Record& r) {
    return r.fields.size() == 1 && r.fields[0].empty();  // blank line
  });
  return records;
}

LabeledSentence ParseRow(const Record& rec, std::unordered_set<std::string>& ids) {
  if (rec.fields.size() != 5) {
    throw ParseError("expected 5 fields, found " + std::to_string(rec.fields.size()), rec.line);
  }
  LabeledSentence s;
  s.id = rec.fields[0];
  s.text = rec.fields[1];
  if (s.id.empty()) throw ParseError("empty id", rec.line);
  const auto label = ParseLabel(rec.fields[4]);
  if (!label) {
    throw LabelError("unknown label '" + rec.fields[4] + "' (row " + s.id + ")", rec.line);
  }
  s.label = *label;
  s.span.start = ParseOffset(rec.fields[2], "start", rec.line);
  s.span.end = ParseOffset(rec.fields[3], "end", rec.line);

  std::size_t length;
  try {
    length = utf8::Decode(s.text).size();
  } catch (const ParseError& e) {
    throw ParseError(e.what(), rec.line);
  }
  if (s.span.start >= s.span.end || s.span.end > length) {
    throw SpanError("span [" + rec.fields[2] + ", " + rec.fields[3] +
                        ") outside text of length " + std::to_string(length) + " (row " + s.id +
                        ")",
                    rec.line);
  }
  bool matched = false;
  for (const auto& tok : LocateNumbers(s.text)) {
    if (tok.span == s.span) {
      matched = true;
      break;
    }
  }
  if (!matched) {
    throw SpanError("span [" + rec.fields[2] + ", " + rec.fields[3] +
                        ") is not a number token (row " + s.id + ")",
                    rec.line);
  }
  if (!ids.insert(s.id).second) throw DuplicateError("duplicate id '" + s.id + "'", rec.line);
  return s;
}

}  // namespace

Corpus ParseCorpus(std::string_view csv) {
  Corpus corpus;
  std::unordered_set<std::string> ids;
  for (const auto& rec : ReadRecords(csv)) corpus.sentences.push_back(ParseRow(rec, ids));
  return corpus;
}

CorpusCheck CheckCorpus(std::string_view csv) {
  CorpusCheck check;
  std::vector<Record> records;
  try {
    records = ReadRecords(csv);
  } catch (const ParseError& e) {
    check.problems.push_back(e.what());
    return check;
  }
  std::unordered_set<std::string> ids;
  for (const auto& rec : records) {
    try {
      check.corpus.sentences.push_back(ParseRow(rec, ids));
    } catch (const ParseError& e) {
      check.problems.push_back(e.what());
    }
  }
  return check;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Corpus LoadCorpus(const std::string& path) { return ParseCorpus(ReadFile(path)); }

void WriteCorpus(std::ostream& out, const Corpus& corpus) {
  out << "id,text,start,end,label\n";
  for (const auto& s : corpus.sentences) {
    out << Quote(s.id) << ',' << Quote(s.text) << ',' << s.span.start << ',' << s.span.end
        << ',' << LabelName(s.label) << '\n';
  }
}

std::string DefaultCorpusPath() { return std::string(NUMCTX_DATA_DIR) + "/corpus.csv"; }

NumberToken ResolveToken(const LabeledSentence& sentence) {
  for (auto& tok : LocateNumbers(sentence.text)) {
    if (tok.span == sentence.span) return tok;
  }
  throw SpanError("row " + sentence.id + " does not point at a number token", 0);
}

std::vector<Fold> StratifiedFolds(const Corpus& corpus, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw ContractError("fold count must be at least 2");
  if (corpus.empty()) throw StratificationError("cannot partition an empty corpus");

  std::array<std::vector<std::size_t>, kNumLabels> members;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    members[Index(corpus.sentences[i].label)].push_back(i);
  }
  for (FormatLabel label : kAllLabels) {
    const auto n = members[Index(label)].size();
    if (n > 0 && n < k) {
      throw StratificationError("class " + std::string(LabelName(label)) + " has " +
                                std::to_string(n) + " members, fewer than " +
                                std::to_string(k) + " folds");
    }
  }

  // mt19937_64's output sequence is fixed by the standard; the modulo draw
  // keeps the shuffle identical across standard libraries.
  std::mt19937_64 rng(seed);
  std::vector<Fold> folds(k);
  std::size_t next = 0;
  for (auto& group : members) {
    for (std::size_t i = group.size(); i > 1; --i) {
      std::swap(group[i - 1], group[rng() % i]);
    }
    for (std::size_t idx : group) {
      folds[next].push_back(idx);
      next = (next + 1) % k;
    }
  }
  for (auto& fold : folds) std::sort(fold.begin(), fold.end());
  return folds;
}

}  // namespace numctx
