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

// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance_test                 run all
//   acceptance_test --criterion N   run one

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "numctx/bow_features.h"
#include "numctx/classifiers.h"
#include "numctx/context_features.h"
#include "numctx/corpus.h"
#include "numctx/eval.h"
#include "numctx/locator.h"
#include "numctx/verbalizer.h"

namespace {

using namespace numctx;
using L = FormatLabel;

struct Check {
  std::ostringstream detail;
  bool ok = true;

  void Expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    mismatch: " << what << '\n';
    }
  }
};

const Lexicon& Bundled() {
  static const Lexicon lexicon = Lexicon::Load(std::string(NUMCTX_DATA_DIR) + "/lexicon_ms.tsv");
  return lexicon;
}

// ------------------------------------------------------------------ 1

bool MetricOracle(Check& c) {
  ConfusionMatrix cm;
  cm << 69, 0, 0, 0, 15, 0,
        0, 89, 0, 0, 0, 0,
        0, 1, 9, 0, 0, 0,
        1, 0, 0, 76, 0, 0,
        0, 0, 0, 2, 68, 0,
        0, 0, 0, 1, 3, 81;
  const std::array<double, 6> recall = {82.14, 100.00, 90.00, 98.71, 97.14, 95.29};
  const std::array<double, 6> precision = {98.57, 98.88, 100.00, 96.10, 79.07, 100.00};
  constexpr double kTol = 0.02;
  for (auto label : kAllLabels) {
    const auto i = Index(label);
    const double r = 100.0 * Recall(cm, label);
    const double p = 100.0 * Precision(cm, label);
    const bool r_ok = std::abs(r - recall[i]) <= kTol + 1e-9;
    const bool p_ok = std::abs(p - precision[i]) <= kTol + 1e-9;
    char line[160];
    std::snprintf(line, sizeof line, "    %-11s recall %7.3f (want %6.2f) %s   precision %7.3f (want %6.2f) %s\n",
                  std::string(LabelName(label)).c_str(), r, recall[i], r_ok ? "ok" : "OFF", p,
                  precision[i], p_ok ? "ok" : "OFF");
    c.detail << line;
    c.ok = c.ok && r_ok && p_ok;
  }
  return c.ok;
}

// ------------------------------------------------------------------ 2

bool BowBytes(Check& c) {
  std::vector<int> bytes;
  for (char32_t g : Unigrams("1500")) bytes.push_back(GramByte(g));
  c.Expect(bytes == std::vector<int>{49, 53, 48, 48}, "\"1500\" bytes");
  return c.ok;
}

// ------------------------------------------------------------------ 3

bool ContextWindowFixture(Check& c) {
  const std::string text = "Mahkamah menetapkan 21 Januari ini untuk sebutan semula kes";
  const auto numbers = LocateNumbers(text);
  c.Expect(numbers.size() == 1, "one number located");
  if (!c.ok) return false;
  const auto w = WindowFor(text, numbers[0]);
  c.Expect(w.preposition2 == "mahkamah", "P2");
  c.Expect(w.preposition1 == "menetapkan", "P1");
  c.Expect(w.postposition1 == "januari", "S1");
  c.Expect(w.postposition2 == "ini", "S2");
  return c.ok;
}

// ------------------------------------------------------------------ 4

bool VerbalizerFixtures(Check& c) {
  auto token = [](const std::string& s) { return LocateNumbers(s).at(0); };
  auto expect = [&](const std::string& got, const std::string& want) {
    c.Expect(got == want, "'" + got + "' != '" + want + "'");
  };
  expect(Verbalize(token("1924"), L::kDate, {.year_mode = YearMode::kFull}),
         "seribu sembilan ratus dua puluh empat");
  expect(Verbalize(token("1924"), L::kDate, {.year_mode = YearMode::kPaired}),
         "sembilan belas dua puluh empat");
  expect(Verbalize(token("5%"), L::kPercentage), "lima peratus");
  expect(Verbalize(token("RM 2.50"), L::kCurrency, {.currency_mode = CurrencyMode::kSpoken}),
         "dua ringgit lima puluh sen");
  expect(Verbalize(token("2 PM"), L::kTime, {}, "PM"), "dua petang");
  expect(Verbalize(token("2.00 PM"), L::kTime, {}, "PM"), "dua petang");
  return c.ok;
}

// ------------------------------------------------------------------ 5

bool HeadlineComparison(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto corpus = LoadCorpus(std::string(NUMCTX_DATA_DIR) + "/corpus.csv");
  const auto counts = corpus.ClassCounts();
  c.Expect(corpus.size() >= 300, "corpus has >= 300 rows");
  c.Expect(*std::min_element(counts.begin(), counts.end()) >= 40, ">= 40 rows per class");
  c.detail << "    corpus rows " << corpus.size() << '\n';

  const std::vector<std::pair<std::string, TrainConfig>> classifiers = {
      {"DT", TrainConfig{.algorithm = Algorithm::kDecisionTree}},
      {"KNN1", TrainConfig{.algorithm = Algorithm::kKnn, .k = 1}},
      {"LDA", TrainConfig{.algorithm = Algorithm::kLda}},
      {"SVMlinear", TrainConfig{.algorithm = Algorithm::kLinearSvm}},
  };
  for (const auto& [name, cfg] : classifiers) {
    const auto ctx = CrossValidate(corpus, Extractor::kContext, Bundled(), cfg);
    const auto bow = CrossValidate(corpus, Extractor::kBow, Bundled(), cfg);
    const double gap = 100.0 * (ctx.summary.mean - bow.summary.mean);
    char line[160];
    std::snprintf(line, sizeof line, "    %-9s context %6.2f%%  bow %6.2f%%  gap %6.2f points\n",
                  name.c_str(), 100.0 * ctx.summary.mean, 100.0 * bow.summary.mean, gap);
    c.detail << line;
    if (name == "DT") c.Expect(ctx.summary.mean >= 0.85, "DT context mean >= 85%");
    c.Expect(gap >= 20.0, name + " gap >= 20 points");
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.detail << "    runtime " << seconds << " s\n";
  c.Expect(seconds < 60.0, "runtime < 60 s");
  return c.ok;
}

// ------------------------------------------------------------------ 6

bool PartitionProperties(Check& c) {
  std::mt19937_64 rng(20260601);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 2 + rng() % 11;
    Corpus corpus;
    for (auto label : kAllLabels) {
      const std::size_t n = rng() % 4 == 0 ? 0 : k + rng() % 60;
      for (std::size_t i = 0; i < n; ++i) {
        corpus.sentences.push_back({"r" + std::to_string(corpus.size()), "x 1", Span{2, 3}, label});
      }
    }
    if (corpus.empty()) corpus.sentences.assign(k, {"r", "x 1", Span{2, 3}, L::kDate});
    std::shuffle(corpus.sentences.begin(), corpus.sentences.end(), rng);
    const std::uint64_t seed = rng();
    const auto folds = StratifiedFolds(corpus, k, seed);
    const auto again = StratifiedFolds(corpus, k, seed);
    c.Expect(folds == again, "repeatable for trial " + std::to_string(trial));
    c.Expect(folds.size() == k, "fold count");

    std::vector<int> hits(corpus.size(), 0);
    std::vector<std::array<std::size_t, kNumLabels>> per_fold(folds.size());
    for (std::size_t f = 0; f < folds.size(); ++f) {
      per_fold[f].fill(0);
      for (auto i : folds[f]) {
        ++hits.at(i);
        ++per_fold[f][Index(corpus.sentences[i].label)];
      }
    }
    c.Expect(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }),
             "disjoint and exhaustive, trial " + std::to_string(trial));
    for (std::size_t l = 0; l < kNumLabels; ++l) {
      std::size_t lo = SIZE_MAX;
      std::size_t hi = 0;
      for (const auto& pf : per_fold) {
        lo = std::min(lo, pf[l]);
        hi = std::max(hi, pf[l]);
      }
      c.Expect(hi - lo <= 1, "class balance within 1, trial " + std::to_string(trial));
    }
  }
  return c.ok;
}

// ------------------------------------------------------------------ 7

// Exhaustive neighbour search coded without Eigen: full sort on
// (distance, index), majority vote, ties to smaller distance sum then
// label order.
L OracleKnn(const std::vector<std::vector<double>>& points, const std::vector<L>& labels,
            const std::vector<double>& q, int k) {
  std::vector<std::pair<double, std::size_t>> d;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) s += (points[i][j] - q[j]) * (points[i][j] - q[j]);
    d.push_back({s, i});
  }
  std::sort(d.begin(), d.end());
  std::array<int, kNumLabels> votes{};
  std::array<double, kNumLabels> sum{};
  for (int j = 0; j < k && j < static_cast<int>(d.size()); ++j) {
    const auto l = Index(labels[d[static_cast<std::size_t>(j)].second]);
    ++votes[l];
    sum[l] += std::sqrt(d[static_cast<std::size_t>(j)].first);
  }
  std::size_t best = 0;
  for (std::size_t l = 1; l < kNumLabels; ++l) {
    if (votes[l] > votes[best] || (votes[l] == votes[best] && sum[l] < sum[best])) best = l;
  }
  return kAllLabels[best];
}

bool KnnEquivalence(Check& c) {
  std::mt19937_64 rng(777);
  std::size_t queries = 0;
  std::size_t ties = 0;
  for (int set = 0; set < 50; ++set) {
    const std::size_t dim = 1 + rng() % 56;
    const std::size_t n = 1 + rng() % 200;
    // Half the sets use a small integer grid, which makes equal distances
    // common and exactly representable.
    const bool grid = set % 2 == 0;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto coord = [&] { return grid ? static_cast<double>(rng() % 3) : u(rng); };

    std::vector<std::vector<double>> points(n, std::vector<double>(dim));
    std::vector<L> labels(n);
    Matrix X(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && rng() % 5 == 0) {
        points[i] = points[rng() % i];  // duplicated point, possibly another label
      } else {
        for (auto& v : points[i]) v = coord();
      }
      labels[i] = kAllLabels[rng() % kNumLabels];
      for (std::size_t j = 0; j < dim; ++j) X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = points[i][j];
    }
    for (int k : {1, 3}) {
      TrainConfig cfg{.algorithm = Algorithm::kKnn, .k = k};
      const auto model = Train(X, labels, cfg);
      for (int qi = 0; qi < 20; ++qi) {
        std::vector<double> q(dim);
        if (qi % 4 == 0) {
          q = points[rng() % n];
        } else {
          for (auto& v : q) v = coord();
        }
        const Vector qv = Eigen::Map<const Vector>(q.data(), static_cast<Eigen::Index>(dim));
        const auto want = OracleKnn(points, labels, q, k);
        const auto got = model.Predict(qv);
        ++queries;

        std::vector<double> d;
        for (const auto& p : points) {
          double s = 0.0;
          for (std::size_t j = 0; j < dim; ++j) s += (p[j] - q[j]) * (p[j] - q[j]);
          d.push_back(s);
        }
        std::sort(d.begin(), d.end());
        if (d.size() > static_cast<std::size_t>(k) && d[static_cast<std::size_t>(k) - 1] == d[static_cast<std::size_t>(k)]) ++ties;

        c.Expect(got == want, "set " + std::to_string(set) + " k=" + std::to_string(k) +
                                  " query " + std::to_string(qi) + ": " +
                                  std::string(LabelName(got)) + " vs oracle " +
                                  std::string(LabelName(want)));
      }
    }
  }
  c.detail << "    " << queries << " queries, " << ties << " with a tie at the k-th neighbour\n";
  c.Expect(ties > 0, "tie cases exercised");
  return c.ok;
}

// ------------------------------------------------------------------ 8

double GiniOf(const std::vector<std::size_t>& rows, const std::vector<L>& y) {
  std::vector<std::size_t> counts(kNumLabels, 0);
  for (auto r : rows) ++counts[Index(y[r])];
  return Gini(counts);
}

bool TreePurity(Check& c) {
  std::mt19937_64 rng(8080);
  std::size_t internal = 0;
  for (int set = 0; set < 100; ++set) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 150);
    const Eigen::Index dim = 1 + static_cast<Eigen::Index>(rng() % 8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Matrix X(n, dim);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) X(i, j) = u(rng);
    }
    std::vector<L> y(static_cast<std::size_t>(n));
    for (auto& l : y) l = kAllLabels[rng() % (2 + rng() % 5)];

    TrainConfig cfg{.algorithm = Algorithm::kDecisionTree, .max_depth = 0, .min_leaf = 1};
    const auto model = Train(X, y, cfg);
    const auto& nodes = std::get<TreeParams>(model.params()).nodes;

    // Route every training row and check each internal node's split.
    std::vector<std::vector<std::size_t>> at(nodes.size());
    for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
      int node = 0;
      while (true) {
        at[static_cast<std::size_t>(node)].push_back(r);
        const auto& nd = nodes[static_cast<std::size_t>(node)];
        if (nd.is_leaf()) break;
        node = X(static_cast<Eigen::Index>(r), nd.feature) <= nd.threshold ? nd.left : nd.right;
      }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& nd = nodes[i];
      if (nd.is_leaf()) continue;
      ++internal;
      const auto& rows = at[i];
      const auto& left = at[static_cast<std::size_t>(nd.left)];
      const auto& right = at[static_cast<std::size_t>(nd.right)];
      const double parent = GiniOf(rows, y);
      const double weighted = (static_cast<double>(left.size()) * GiniOf(left, y) +
                               static_cast<double>(right.size()) * GiniOf(right, y)) /
                              static_cast<double>(rows.size());
      c.Expect(!left.empty() && !right.empty(), "non-empty children");
      c.Expect(weighted < parent, "strict Gini decrease in set " + std::to_string(set));
    }
    int correct = 0;
    for (Eigen::Index i = 0; i < n; ++i) correct += model.Predict(X.row(i).transpose()) == y[static_cast<std::size_t>(i)];
    c.Expect(correct == n, "100% training accuracy in set " + std::to_string(set));
  }
  c.detail << "    " << internal << " internal nodes checked\n";
  return c.ok;
}

// ------------------------------------------------------------------ 9

bool SerializationRoundTrip(Check& c) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g(0.0, 1.0);
  const Eigen::Index n = 150;
  const Eigen::Index dim = 12;
  Matrix X(n, dim);
  std::vector<L> y(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    y[static_cast<std::size_t>(i)] = kAllLabels[static_cast<std::size_t>(i) % kNumLabels];
    for (Eigen::Index j = 0; j < dim; ++j) {
      X(i, j) = g(rng) + (static_cast<Eigen::Index>(Index(y[static_cast<std::size_t>(i)])) == j % 6 ? 1.5 : 0.0);
    }
  }
  Matrix Q(1000, dim);
  for (Eigen::Index i = 0; i < Q.rows(); ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) Q(i, j) = 2.0 * g(rng);
  }
  for (auto algorithm : {Algorithm::kKnn, Algorithm::kDecisionTree, Algorithm::kLda,
                         Algorithm::kLinearSvm}) {
    TrainConfig cfg{.algorithm = algorithm, .k = 3};
    const auto model = Train(X, y, cfg);
    const auto back = Deserialize(Serialize(model));
    int same = 0;
    for (Eigen::Index i = 0; i < Q.rows(); ++i) {
      same += back.Predict(Q.row(i).transpose()) == model.Predict(Q.row(i).transpose());
    }
    c.detail << "    " << AlgorithmName(algorithm) << ": " << same << "/1000 identical\n";
    c.Expect(same == 1000, std::string(AlgorithmName(algorithm)) + " predictions differ");
  }
  return c.ok;
}

// ------------------------------------------------------------------ 10

bool EndToEndClassify(Check& c) {
  const std::string cmd = std::string("echo 'Mahkamah menetapkan 21 Januari ini untuk sebutan semula kes' | \"") +
                          NUMCTX_CLI + "\" classify";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    c.Expect(false, "cannot start CLI");
    return false;
  }
  std::string out;
  char buf[512];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = ::pclose(pipe);
  c.detail << "    output: " << out;
  c.Expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "exit status 0");
  c.Expect(out.rfind("20-22\tDate\t", 0) == 0, "span 20-22 labelled Date");
  return c.ok;
}

struct Criterion {
  const char* name;
  std::function<bool(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"metric oracle vs reference confusion matrix (+-0.02 points)", MetricOracle},
      {"BoW byte encoding of \"1500\"", BowBytes},
      {"context window of the reference sentence", ContextWindowFixture},
      {"verbalizer fixtures", VerbalizerFixtures},
      {"context vs BoW on the bundled corpus", HeadlineComparison},
      {"stratified partition properties (100 trials)", PartitionProperties},
      {"KNN matches exhaustive oracle (50 sets, k=1,3)", KnnEquivalence},
      {"DT strict Gini decrease and training purity (100 sets)", TreePurity},
      {"serialization round-trip on 1000 vectors", SerializationRoundTrip},
      {"end-to-end CLI classify", EndToEndClassify},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance_test [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "criterion must be 1.." << criteria.size() << '\n';
    return 2;
  }

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    Check check;
    bool ok = false;
    try {
      ok = criteria[i].run(check);
    } catch (const std::exception& e) {
      check.detail << "    exception: " << e.what() << '\n';
      ok = false;
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].name
              << '\n'
              << check.detail.str();
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
