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

#include "numctx/classifiers.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "numctx/errors.h"

namespace numctx {
namespace {

constexpr double kGainEps = 1e-12;

using Counts = std::array<std::size_t, kNumLabels>;

FormatLabel Majority(const Counts& counts) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < kNumLabels; ++c) {
    if (counts[c] > counts[best]) best = c;
  }
  return static_cast<FormatLabel>(best);
}

std::vector<FormatLabel> PresentClasses(std::span<const FormatLabel> y) {
  Counts counts{};
  for (FormatLabel l : y) ++counts[Index(l)];
  std::vector<FormatLabel> classes;
  for (FormatLabel l : kAllLabels) {
    if (counts[Index(l)] > 0) classes.push_back(l);
  }
  return classes;
}

// ---------------------------------------------------------------- KNN

FormatLabel PredictKnn(const KnnParams& p, const Eigen::Ref<const Vector>& x) {
  const Vector sq = (p.points.rowwise() - x.transpose()).rowwise().squaredNorm();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(sq.size()));
  std::iota(order.begin(), order.end(), 0);
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(p.k), order.size());
  // Equal distances resolve to the earlier training point.
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&](Eigen::Index a, Eigen::Index b) {
                      return sq(a) < sq(b) || (sq(a) == sq(b) && a < b);
                    });
  Counts votes{};
  std::array<double, kNumLabels> dist_sum{};
  for (std::size_t j = 0; j < k; ++j) {
    const auto i = order[j];
    const auto c = Index(p.labels[static_cast<std::size_t>(i)]);
    ++votes[c];
    dist_sum[c] += std::sqrt(sq(i));
  }
  std::size_t best = kNumLabels;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    if (votes[c] == 0) continue;
    if (best == kNumLabels || votes[c] > votes[best] ||
        (votes[c] == votes[best] && dist_sum[c] < dist_sum[best])) {
      best = c;
    }
  }
  return static_cast<FormatLabel>(best);
}

// ---------------------------------------------------------------- CART

class TreeBuilder {
 public:
  TreeBuilder(const Matrix& X, std::span<const FormatLabel> y, const TrainConfig& cfg)
      : X_(X), y_(y), cfg_(cfg) {}

  TreeParams Build() {
    std::vector<Eigen::Index> all(static_cast<std::size_t>(X_.rows()));
    std::iota(all.begin(), all.end(), 0);
    Grow(std::move(all), 0);
    return std::move(tree_);
  }

 private:
  struct Split {
    int feature = -1;
    double threshold = 0.0;
    double impurity = 0.0;
  };

  Counts CountLabels(const std::vector<Eigen::Index>& idx) const {
    Counts counts{};
    for (auto i : idx) ++counts[Index(y_[static_cast<std::size_t>(i)])];
    return counts;
  }

  std::optional<Split> BestSplit(const std::vector<Eigen::Index>& idx, const Counts& total,
                                 double parent_gini) const {
    const std::size_t n = idx.size();
    const auto min_leaf = static_cast<std::size_t>(cfg_.min_leaf);
    std::optional<Split> best;
    std::vector<Eigen::Index> sorted = idx;
    for (Eigen::Index f = 0; f < X_.cols(); ++f) {
      std::stable_sort(sorted.begin(), sorted.end(),
                       [&](Eigen::Index a, Eigen::Index b) { return X_(a, f) < X_(b, f); });
      Counts left{};
      for (std::size_t j = 0; j + 1 < n; ++j) {
        ++left[Index(y_[static_cast<std::size_t>(sorted[j])])];
        const double lo = X_(sorted[j], f);
        const double hi = X_(sorted[j + 1], f);
        if (lo == hi) continue;
        const std::size_t n_left = j + 1;
        const std::size_t n_right = n - n_left;
        if (n_left < min_leaf || n_right < min_leaf) continue;
        Counts right{};
        for (std::size_t c = 0; c < kNumLabels; ++c) right[c] = total[c] - left[c];
        const double impurity =
            (static_cast<double>(n_left) * Gini(left) + static_cast<double>(n_right) * Gini(right)) /
            static_cast<double>(n);
        if (!best || impurity < best->impurity - kGainEps) {
          double threshold = 0.5 * (lo + hi);
          if (!(threshold < hi)) threshold = lo;
          best = Split{static_cast<int>(f), threshold, impurity};
        }
      }
    }
    if (best && best->impurity < parent_gini - kGainEps) return best;
    return std::nullopt;
  }

  int Grow(std::vector<Eigen::Index> idx, int depth) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    const Counts counts = CountLabels(idx);
    tree_.nodes[id].label = Majority(counts);

    const double gini = Gini(counts);
    const bool depth_capped = cfg_.max_depth > 0 && depth >= cfg_.max_depth;
    if (gini == 0.0 || depth_capped ||
        idx.size() < 2 * static_cast<std::size_t>(cfg_.min_leaf)) {
      return id;
    }
    const auto split = BestSplit(idx, counts, gini);
    if (!split) return id;

    std::vector<Eigen::Index> left, right;
    for (auto i : idx) {
      (X_(i, split->feature) <= split->threshold ? left : right).push_back(i);
    }
    idx.clear();
    idx.shrink_to_fit();
    const int l = Grow(std::move(left), depth + 1);
    const int r = Grow(std::move(right), depth + 1);
    TreeNode& node = tree_.nodes[id];
    node.feature = split->feature;
    node.threshold = split->threshold;
    node.left = l;
    node.right = r;
    return id;
  }

  const Matrix& X_;
  std::span<const FormatLabel> y_;
  const TrainConfig& cfg_;
  TreeParams tree_;
};

FormatLabel PredictTree(const TreeParams& p, const Eigen::Ref<const Vector>& x) {
  int id = 0;
  while (!p.nodes[id].is_leaf()) {
    const TreeNode& n = p.nodes[id];
    id = x(n.feature) <= n.threshold ? n.left : n.right;
  }
  return p.nodes[id].label;
}

// ---------------------------------------------------------------- LDA

LdaParams TrainLda(const Matrix& X, std::span<const FormatLabel> y, double shrinkage) {
  const Eigen::Index d = X.cols();
  if (d > kMaxLdaDim) {
    throw Error("LDA supports at most " + std::to_string(kMaxLdaDim) + " features, got " +
                std::to_string(d));
  }
  LdaParams p;
  p.classes = PresentClasses(y);
  if (p.classes.size() < 2) throw Error("LDA needs at least two classes in the training data");
  const auto num_classes = static_cast<Eigen::Index>(p.classes.size());

  std::array<int, kNumLabels> row_of{};
  row_of.fill(-1);
  for (Eigen::Index c = 0; c < num_classes; ++c) row_of[Index(p.classes[c])] = static_cast<int>(c);

  p.means = Matrix::Zero(num_classes, d);
  Vector counts = Vector::Zero(num_classes);
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    const int c = row_of[Index(y[static_cast<std::size_t>(i)])];
    p.means.row(c) += X.row(i);
    counts(c) += 1.0;
  }
  p.means.array().colwise() /= counts.array();
  p.priors = counts / static_cast<double>(X.rows());

  Matrix centered(X.rows(), d);
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    centered.row(i) = X.row(i) - p.means.row(row_of[Index(y[static_cast<std::size_t>(i)])]);
  }
  const Eigen::Index dof = X.rows() - num_classes;
  Matrix cov = (centered.transpose() * centered) / static_cast<double>(dof > 0 ? dof : 1);
  double scale = cov.trace() / static_cast<double>(d);
  if (!(scale > 0.0)) scale = 1.0;
  cov.diagonal().array() += shrinkage * scale;

  Eigen::LLT<Matrix> llt(cov);
  if (llt.info() != Eigen::Success || llt.rcond() < 1e-12) {
    throw Error("pooled covariance is singular; raise the LDA shrinkage");
  }
  p.inv_covariance = llt.solve(Matrix::Identity(d, d));
  p.Finalize();
  return p;
}

template <typename Classes>
FormatLabel ArgmaxScore(const Vector& scores, const Classes& classes) {
  Eigen::Index best = 0;
  for (Eigen::Index c = 1; c < scores.size(); ++c) {
    if (scores(c) > scores(best)) best = c;
  }
  return classes[static_cast<std::size_t>(best)];
}

// ---------------------------------------------------------------- SVM

// Pegasos-style subgradient descent on the regularized hinge loss, one
// separator per class; the bias rides along as a constant feature.
SvmParams TrainSvm(const Matrix& X, std::span<const FormatLabel> y, const TrainConfig& cfg) {
  SvmParams p;
  p.classes = PresentClasses(y);
  const Eigen::Index n = X.rows();
  const Eigen::Index d = X.cols();
  const auto num_classes = static_cast<Eigen::Index>(p.classes.size());

  Matrix augmented(n, d + 1);
  augmented.leftCols(d) = X;
  augmented.col(d).setOnes();

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::vector<Eigen::Index>> orders(static_cast<std::size_t>(cfg.epochs));
  for (auto& order : orders) {
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  }

  p.weights = Matrix::Zero(num_classes, d);
  p.bias = Vector::Zero(num_classes);
  for (Eigen::Index c = 0; c < num_classes; ++c) {
    Vector w = Vector::Zero(d + 1);
    double t = 0.0;
    for (const auto& order : orders) {
      for (Eigen::Index i : order) {
        t += 1.0;
        const double target = y[static_cast<std::size_t>(i)] == p.classes[c] ? 1.0 : -1.0;
        const double margin = target * augmented.row(i).dot(w);
        const double step = 1.0 / (cfg.c_reg * t);
        w *= 1.0 - step * cfg.c_reg;
        if (margin < 1.0) w += (step * target) * augmented.row(i).transpose();
      }
    }
    p.weights.row(c) = w.head(d).transpose();
    p.bias(c) = w(d);
  }
  return p;
}

// ---------------------------------------------------------------- text I/O

std::string Real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class BlobReader {
 public:
  explicit BlobReader(std::string_view blob) : in_(std::string(blob)) {}

  // Next non-empty line split on whitespace; its first word must be `key`.
  std::vector<std::string> Expect(std::string_view key, std::size_t min_words = 1) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream words(line);
      std::vector<std::string> out;
      for (std::string w; words >> w;) out.push_back(w);
      if (out.empty()) continue;
      if (out[0] != key) Fail("expected '" + std::string(key) + "', found '" + out[0] + "'");
      if (out.size() < min_words) Fail("too few fields for '" + std::string(key) + "'");
      return out;
    }
    Fail("truncated model: missing '" + std::string(key) + "'");
  }

  long Int(const std::string& s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) Fail("bad integer '" + s + "'");
    return v;
  }

  double Real(const std::string& s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) Fail("bad real '" + s + "'");
    return v;
  }

  FormatLabel Label(const std::string& s) {
    auto l = ParseLabel(s);
    if (!l) Fail("bad label '" + s + "'");
    return *l;
  }

  long Count(const std::string& s, long limit) {
    const long v = Int(s);
    if (v < 0 || v > limit) Fail("count out of range: " + s);
    return v;
  }

  Eigen::RowVectorXd ReadRow(const std::vector<std::string>& words, std::size_t from,
                             Eigen::Index d) {
    if (words.size() != from + static_cast<std::size_t>(d)) {
      Fail("expected " + std::to_string(d) + " values");
    }
    Eigen::RowVectorXd out(d);
    for (Eigen::Index j = 0; j < d; ++j) out(j) = Real(words[from + static_cast<std::size_t>(j)]);
    return out;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw FormatError("model blob line " + std::to_string(line_no_) + ": " + what);
  }

 private:
  std::istringstream in_;
  int line_no_ = 0;
};

constexpr long kMaxCount = 100'000'000;

}  // namespace

double Gini(std::span<const std::size_t> counts) {
  const double n = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::size_t{0}));
  if (n == 0.0) return 0.0;
  double sum_sq = 0.0;
  for (auto c : counts) {
    const double p = static_cast<double>(c) / n;
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kKnn: return "knn";
    case Algorithm::kDecisionTree: return "dt";
    case Algorithm::kLda: return "lda";
    case Algorithm::kLinearSvm: return "svm";
  }
  return "?";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kKnn, Algorithm::kDecisionTree, Algorithm::kLda,
                      Algorithm::kLinearSvm}) {
    if (AlgorithmName(a) == name) return a;
  }
  return std::nullopt;
}

void TrainConfig::Validate() const {
  switch (algorithm) {
    case Algorithm::kKnn:
      if (k < 1) throw ContractError("KNN k must be >= 1");
      break;
    case Algorithm::kDecisionTree:
      if (max_depth < 0) throw ContractError("max_depth must be >= 0 (0 = unlimited)");
      if (min_leaf < 1) throw ContractError("min_leaf must be >= 1");
      break;
    case Algorithm::kLda:
      if (!(shrinkage >= 0.0) || !std::isfinite(shrinkage)) {
        throw ContractError("shrinkage must be a finite non-negative number");
      }
      break;
    case Algorithm::kLinearSvm:
      if (!(c_reg > 0.0) || !std::isfinite(c_reg)) throw ContractError("c_reg must be positive");
      if (epochs < 1) throw ContractError("epochs must be >= 1");
      break;
  }
}

void LdaParams::Finalize() {
  coef = means * inv_covariance;
  intercept.resize(means.rows());
  for (Eigen::Index c = 0; c < means.rows(); ++c) {
    intercept(c) = -0.5 * coef.row(c).dot(means.row(c)) + std::log(priors(c));
  }
}

TrainedModel::TrainedModel(Eigen::Index dim, Params params)
    : dim_(dim), params_(std::move(params)) {}

Algorithm TrainedModel::algorithm() const {
  switch (params_.index()) {
    case 0: return Algorithm::kKnn;
    case 1: return Algorithm::kDecisionTree;
    case 2: return Algorithm::kLda;
    default: return Algorithm::kLinearSvm;
  }
}

FormatLabel TrainedModel::Predict(const Eigen::Ref<const Vector>& x) const {
  if (x.size() != dim_) {
    throw DimensionError("model expects " + std::to_string(dim_) + " features, got " +
                         std::to_string(x.size()));
  }
  if (const auto* knn = std::get_if<KnnParams>(&params_)) return PredictKnn(*knn, x);
  if (const auto* tree = std::get_if<TreeParams>(&params_)) return PredictTree(*tree, x);
  if (const auto* lda = std::get_if<LdaParams>(&params_)) {
    return ArgmaxScore(Vector(lda->coef * x + lda->intercept), lda->classes);
  }
  const auto& svm = std::get<SvmParams>(params_);
  return ArgmaxScore(Vector(svm.weights * x + svm.bias), svm.classes);
}

TrainedModel Train(const Matrix& X, std::span<const FormatLabel> y, const TrainConfig& cfg) {
  cfg.Validate();
  if (X.rows() == 0) throw Error("cannot train on an empty dataset");
  if (static_cast<std::size_t>(X.rows()) != y.size()) {
    throw DimensionError("feature rows (" + std::to_string(X.rows()) + ") and labels (" +
                         std::to_string(y.size()) + ") differ");
  }
  if (X.cols() == 0) throw DimensionError("feature dimension is zero");
  switch (cfg.algorithm) {
    case Algorithm::kKnn:
      return TrainedModel(X.cols(), KnnParams{cfg.k, X, {y.begin(), y.end()}});
    case Algorithm::kDecisionTree:
      return TrainedModel(X.cols(), TreeBuilder(X, y, cfg).Build());
    case Algorithm::kLda:
      return TrainedModel(X.cols(), TrainLda(X, y, cfg.shrinkage));
    case Algorithm::kLinearSvm:
      return TrainedModel(X.cols(), TrainSvm(X, y, cfg));
  }
  throw ContractError("unknown algorithm");
}

std::string Serialize(const TrainedModel& model) {
  std::ostringstream out;
  const auto d = model.dim();
  out << "numctx-model 1\n";
  out << "algorithm " << AlgorithmName(model.algorithm()) << '\n';
  out << "dim " << d << '\n';
  auto row = [&out](const auto& v) {
    for (Eigen::Index j = 0; j < v.size(); ++j) out << ' ' << Real(v(j));
  };
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, KnnParams>) {
          out << "k " << p.k << '\n';
          out << "points " << p.points.rows() << '\n';
          for (Eigen::Index i = 0; i < p.points.rows(); ++i) {
            out << "point " << LabelName(p.labels[static_cast<std::size_t>(i)]);
            row(p.points.row(i));
            out << '\n';
          }
        } else if constexpr (std::is_same_v<P, TreeParams>) {
          out << "nodes " << p.nodes.size() << '\n';
          for (const auto& n : p.nodes) {
            out << "node " << n.feature << ' ' << Real(n.threshold) << ' ' << n.left << ' '
                << n.right << ' ' << LabelName(n.label) << '\n';
          }
        } else if constexpr (std::is_same_v<P, LdaParams>) {
          out << "classes " << p.classes.size() << '\n';
          for (std::size_t c = 0; c < p.classes.size(); ++c) {
            const auto ci = static_cast<Eigen::Index>(c);
            out << "class " << LabelName(p.classes[c]) << ' ' << Real(p.priors(ci));
            row(p.means.row(ci));
            out << '\n';
          }
          for (Eigen::Index i = 0; i < d; ++i) {
            out << "icov";
            row(p.inv_covariance.row(i));
            out << '\n';
          }
        } else {
          out << "classes " << p.classes.size() << '\n';
          for (std::size_t c = 0; c < p.classes.size(); ++c) {
            const auto ci = static_cast<Eigen::Index>(c);
            out << "class " << LabelName(p.classes[c]) << ' ' << Real(p.bias(ci));
            row(p.weights.row(ci));
            out << '\n';
          }
        }
      },
      model.params());
  out << "end\n";
  return out.str();
}

TrainedModel Deserialize(std::string_view blob) {
  BlobReader r(blob);
  const auto magic = r.Expect("numctx-model", 2);
  if (magic[1] != "1") r.Fail("unsupported model version " + magic[1]);
  const auto algo_name = r.Expect("algorithm", 2)[1];
  const auto algorithm = ParseAlgorithm(algo_name);
  if (!algorithm) r.Fail("unknown algorithm '" + algo_name + "'");
  const Eigen::Index d = r.Count(r.Expect("dim", 2)[1], kMaxCount);
  if (d == 0) r.Fail("zero dimension");

  auto read_classes = [&](std::vector<FormatLabel>& classes, Matrix& rows, Vector& scalar) {
    const auto num = r.Count(r.Expect("classes", 2)[1], static_cast<long>(kNumLabels));
    rows.resize(num, d);
    scalar.resize(num);
    for (long c = 0; c < num; ++c) {
      const auto words = r.Expect("class", 3);
      const FormatLabel label = r.Label(words[1]);
      if (!classes.empty() && Index(label) <= Index(classes.back())) {
        r.Fail("classes out of order");
      }
      classes.push_back(label);
      scalar(c) = r.Real(words[2]);
      rows.row(c) = r.ReadRow(words, 3, d);
    }
  };

  std::optional<TrainedModel> model;
  switch (*algorithm) {
    case Algorithm::kKnn: {
      KnnParams p;
      p.k = static_cast<int>(r.Count(r.Expect("k", 2)[1], kMaxCount));
      if (p.k < 1) r.Fail("k must be >= 1");
      const auto n = r.Count(r.Expect("points", 2)[1], kMaxCount);
      if (n == 0) r.Fail("no stored points");
      p.points.resize(n, d);
      for (long i = 0; i < n; ++i) {
        const auto words = r.Expect("point", 2);
        p.labels.push_back(r.Label(words[1]));
        p.points.row(i) = r.ReadRow(words, 2, d);
      }
      model.emplace(d, std::move(p));
      break;
    }
    case Algorithm::kDecisionTree: {
      TreeParams p;
      const auto n = r.Count(r.Expect("nodes", 2)[1], kMaxCount);
      if (n == 0) r.Fail("empty tree");
      for (long i = 0; i < n; ++i) {
        const auto words = r.Expect("node", 6);
        if (words.size() != 6) r.Fail("node needs 5 fields");
        TreeNode node;
        node.feature = static_cast<int>(r.Int(words[1]));
        node.threshold = r.Real(words[2]);
        node.left = static_cast<int>(r.Int(words[3]));
        node.right = static_cast<int>(r.Int(words[4]));
        node.label = r.Label(words[5]);
        if (!node.is_leaf()) {
          // Children always follow their parent, which rules out cycles.
          if (node.feature >= d || node.left <= i || node.right <= i || node.left >= n ||
              node.right >= n) {
            r.Fail("node " + std::to_string(i) + " has invalid links");
          }
        } else if (node.feature != -1) {
          r.Fail("node " + std::to_string(i) + " has invalid feature");
        }
        p.nodes.push_back(node);
      }
      model.emplace(d, std::move(p));
      break;
    }
    case Algorithm::kLda: {
      LdaParams p;
      read_classes(p.classes, p.means, p.priors);
      if (p.classes.size() < 2) r.Fail("LDA model needs two classes");
      p.inv_covariance.resize(d, d);
      for (Eigen::Index i = 0; i < d; ++i) {
        p.inv_covariance.row(i) = r.ReadRow(r.Expect("icov"), 1, d);
      }
      p.Finalize();
      model.emplace(d, std::move(p));
      break;
    }
    case Algorithm::kLinearSvm: {
      SvmParams p;
      read_classes(p.classes, p.weights, p.bias);
      if (p.classes.empty()) r.Fail("SVM model has no classes");
      model.emplace(d, std::move(p));
      break;
    }
  }
  r.Expect("end");
  return std::move(*model);
}

}  // namespace numctx
