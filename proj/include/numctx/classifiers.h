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

#ifndef NUMCTX_CLASSIFIERS_H_
#define NUMCTX_CLASSIFIERS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "numctx/label.h"

namespace numctx {

enum class Algorithm { kKnn, kDecisionTree, kLda, kLinearSvm };

std::string_view AlgorithmName(Algorithm algorithm);  // "knn", "dt", "lda", "svm"
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

struct TrainConfig {
  Algorithm algorithm = Algorithm::kDecisionTree;
  int k = 1;             // KNN neighbours
  int max_depth = 16;    // DT; 0 means unlimited
  int min_leaf = 1;      // DT
  double shrinkage = 1e-4;  // LDA ridge, relative to mean variance
  double c_reg = 1.0;    // SVM regularization; step size is 1/(c_reg * t)
  int epochs = 200;      // SVM
  std::uint64_t seed = 42;

  // Throws ContractError on out-of-range fields of the selected algorithm.
  void Validate() const;
};

// Largest feature dimension LDA will invert a covariance for.
inline constexpr Eigen::Index kMaxLdaDim = 4096;

// Rows of X are samples.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct KnnParams {
  int k = 1;
  Matrix points;
  std::vector<FormatLabel> labels;
};

struct TreeNode {
  // Internal node when feature >= 0: x[feature] <= threshold goes left.
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  FormatLabel label = FormatLabel::kDate;  // leaf prediction

  bool is_leaf() const { return feature < 0; }
};

struct TreeParams {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
};

struct LdaParams {
  std::vector<FormatLabel> classes;  // classes seen in training, label order
  Matrix means;                      // one row per class
  Vector priors;
  Matrix inv_covariance;             // of the regularized pooled covariance

  // Derived linear scores: coef * x + intercept. Rebuilt by Finalize().
  Matrix coef;
  Vector intercept;
  void Finalize();
};

struct SvmParams {
  std::vector<FormatLabel> classes;  // one-vs-rest separators, label order
  Matrix weights;                    // one row per class
  Vector bias;
};

class TrainedModel {
 public:
  using Params = std::variant<KnnParams, TreeParams, LdaParams, SvmParams>;

  TrainedModel(Eigen::Index dim, Params params);

  Algorithm algorithm() const;
  Eigen::Index dim() const { return dim_; }
  const Params& params() const { return params_; }

  // Throws DimensionError when x.size() != dim().
  FormatLabel Predict(const Eigen::Ref<const Vector>& x) const;

 private:
  Eigen::Index dim_;
  Params params_;
};

TrainedModel Train(const Matrix& X, std::span<const FormatLabel> y, const TrainConfig& cfg);

inline FormatLabel Predict(const TrainedModel& model, const Eigen::Ref<const Vector>& x) {
  return model.Predict(x);
}

// Line-oriented text with reals printed to 17 significant digits, so a
// reloaded model predicts bit-identically. Format described in README.
std::string Serialize(const TrainedModel& model);
// Throws FormatError on any malformed or truncated blob.
TrainedModel Deserialize(std::string_view blob);

// Gini impurity of a label histogram.
double Gini(std::span<const std::size_t> counts);

}  // namespace numctx

#endif  // NUMCTX_CLASSIFIERS_H_
