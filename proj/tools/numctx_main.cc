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

// Command-line front end: validate a corpus, train a pipeline, run k-fold
// evaluation, compare context features against the bag-of-words baseline,
// and classify + verbalize numbers in text read from stdin.
//
// Exit codes: 0 success, 1 data or runtime error, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "numctx/corpus.h"
#include "numctx/errors.h"
#include "numctx/eval.h"
#include "numctx/pipeline.h"
#include "numctx/verbalizer.h"

namespace {

using namespace numctx;

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string corpus = DefaultCorpusPath();
  std::string lexicon;
  std::string extractor = "context";
  std::string classifier = "dt";
  TrainConfig cfg;
  bool k_given = false;
  std::size_t folds = 10;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::string format = "tsv";
  std::string model_in;
  std::string model_out;
  std::string year_mode = "full";
  std::string currency_mode = "spoken";
  std::string unit_mode = "full";
};

void AddCorpus(CLI::App* cmd, Options& o) {
  cmd->add_option("--corpus", o.corpus, "Labeled corpus CSV (id,text,start,end,label)")
      ->capture_default_str();
}

void AddLexicon(CLI::App* cmd, Options& o) {
  cmd->add_option("--lexicon", o.lexicon,
                  "Keyword lexicon (word<TAB>Class); default $NUMCTX_LEXICON or bundled");
}

void AddClassifier(CLI::App* cmd, Options& o) {
  cmd->add_option("--classifier", o.classifier, "dt | knn | knn1 | knn3 | lda | svm")
      ->capture_default_str();
  cmd->add_option_function<int>(
      "--k", [&o](int k) { o.cfg.k = k; o.k_given = true; }, "KNN neighbours (default 1)");
  cmd->add_option("--max-depth", o.cfg.max_depth, "DT depth limit, 0 = unlimited")
      ->capture_default_str();
  cmd->add_option("--min-leaf", o.cfg.min_leaf, "DT minimum samples per leaf")
      ->capture_default_str();
  cmd->add_option("--shrinkage", o.cfg.shrinkage, "LDA covariance shrinkage")
      ->capture_default_str();
  cmd->add_option("--c-reg", o.cfg.c_reg, "SVM regularization (step 1/(c_reg*t))")
      ->capture_default_str();
  cmd->add_option("--epochs", o.cfg.epochs, "SVM training epochs")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed for fold shuffling and SVM sample order")
      ->capture_default_str();
}

void AddEvaluation(CLI::App* cmd, Options& o) {
  cmd->add_option("--folds", o.folds, "Cross-validation folds (>= 2)")->capture_default_str();
  cmd->add_option("--format", o.format, "Report format: tsv | json")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads, 0 = all cores");
}

Algorithm ResolveClassifier(Options& o) {
  const std::string& name = o.classifier;
  if (name == "svm-rbf" || name == "svm-poly" || name == "svmrbf" || name == "svmpoly") {
    throw UsageError("classifier '" + name +
                     "' is unsupported (out of scope: only the linear SVM is provided; see "
                     "README, 'Classifiers')");
  }
  if (name == "knn1" || name == "knn3") {
    if (!o.k_given) o.cfg.k = name == "knn1" ? 1 : 3;
    return Algorithm::kKnn;
  }
  if (name == "svm-linear" || name == "svmlinear") return Algorithm::kLinearSvm;
  if (auto a = ParseAlgorithm(name)) return *a;
  throw UsageError("unknown classifier '" + name + "' (dt, knn, knn1, knn3, lda, svm)");
}

void Resolve(Options& o) {
  o.cfg.algorithm = ResolveClassifier(o);
  o.cfg.seed = o.seed;
  try {
    o.cfg.Validate();
  } catch (const ContractError& e) {
    throw UsageError(e.what());
  }
  if (o.folds < 2) throw UsageError("--folds must be at least 2");
  if (o.format != "tsv" && o.format != "json") throw UsageError("--format must be tsv or json");
  if (o.extractor != "context" && o.extractor != "bow") {
    throw UsageError("--extractor must be context or bow");
  }
}

Extractor ExtractorOf(const Options& o) {
  return o.extractor == "bow" ? Extractor::kBow : Extractor::kContext;
}

ReportFormat FormatOf(const Options& o) {
  return o.format == "json" ? ReportFormat::kJson : ReportFormat::kTsv;
}

Lexicon LoadLexicon(const Options& o) {
  return Lexicon::Load(o.lexicon.empty() ? Lexicon::DefaultPath() : o.lexicon);
}

VerbalizationStyle StyleOf(const Options& o) {
  VerbalizationStyle style;
  if (o.year_mode == "paired") {
    style.year_mode = YearMode::kPaired;
  } else if (o.year_mode != "full") {
    throw UsageError("--year-mode must be paired or full");
  }
  if (o.currency_mode == "symbolic") {
    style.currency_mode = CurrencyMode::kSymbolic;
  } else if (o.currency_mode != "spoken") {
    throw UsageError("--currency-mode must be symbolic or spoken");
  }
  if (o.unit_mode == "abbrev") {
    style.unit_mode = UnitMode::kAbbrev;
  } else if (o.unit_mode != "full") {
    throw UsageError("--unit-mode must be abbrev or full");
  }
  return style;
}

int CmdValidate(const Options& o) {
  const CorpusCheck check = CheckCorpus(ReadFile(o.corpus));
  const auto counts = check.corpus.ClassCounts();
  std::cout << "label\tcount\n";
  for (FormatLabel l : kAllLabels) std::cout << LabelName(l) << '\t' << counts[Index(l)] << '\n';
  std::cout << "total\t" << check.corpus.size() << '\n';
  for (FormatLabel l : kAllLabels) {
    if (counts[Index(l)] == 0) {
      std::cerr << "warning: class " << LabelName(l) << " has 0 instances\n";
    }
  }
  for (const auto& p : check.problems) std::cerr << o.corpus << ": " << p << '\n';
  return check.problems.empty() ? 0 : kExitData;
}

int CmdTrain(const Options& o) {
  const Corpus corpus = LoadCorpus(o.corpus);
  const Pipeline pipeline = Pipeline::Fit(corpus, ExtractorOf(o), LoadLexicon(o), o.cfg);
  const std::string blob = pipeline.Serialize();
  if (o.model_out.empty() || o.model_out == "-") {
    std::cout << blob;
  } else {
    std::ofstream out(o.model_out);
    if (!(out << blob)) throw Error("cannot write model to '" + o.model_out + "'");
  }
  return 0;
}

int CmdEvaluate(const Options& o) {
  const Corpus corpus = LoadCorpus(o.corpus);
  const RunSummary run = CrossValidate(corpus, ExtractorOf(o), LoadLexicon(o), o.cfg,
                                       {o.folds, o.seed, o.threads});
  std::cout << FormatRunReport(run, FormatOf(o));
  return 0;
}

int CmdCompare(const Options& o) {
  const Corpus corpus = LoadCorpus(o.corpus);
  if (corpus.empty()) throw Error("corpus '" + o.corpus + "' has no rows");
  const Lexicon lexicon = LoadLexicon(o);
  const CrossValidateOptions cv{o.folds, o.seed, o.threads};
  const RunSummary context = CrossValidate(corpus, Extractor::kContext, lexicon, o.cfg, cv);
  const RunSummary bow = CrossValidate(corpus, Extractor::kBow, lexicon, o.cfg, cv);
  std::cout << FormatComparisonReport(context, bow, FormatOf(o));
  return 0;
}

int CmdClassify(const Options& o) {
  const Lexicon lexicon = LoadLexicon(o);
  const VerbalizationStyle style = StyleOf(o);
  std::optional<Pipeline> pipeline;
  if (!o.model_in.empty()) {
    pipeline.emplace(Pipeline::Deserialize(ReadFile(o.model_in)));
    if (pipeline->lexicon_version() != lexicon.version()) {
      std::cerr << "warning: model was trained with lexicon '" << pipeline->lexicon_version()
                << "', using '" << lexicon.version() << "'\n";
    }
  } else {
    pipeline.emplace(Pipeline::Fit(LoadCorpus(o.corpus), ExtractorOf(o), lexicon, o.cfg));
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    for (const auto& n : ClassifySentence(line, *pipeline, lexicon, style)) {
      std::cout << n.token.span.start << '-' << n.token.span.end << '\t' << LabelName(n.label)
                << '\t' << (n.verbalization ? *n.verbalization : n.token.raw) << '\n';
      if (!n.verbalization) std::cerr << "warning: " << n.error << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numctx: number-format classification and Malay verbalization"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check a corpus file and print class counts");
  AddCorpus(validate, o);

  auto* train = app.add_subcommand("train", "Train a pipeline on the corpus and save it");
  AddCorpus(train, o);
  AddLexicon(train, o);
  AddClassifier(train, o);
  train->add_option("--extractor", o.extractor, "context | bow")->capture_default_str();
  train->add_option("--out", o.model_out, "Model file to write (default stdout)");

  auto* evaluate = app.add_subcommand("evaluate", "Stratified k-fold cross-validation report");
  AddCorpus(evaluate, o);
  AddLexicon(evaluate, o);
  AddClassifier(evaluate, o);
  AddEvaluation(evaluate, o);
  evaluate->add_option("--extractor", o.extractor, "context | bow")->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Context features vs bag-of-words baseline");
  AddCorpus(compare, o);
  AddLexicon(compare, o);
  AddClassifier(compare, o);
  AddEvaluation(compare, o);

  auto* classify = app.add_subcommand(
      "classify", "Classify and verbalize numbers in stdin lines (span<TAB>label<TAB>words)");
  AddCorpus(classify, o);
  AddLexicon(classify, o);
  AddClassifier(classify, o);
  classify->add_option("--extractor", o.extractor, "context | bow (when retraining)")
      ->capture_default_str();
  classify->add_option("--model", o.model_in, "Trained pipeline; default retrains on --corpus");
  classify->add_option("--year-mode", o.year_mode, "paired | full")->capture_default_str();
  classify->add_option("--currency-mode", o.currency_mode, "symbolic | spoken")
      ->capture_default_str();
  classify->add_option("--unit-mode", o.unit_mode, "abbrev | full")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!validate->parsed()) Resolve(o);
    if (validate->parsed()) return CmdValidate(o);
    if (train->parsed()) return CmdTrain(o);
    if (evaluate->parsed()) return CmdEvaluate(o);
    if (compare->parsed()) return CmdCompare(o);
    if (classify->parsed()) {
      StyleOf(o);
      return CmdClassify(o);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
