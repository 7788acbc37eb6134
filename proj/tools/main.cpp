// Command-line frontend: train / predict / eval / cv over labeled sequence
// files ("<label><TAB><sequence>" per line).

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqclass/corpus.hpp"
#include "seqclass/eval.hpp"
#include "seqclass/model.hpp"
#include "seqclass/trainer.hpp"

namespace {

using namespace seqclass;

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

struct TrainOptions {
  std::string objective = "logistic";
  std::size_t maxgap = 0;
  double regularizer = 1.0;
  double alpha = 0.5;
  std::size_t minpat = 1;
  std::size_t maxpat = 0;  // 0 = unrestricted
  std::size_t minsup = 1;
  std::string token_type = "char";
  std::string traversal = "DFS";
  double convergence_threshold = 0.005;
  std::size_t max_iterations = 5000;
  int verbosity = 1;
};

void add_train_options(CLI::App& cmd, TrainOptions& opts) {
  cmd.add_option("-o,--objective", opts.objective,
                 "Objective function: logistic or svm (squared hinge)")
      ->check(CLI::IsMember({"logistic", "svm"}));
  cmd.add_option("-g,--maxgap", opts.maxgap,
                 "Maximum number of consecutive wildcards in a feature");
  cmd.add_option("-C,--regularizer", opts.regularizer, "Regularization weight C")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("-a,--alpha", opts.alpha, "l1 share of the elastic-net penalty")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("-l,--minpat", opts.minpat, "Minimum feature length")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  cmd.add_option("-L,--maxpat", opts.maxpat, "Maximum feature length (0 = unrestricted)");
  cmd.add_option("-m,--minsup", opts.minsup, "Minimum document support of a feature")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  cmd.add_option("-n,--token-type", opts.token_type, "Tokenization: char or word")
      ->check(CLI::IsMember({"char", "word"}));
  cmd.add_option("-r,--traversal", opts.traversal, "Search tree traversal: BFS or DFS")
      ->check(CLI::IsMember({"BFS", "DFS"}));
  cmd.add_option("-c,--convergence-threshold", opts.convergence_threshold,
                 "Stop when the mean absolute score change falls below this")
      ->check(CLI::PositiveNumber);
  cmd.add_option("-T,--max-iterations", opts.max_iterations,
                 "Hard cap on optimization iterations")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  cmd.add_option("-v,--verbosity", opts.verbosity, "Per-iteration logging when >= 1");
}

TrainerConfig to_config(const TrainOptions& opts) {
  TrainerConfig cfg;
  cfg.kind = opts.objective == "svm" ? LossKind::squared_hinge : LossKind::logistic;
  cfg.penalty.C = opts.regularizer;
  cfg.penalty.alpha = opts.alpha;
  cfg.search.maxgap = opts.maxgap;
  cfg.search.minpat = opts.minpat;
  cfg.search.maxpat =
      opts.maxpat == 0 ? std::numeric_limits<std::size_t>::max() : opts.maxpat;
  cfg.search.minsup = opts.minsup;
  cfg.search.traversal = opts.traversal == "BFS" ? Traversal::bfs : Traversal::dfs;
  cfg.tokenization = opts.token_type == "word" ? Tokenization::words : Tokenization::chars;
  cfg.convergence_threshold = opts.convergence_threshold;
  cfg.max_iterations = opts.max_iterations;
  cfg.verbosity = opts.verbosity;
  return cfg;
}

std::string format_score(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string format_metric(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

int run_train(const TrainOptions& opts, const std::string& train_path,
              const std::string& model_path) {
  TrainerConfig cfg = to_config(opts);
  Corpus corpus = load_corpus(train_path, cfg.tokenization);
  Model model = train(corpus, cfg, nullptr, &std::cerr);
  model.save(model_path);
  if (cfg.verbosity >= 1) {
    std::cerr << "trained " << model.entries().size() << " features from "
              << corpus.size() << " sequences\n";
  }
  return kExitOk;
}

int run_predict(const std::string& model_path, const std::string& input_path,
                const std::string& token_type_flag) {
  Model model = Model::load(model_path);
  if (!token_type_flag.empty()) {
    Tokenization requested =
        token_type_flag == "word" ? Tokenization::words : Tokenization::chars;
    if (requested != model.tokenization()) {
      std::cerr << "error: -n/--token-type conflicts with the model's tokenization\n";
      return kExitUsageError;
    }
  }
  auto inputs = load_sequences(input_path, model.tokenization());
  for (const InputSequence& seq : inputs) {
    Prediction p = model.predict(seq.tokens);
    std::cout << format_score(p.score) << '\t' << (p.label > 0 ? "+1" : "-1");
    if (p.probability) std::cout << '\t' << format_score(*p.probability);
    std::cout << '\n';
  }
  return kExitOk;
}

std::vector<ScoredItem> score_labeled(const Model& model,
                                      const std::vector<InputSequence>& inputs) {
  std::vector<ScoredItem> items;
  items.reserve(inputs.size());
  for (const InputSequence& seq : inputs) {
    if (!seq.label) throw CorpusError("evaluation input must be labeled");
    items.push_back(ScoredItem{model.score(seq.tokens), *seq.label});
  }
  return items;
}

int run_eval(const std::string& model_path, const std::string& test_path,
             const std::string& roc_path) {
  Model model = Model::load(model_path);
  auto items = score_labeled(model, load_sequences(test_path, model.tokenization()));
  ConfusionCounts c = confusion(items);
  std::cout << "AUC\t" << format_metric(auc(items)) << '\n';
  std::cout << "AUC50\t" << format_metric(auc50(items)) << '\n';
  std::cout << "BER\t" << format_metric(ber(c)) << '\n';
  std::cout << "TP\t" << c.tp << '\n';
  std::cout << "FP\t" << c.fp << '\n';
  std::cout << "TN\t" << c.tn << '\n';
  std::cout << "FN\t" << c.fn << '\n';
  if (!roc_path.empty()) {
    std::ofstream out(roc_path);
    if (!out) throw CorpusError("cannot write " + roc_path);
    for (auto [fp_frac, tp_frac] : roc_points(items)) {
      out << format_score(fp_frac) << '\t' << format_score(tp_frac) << '\n';
    }
  }
  return kExitOk;
}

int run_cv(const TrainOptions& opts, const std::string& data_path, std::size_t k,
           std::uint64_t seed) {
  TrainerConfig cfg = to_config(opts);
  Corpus corpus = load_corpus(data_path, cfg.tokenization);
  auto folds = kfold_split(corpus, k, seed);

  std::cout << "fold\tAUC\tAUC50\tBER\n";
  double sum_auc = 0.0;
  double sum_auc50 = 0.0;
  double sum_ber = 0.0;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    std::vector<SequenceRecord> train_records;
    for (std::uint32_t id : folds[f].train) {
      SequenceRecord r = corpus.records()[id];
      r.id = static_cast<std::uint32_t>(train_records.size());
      train_records.push_back(std::move(r));
    }
    Corpus train_corpus = Corpus::from_records(std::move(train_records));
    Model model = train(train_corpus, cfg, nullptr, &std::cerr);

    std::vector<ScoredItem> items;
    for (std::uint32_t id : folds[f].test) {
      const SequenceRecord& r = corpus.records()[id];
      items.push_back(ScoredItem{model.score(r.tokens), r.label});
    }
    double fold_auc = auc(items);
    double fold_auc50 = auc50(items);
    double fold_ber = ber(confusion(items));
    sum_auc += fold_auc;
    sum_auc50 += fold_auc50;
    sum_ber += fold_ber;
    std::cout << f << '\t' << format_score(fold_auc) << '\t'
              << format_score(fold_auc50) << '\t' << format_score(fold_ber) << '\n';
  }
  double n = static_cast<double>(folds.size());
  std::cout << "mean\t" << format_score(sum_auc / n) << '\t'
            << format_score(sum_auc50 / n) << '\t' << format_score(sum_ber / n) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear sequence classifier over wildcard subsequence features"};
  app.require_subcommand(1);

  TrainOptions train_opts;
  std::string train_file;
  std::string model_file;
  CLI::App* cmd_train = app.add_subcommand("train", "Train a model from a labeled file");
  cmd_train->add_option("train_file", train_file, "Labeled training file")->required();
  cmd_train->add_option("model_file", model_file, "Output model path")->required();
  add_train_options(*cmd_train, train_opts);

  std::string predict_model;
  std::string predict_input;
  std::string predict_token_type;
  CLI::App* cmd_predict = app.add_subcommand("predict", "Score sequences with a model");
  cmd_predict->add_option("model_file", predict_model, "Model path")->required();
  cmd_predict->add_option("input_file", predict_input, "Sequences, labeled or not")
      ->required();
  cmd_predict
      ->add_option("-n,--token-type", predict_token_type,
                   "Assert the tokenization the model must use")
      ->check(CLI::IsMember({"char", "word"}));

  std::string eval_model;
  std::string eval_input;
  std::string eval_roc;
  CLI::App* cmd_eval = app.add_subcommand("eval", "Evaluate a model on a labeled file");
  cmd_eval->add_option("model_file", eval_model, "Model path")->required();
  cmd_eval->add_option("test_file", eval_input, "Labeled test file")->required();
  cmd_eval->add_option("--roc", eval_roc, "Write ROC points as TSV to this path");

  TrainOptions cv_opts;
  std::string cv_file;
  std::size_t cv_k = 5;
  std::uint64_t cv_seed = 1;
  CLI::App* cmd_cv = app.add_subcommand("cv", "Stratified k-fold cross-validation");
  cmd_cv->add_option("data_file", cv_file, "Labeled data file")->required();
  cmd_cv->add_option("-k,--folds", cv_k, "Number of folds")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  cmd_cv->add_option("--seed", cv_seed, "Seed for the fold shuffle");
  add_train_options(*cmd_cv, cv_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (cmd_train->parsed()) return run_train(train_opts, train_file, model_file);
    if (cmd_predict->parsed()) {
      return run_predict(predict_model, predict_input, predict_token_type);
    }
    if (cmd_eval->parsed()) return run_eval(eval_model, eval_input, eval_roc);
    if (cmd_cv->parsed()) return run_cv(cv_opts, cv_file, cv_k, cv_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}
