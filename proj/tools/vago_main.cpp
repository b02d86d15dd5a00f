// Copyright 2026 The Vago Authors.
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
//
// vago: lexicon-driven vagueness/subjectivity scoring with a hybrid
// embedding + expert-score classifier. Subcommands: analyze, train,
// evaluate, sweep, audit, lexicon-stats.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vago/corpus.hpp"
#include "vago/embeddings.hpp"
#include "vago/error.hpp"
#include "vago/evaluation.hpp"
#include "vago/fusion.hpp"
#include "vago/lexicon.hpp"
#include "vago/ner.hpp"
#include "vago/scoring.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string lexicon_path;
  std::string corpus_path;
  std::string ner_selector = "pattern";
  std::string embed_a_selector = "hash:768:17";
  std::string embed_b_selector = "hash:768:29";
  std::string variant;
  std::string model_path;
  std::string out_path;
  std::string loss_out_path;
  std::string roc_out_path;
  std::string term;
  double threshold = 0.5;
  double grid_step = 0.05;
  std::uint64_t seed = 0;
  int epochs = -1;        // -1: keep the config default
  int batch_size = -1;
  int proj_dim = -1;
  double learning_rate = -1.0;
  std::string separator;  // empty: keep the config default
  bool clean_brackets = false;
  bool labeled = false;
  bool sweep = false;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw vago::ParseError("cannot write output file: " + path);
  return out;
}

// Stream to --out when given, stdout otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) file_ = open_out(path);
  }
  std::ostream& stream() { return file_ ? static_cast<std::ostream&>(*file_) : std::cout; }

 private:
  std::optional<std::ofstream> file_;
};

vago::FusionConfig build_config(const Options& opt) {
  vago::FusionConfig config =
      vago::variant_config(opt.variant.empty() ? "roberta+sbert+scores" : opt.variant);
  config.seed = opt.seed;
  if (opt.epochs >= 0) config.epochs = opt.epochs;
  if (opt.batch_size > 0) config.batch_size = opt.batch_size;
  if (opt.proj_dim > 0) config.proj_dim = opt.proj_dim;
  if (opt.learning_rate > 0.0) config.learning_rate = opt.learning_rate;
  if (!opt.separator.empty()) config.separator = opt.separator;
  return config;
}

struct Providers {
  std::unique_ptr<vago::NerProvider> ner;
  std::unique_ptr<vago::EmbeddingProvider> embed_a;
  std::unique_ptr<vago::EmbeddingProvider> embed_b;
};

Providers make_providers(const Options& opt, const vago::FusionConfig& config) {
  Providers p;
  if (config.use_vago_scores || config.use_vago_terms) {
    p.ner = vago::make_ner_provider(opt.ner_selector);
  }
  if (config.use_embed_a) p.embed_a = vago::make_embedding_provider(opt.embed_a_selector);
  if (config.use_embed_b) p.embed_b = vago::make_embedding_provider(opt.embed_b_selector);
  return p;
}

std::vector<vago::LabeledExample> to_examples(const std::vector<vago::CorpusRecord>& records) {
  std::vector<vago::LabeledExample> examples;
  examples.reserve(records.size());
  for (const auto& rec : records) {
    examples.push_back(vago::LabeledExample{rec.id, rec.text, rec.label.value()});
  }
  return examples;
}

void check_dims(const vago::FusionModel& model, const vago::FeaturePipeline& pipeline) {
  const int da = pipeline.dim_a(model.config);
  const int db = pipeline.dim_b(model.config);
  if (da != model.dim_a) {
    throw vago::ShapeError("embedding A dimension mismatch: model expects " +
                           std::to_string(model.dim_a) + ", provider yields " +
                           std::to_string(da));
  }
  if (db != model.dim_b) {
    throw vago::ShapeError("embedding B dimension mismatch: model expects " +
                           std::to_string(model.dim_b) + ", provider yields " +
                           std::to_string(db));
  }
}

int run_analyze(const Options& opt) {
  const vago::Lexicon lexicon = vago::Lexicon::load_file(opt.lexicon_path);
  const auto ner = vago::make_ner_provider(opt.ner_selector);
  const auto records =
      vago::load_corpus_file(opt.corpus_path, opt.labeled, opt.clean_brackets);
  OutputTarget out(opt.out_path);
  for (const auto& rec : records) {
    const vago::SentenceAnalysis analysis =
        vago::analyze_sentence(rec.id, rec.text, lexicon, *ner);
    const vago::VagoScores scores = vago::compute_scores(analysis);
    json line;
    line["id"] = rec.id;
    line["n_words"] = analysis.n_words;
    line["counts"] = {{"VA", analysis.counts.va},
                      {"VG", analysis.counts.vg},
                      {"VD", analysis.counts.vd_vague},
                      {"VC", analysis.counts.vc_vague},
                      {"ES", analysis.counts.es}};
    line["scores"] = {scores.vagueness, scores.subjectivity, scores.detail_vs_vagueness,
                      scores.objectivity_vs_subjectivity};
    line["terms"] = vago::vago_terms(analysis);
    line["entities"] = analysis.counts.ne;
    out.stream() << line.dump() << '\n';
  }
  return 0;
}

int run_train(const Options& opt) {
  const vago::FusionConfig config = build_config(opt);
  const vago::Lexicon lexicon = vago::Lexicon::load_file(opt.lexicon_path);
  const Providers providers = make_providers(opt, config);
  const vago::FeaturePipeline pipeline(&lexicon, providers.ner.get(),
                                       providers.embed_a.get(), providers.embed_b.get());
  const auto records = vago::load_corpus_file(opt.corpus_path, true, opt.clean_brackets);
  const auto examples = to_examples(records);

  const vago::TrainResult result = vago::train(config, examples, pipeline);
  if (opt.out_path.empty()) throw vago::ConfigError("train requires --out <model.json>");
  vago::save_model_file(opt.out_path, result.model);

  const std::string loss_path =
      opt.loss_out_path.empty() ? opt.out_path + ".loss.csv" : opt.loss_out_path;
  std::ofstream loss_out = open_out(loss_path);
  loss_out << "epoch,loss\n";
  for (std::size_t e = 0; e < result.loss_trace.size(); ++e) {
    loss_out << (e + 1) << ',' << json(result.loss_trace[e]).dump() << '\n';
  }
  if (result.loss_trace.empty()) {
    std::cout << "final training loss: n/a (0 epochs)\n";
  } else {
    std::cout << "final training loss: " << json(result.loss_trace.back()).dump() << '\n';
  }
  return 0;
}

struct ScoredCorpus {
  std::vector<vago::ClassLabel> y_true;
  std::vector<double> scores;
};

ScoredCorpus score_corpus(const Options& opt, const vago::FusionModel& model,
                          const vago::FeaturePipeline& pipeline) {
  const auto records = vago::load_corpus_file(opt.corpus_path, true, opt.clean_brackets);
  ScoredCorpus scored;
  scored.y_true.reserve(records.size());
  scored.scores.reserve(records.size());
  for (const auto& rec : records) {
    scored.y_true.push_back(rec.label.value());
    scored.scores.push_back(
        vago::forward(model, pipeline.features(model.config, rec.id, rec.text)));
  }
  return scored;
}

json per_class_json(const vago::MetricsReport& report) {
  return {{"SUBJ",
           {{"precision", report.subj.precision},
            {"recall", report.subj.recall},
            {"f1", report.subj.f1}}},
          {"OBJ",
           {{"precision", report.obj.precision},
            {"recall", report.obj.recall},
            {"f1", report.obj.f1}}}};
}

int run_evaluate(const Options& opt) {
  const vago::FusionModel model = vago::load_model_file(opt.model_path);
  if (!opt.variant.empty()) {
    const vago::FusionConfig requested = vago::variant_config(opt.variant);
    const vago::FusionConfig& trained = model.config;
    if (requested.use_embed_a != trained.use_embed_a ||
        requested.use_embed_b != trained.use_embed_b ||
        requested.use_vago_scores != trained.use_vago_scores ||
        requested.use_vago_terms != trained.use_vago_terms) {
      throw vago::ConfigError("variant \"" + opt.variant +
                              "\" does not match the flags recorded in the model file");
    }
  }
  const vago::Lexicon lexicon = vago::Lexicon::load_file(opt.lexicon_path);
  const Providers providers = make_providers(opt, model.config);
  const vago::FeaturePipeline pipeline(&lexicon, providers.ner.get(),
                                       providers.embed_a.get(), providers.embed_b.get());
  check_dims(model, pipeline);

  const ScoredCorpus scored = score_corpus(opt, model, pipeline);
  std::vector<vago::ClassLabel> y_pred(scored.scores.size());
  for (std::size_t i = 0; i < scored.scores.size(); ++i) {
    y_pred[i] = scored.scores[i] >= opt.threshold ? vago::ClassLabel::subj
                                                  : vago::ClassLabel::obj;
  }
  const vago::MetricsReport report = vago::metrics(scored.y_true, y_pred);
  const auto roc = vago::roc_curve(scored.y_true, scored.scores);

  json doc;
  doc["threshold"] = opt.threshold;
  doc["macro_f1"] = report.macro_f1;
  doc["subj_f1"] = report.subj.f1;
  doc["per_class"] = per_class_json(report);
  auto roc_json = json::array();
  for (const auto& pt : roc) roc_json.push_back({pt.fpr, pt.tpr});
  doc["roc"] = std::move(roc_json);
  doc["n"] = scored.y_true.size();
  if (opt.sweep) {
    const auto grid = vago::default_grid(opt.grid_step);
    const vago::SweepResult best =
        vago::sweep_threshold(scored.y_true, scored.scores, grid);
    doc["sweep"] = {{"threshold", best.threshold}, {"macro_f1", best.macro_f1}};
  }
  OutputTarget out(opt.out_path);
  out.stream() << doc.dump(2) << '\n';

  if (!opt.roc_out_path.empty()) {
    std::ofstream roc_out = open_out(opt.roc_out_path);
    roc_out << "fpr,tpr\n";
    for (const auto& pt : roc) {
      roc_out << json(pt.fpr).dump() << ',' << json(pt.tpr).dump() << '\n';
    }
  }
  return 0;
}

int run_sweep(const Options& opt) {
  const vago::FusionModel model = vago::load_model_file(opt.model_path);
  const vago::Lexicon lexicon = vago::Lexicon::load_file(opt.lexicon_path);
  const Providers providers = make_providers(opt, model.config);
  const vago::FeaturePipeline pipeline(&lexicon, providers.ner.get(),
                                       providers.embed_a.get(), providers.embed_b.get());
  check_dims(model, pipeline);

  const ScoredCorpus scored = score_corpus(opt, model, pipeline);
  const auto grid = vago::default_grid(opt.grid_step);
  const vago::SweepResult best = vago::sweep_threshold(scored.y_true, scored.scores, grid);

  json doc;
  doc["threshold"] = best.threshold;
  doc["macro_f1"] = best.macro_f1;
  auto results = json::array();
  for (double t : grid) {
    results.push_back({t, vago::macro_f1_at(scored.y_true, scored.scores, t)});
  }
  doc["grid_results"] = std::move(results);
  OutputTarget out(opt.out_path);
  out.stream() << doc.dump(2) << '\n';
  return 0;
}

int run_audit(const Options& opt) {
  const vago::Lexicon lexicon = vago::Lexicon::load_file(opt.lexicon_path);
  const auto records = vago::load_corpus_file(opt.corpus_path, true, opt.clean_brackets);
  const vago::AuditResult result = vago::audit_term(records, opt.term, lexicon);
  std::string categories;
  for (vago::VagoCategory c : result.categories) {
    if (!categories.empty()) categories += ",";
    categories += vago::to_string(c);
  }
  std::cout << "term\t" << opt.term << '\n'
            << "categories\t" << (categories.empty() ? "-" : categories) << '\n'
            << "containing\t" << result.n_containing << '\n'
            << "objective\t" << result.n_objective << '\n';
  return 0;
}

int run_lexicon_stats(const Options& opt) {
  const vago::Lexicon lexicon = vago::Lexicon::load_file(opt.lexicon_path);
  std::cout << "category\tentries\n";
  for (vago::VagoCategory c : vago::kAllCategories) {
    std::cout << vago::to_string(c) << '\t' << lexicon.histogram(c) << '\n';
  }
  std::cout << "total\t" << lexicon.size() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexicon-driven vagueness/subjectivity scoring and hybrid classification"};
  app.require_subcommand(1);
  Options opt;

  const auto add_lexicon = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--lexicon", opt.lexicon_path, "lexicon TSV file");
    if (required) o->required();
  };
  const auto add_corpus = [&](CLI::App* cmd) {
    cmd->add_option("--corpus", opt.corpus_path, "corpus TSV file")->required();
    cmd->add_flag("--clean-brackets", opt.clean_brackets,
                  "strip [ and ] from sentences while loading");
  };
  const auto add_providers = [&](CLI::App* cmd) {
    cmd->add_option("--ner", opt.ner_selector, "NER provider: pattern | file:<path>");
    cmd->add_option("--embed-a", opt.embed_a_selector,
                    "embedding provider A: hash:<dim>:<seed> | file:<path>");
    cmd->add_option("--embed-b", opt.embed_b_selector,
                    "embedding provider B: hash:<dim>:<seed> | file:<path>");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "score sentences with the expert rules");
  add_lexicon(analyze);
  add_corpus(analyze);
  analyze->add_option("--ner", opt.ner_selector, "NER provider: pattern | file:<path>");
  analyze->add_flag("--labeled", opt.labeled, "corpus carries a label column");
  analyze->add_option("--out", opt.out_path, "output JSON-lines path (default stdout)");

  CLI::App* train = app.add_subcommand("train", "train the fusion classifier");
  add_lexicon(train);
  add_corpus(train);
  add_providers(train);
  train->add_option("--variant", opt.variant, "preset variant (default roberta+sbert+scores)");
  train->add_option("--seed", opt.seed, "seed for init and shuffling");
  train->add_option("--epochs", opt.epochs, "training epochs (default 30)");
  train->add_option("--batch-size", opt.batch_size, "mini-batch size (default 6)");
  train->add_option("--proj-dim", opt.proj_dim, "projection dimension (default 5)");
  train->add_option("--lr", opt.learning_rate, "learning rate (default 1e-3)");
  train->add_option("--separator", opt.separator, "term separator (default [SEP])");
  train->add_option("--out", opt.out_path, "model JSON path")->required();
  train->add_option("--loss-out", opt.loss_out_path,
                    "loss trace CSV path (default <out>.loss.csv)");

  CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate a model on a labeled corpus");
  add_lexicon(evaluate);
  add_corpus(evaluate);
  add_providers(evaluate);
  evaluate->add_option("--model", opt.model_path, "model JSON path")->required();
  evaluate->add_option("--variant", opt.variant, "assert the model was trained as this variant");
  evaluate->add_option("--threshold", opt.threshold, "decision threshold (default 0.5)")
      ->check(CLI::Range(0.0, 1.0));
  evaluate->add_flag("--sweep", opt.sweep, "also report the optimal grid threshold");
  evaluate->add_option("--grid-step", opt.grid_step, "sweep grid step (default 0.05)");
  evaluate->add_option("--out", opt.out_path, "report JSON path (default stdout)");
  evaluate->add_option("--roc-out", opt.roc_out_path, "ROC points CSV path");

  CLI::App* sweep = app.add_subcommand("sweep", "grid-search the decision threshold");
  add_lexicon(sweep);
  add_corpus(sweep);
  add_providers(sweep);
  sweep->add_option("--model", opt.model_path, "model JSON path")->required();
  sweep->add_option("--grid-step", opt.grid_step, "grid step (default 0.05)");
  sweep->add_option("--out", opt.out_path, "report JSON path (default stdout)");

  CLI::App* audit = app.add_subcommand("audit", "count label agreement for one term");
  add_lexicon(audit);
  add_corpus(audit);
  audit->add_option("--term", opt.term, "term to audit")->required();

  CLI::App* stats = app.add_subcommand("lexicon-stats", "print the category histogram");
  add_lexicon(stats);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(opt);
    if (train->parsed()) return run_train(opt);
    if (evaluate->parsed()) return run_evaluate(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (audit->parsed()) return run_audit(opt);
    if (stats->parsed()) return run_lexicon_stats(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
