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
// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. Run directly or via `ctest -R acceptance`.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support/fixture_oracle.hpp"
#include "vago/corpus.hpp"
#include "vago/embeddings.hpp"
#include "vago/evaluation.hpp"
#include "vago/fusion.hpp"
#include "vago/lexicon.hpp"
#include "vago/ner.hpp"
#include "vago/scoring.hpp"

namespace fs = std::filesystem;
using namespace vago;
using vago::testing::expected_scores;
using vago::testing::kFixtureOracle;

namespace {

const std::string kCli = VAGO_CLI_PATH;
const std::string kFixtures = VAGO_FIXTURE_DIR;

int g_failures = 0;

// Collects failure details for one criterion and prints the verdict.
class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void expect(bool ok, const std::string& detail) {
    if (!ok && failures_++ == 0) first_failure_ = detail;
  }

  void note(const std::string& text) { note_ = text; }

  ~Criterion() {
    if (failures_ == 0) {
      std::cout << "PASS  " << number_ << ". " << title_;
      if (!note_.empty()) std::cout << " (" << note_ << ")";
      std::cout << "\n";
    } else {
      ++g_failures;
      std::cout << "FAIL  " << number_ << ". " << title_ << ": " << failures_
                << " check(s) failed; first: " << first_failure_ << "\n";
    }
  }

 private:
  int number_;
  std::string title_;
  std::string note_;
  int failures_ = 0;
  std::string first_failure_;
};

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() /
                 ("vago_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path log = scratch_dir() / ("cli_log_" + std::to_string(counter++));
  const int status =
      std::system((kCli + " " + args + " > " + log.string() + " 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------
// 1. Scoring oracle on the committed 30-sentence fixture corpus.

void criterion_scoring_oracle() {
  Criterion c(1, "scoring oracle: fixture corpus scores are exact");
  const Lexicon lex = Lexicon::load_file(kFixtures + "/lexicon_l0.tsv");
  const auto corpus = load_corpus_file(kFixtures + "/corpus_30.tsv", true);
  c.expect(corpus.size() == kFixtureOracle.size(), "corpus must hold 30 sentences");
  const PatternNer ner;
  constexpr double kTol = 1e-12;
  for (std::size_t i = 0; i < corpus.size() && i < kFixtureOracle.size(); ++i) {
    const auto& row = kFixtureOracle[i];
    c.expect(corpus[i].id == row.id, std::string("fixture id drift at ") + row.id);
    c.expect(corpus[i].text == row.text, std::string("fixture text drift at ") + row.id);
    const SentenceAnalysis analysis = analyze_sentence(row.id, corpus[i].text, lex, ner);
    const VagoScores got = compute_scores(analysis);
    const auto want = expected_scores(row);
    const auto close = [&](double a, double b) { return std::abs(a - b) <= kTol; };
    c.expect(close(got.vagueness, want.vagueness), std::string(row.id) + " vagueness");
    c.expect(close(got.subjectivity, want.subjectivity),
             std::string(row.id) + " subjectivity");
    c.expect(close(got.detail_vs_vagueness, want.detail), std::string(row.id) + " detail");
    c.expect(close(got.objectivity_vs_subjectivity, want.objectivity),
             std::string(row.id) + " objectivity");
    if (corpus[i].text == "Mary is 180cm tall") {
      c.expect(got.subjectivity == 0.0 && got.vagueness == 0.0,
               "measure phrase must cancel both ratios");
    }
  }
  // same tolerance holds after float emission through the CLI
  const fs::path out = scratch_dir() / "oracle_scores.jsonl";
  const int rc = run_cli("analyze --lexicon " + kFixtures + "/lexicon_l0.tsv" +
                         " --corpus " + kFixtures + "/corpus_30.tsv --labeled --out " +
                         out.string());
  c.expect(rc == 0, "CLI analyze failed");
  std::ifstream emitted(out);
  std::string line;
  std::size_t row = 0;
  while (std::getline(emitted, line) && row < kFixtureOracle.size()) {
    const auto doc = nlohmann::json::parse(line);
    const auto want = expected_scores(kFixtureOracle[row]);
    const double s[4] = {doc["scores"][0], doc["scores"][1], doc["scores"][2],
                         doc["scores"][3]};
    const bool ok = std::abs(s[0] - want.vagueness) <= kTol &&
                    std::abs(s[1] - want.subjectivity) <= kTol &&
                    std::abs(s[2] - want.detail) <= kTol &&
                    std::abs(s[3] - want.objectivity) <= kTol;
    c.expect(ok, "emitted scores drift at " + std::string(kFixtureOracle[row].id));
    ++row;
  }
  c.expect(row == kFixtureOracle.size(), "CLI emitted fewer than 30 lines");
  c.note("30 sentences, tolerance 1e-12, library and CLI emission");
}

// ---------------------------------------------------------------------------
// 2. Lexicon loader on the 1,614-entry histogram fixture.

void criterion_lexicon_histogram() {
  Criterion c(2, "lexicon loader: histogram {VA:9, VG:35, VD:57, VC:1500, ES:13}");
  const Lexicon lex = Lexicon::load_file(kFixtures + "/lexicon_table1.tsv");
  c.expect(lex.histogram(VagoCategory::VA) == 9, "VA count");
  c.expect(lex.histogram(VagoCategory::VG) == 35, "VG count");
  c.expect(lex.histogram(VagoCategory::VD) == 57, "VD count");
  c.expect(lex.histogram(VagoCategory::VC) == 1500, "VC count");
  c.expect(lex.histogram(VagoCategory::ES) == 13, "ES count");
  c.expect(lex.size() == 1614, "total 1614");
}

// ---------------------------------------------------------------------------
// 3. Analytic gradients vs central finite differences.

void criterion_gradient_check() {
  Criterion c(3, "gradient check: 100 random configurations at 1e-4");
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    FusionConfig config;
    config.use_embed_a = true;
    config.use_embed_b = (rng() % 2) == 0;
    config.use_vago_scores = (rng() % 2) == 0;
    config.proj_dim = 1 + static_cast<int>(rng() % 5);
    config.seed = rng();
    const int da = 1 + static_cast<int>(rng() % 8);
    const int db = config.use_embed_b ? 1 + static_cast<int>(rng() % 8) : 0;
    FusionModel model = initialize_model(config, da, db);

    const int batch = 1 + static_cast<int>(rng() % 6);
    std::vector<FeatureInput> inputs;
    std::vector<ClassLabel> labels;
    for (int i = 0; i < batch; ++i) {
      FeatureInput input;
      Eigen::VectorXd a(da);
      for (int k = 0; k < da; ++k) a[k] = uniform(rng) * 2.0 - 1.0;
      input.embed_a = a;
      if (config.use_embed_b) {
        Eigen::VectorXd b(db);
        for (int k = 0; k < db; ++k) b[k] = uniform(rng) * 2.0 - 1.0;
        input.embed_b = b;
      }
      if (config.use_vago_scores) {
        input.scores =
            VagoScores{uniform(rng), uniform(rng), uniform(rng), uniform(rng)};
      }
      inputs.push_back(std::move(input));
      labels.push_back((rng() & 1) != 0 ? ClassLabel::subj : ClassLabel::obj);
    }

    const BatchGradients grads = batch_gradients(model, inputs, labels);
    const double h = 1e-5;
    const auto loss_at = [&]() { return batch_gradients(model, inputs, labels).loss; };
    const auto check_one = [&](double analytic, double& param, const char* what) {
      const double saved = param;
      param = saved + h;
      const double up = loss_at();
      param = saved - h;
      const double down = loss_at();
      param = saved;
      const double numeric = (up - down) / (2.0 * h);
      const double scale = std::max({std::abs(analytic), std::abs(numeric), 1e-4});
      c.expect(std::abs(analytic - numeric) / scale <= 1e-4,
               std::string(what) + " gradient mismatch at trial " + std::to_string(trial));
    };
    for (Eigen::Index r = 0; r < model.projection.rows(); ++r) {
      for (Eigen::Index cc = 0; cc < model.projection.cols(); ++cc) {
        check_one(grads.d_projection(r, cc), model.projection(r, cc), "projection");
      }
    }
    for (Eigen::Index i = 0; i < model.head_weights.size(); ++i) {
      check_one(grads.d_head_weights[i], model.head_weights[i], "head");
    }
    check_one(grads.d_head_bias, model.head_bias, "bias");
  }
  const double seconds = elapsed_seconds(start);
  c.expect(seconds < 10.0, "runtime " + std::to_string(seconds) + "s exceeds 10s");
  std::ostringstream note;
  note.precision(2);
  note << std::fixed << seconds << "s";
  c.note(note.str());
}

// ---------------------------------------------------------------------------
// 4. Variant shape suite.

void criterion_variant_shapes() {
  Criterion c(4, "variant shapes: all six presets, full preset head length 9");
  const int da = 768;
  const int db = 768;
  struct Expected {
    const char* name;
    int proj_input;
    int head_input;
  };
  const Expected cases[] = {
      {"roberta", 768, 5},
      {"roberta+sbert", 1536, 5},
      {"roberta+terms", 768, 5},
      {"roberta+scores", 768, 9},
      {"roberta+sbert+scores", 1536, 9},
      {"roberta+sbert+terms+scores", 1536, 9},
  };
  for (const auto& want : cases) {
    const FusionConfig config = variant_config(want.name);
    const FusionModel model = initialize_model(config, config.use_embed_a ? da : 0,
                                               config.use_embed_b ? db : 0);
    c.expect(model.projection.cols() == want.proj_input,
             std::string(want.name) + " projection input");
    c.expect(model.projection.rows() == config.proj_dim,
             std::string(want.name) + " projection output");
    c.expect(static_cast<int>(model.head_weights.size()) == want.head_input,
             std::string(want.name) + " head input");
  }
  const FusionConfig full = variant_config("roberta+sbert+terms+scores");
  c.expect(full.head_dim() == 9, "full preset head length must be 9");
}

// ---------------------------------------------------------------------------
// 5. Learning sanity on a synthetic corpus.

struct SyntheticCorpus {
  std::vector<LabeledExample> examples;
};

// Sentences whose labels follow the lexicon-driven subjectivity ratio
// (threshold 0.1) with 5% label noise. Half the subjective signal is
// carried by "!" (invisible to the bag-of-words embedders) and the
// objective class reuses the same marker words inside quotes or behind
// measure phrases, so embeddings alone see heavily conflicting lexical
// evidence while the expert scores stay clean.
SyntheticCorpus make_synthetic_corpus(int n, const Lexicon& lex, const NerProvider& ner,
                                      std::uint64_t seed) {
  const std::vector<std::string> neutral = {
      "report", "window", "stone",  "river",  "market", "street", "garden",
      "music",  "letter", "bridge", "valley", "engine", "harbor", "meadow",
      "signal", "carpet", "bottle", "mirror", "copper", "lantern"};
  const std::vector<std::string> markers = {"beautiful", "intelligent", "good",
                                            "skilled",   "tall",        "old"};
  const std::vector<std::string> decoys = {
      "\"beautiful\"", "\"good\"",   "\"intelligent\"", "180cm tall",
      "25 years old",  "300m tall",  "\"skilled\"",     "\"old\""};
  const std::vector<std::string> objective = {"some",  "many", "approximately",
                                              "Paris", "Bob",  "1999"};
  std::mt19937_64 rng(seed);
  SyntheticCorpus corpus;
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> parts;
    const int n_neutral = 4 + static_cast<int>(rng() % 4);
    for (int k = 0; k < n_neutral; ++k) parts.push_back(neutral[rng() % neutral.size()]);
    bool exclaim = false;
    switch (rng() % 4) {
      case 0:  // visible subjective markers
        parts.push_back(markers[rng() % markers.size()]);
        if (rng() % 3 == 0) parts.push_back(markers[rng() % markers.size()]);
        break;
      case 1:  // subjectivity carried by punctuation only
        exclaim = true;
        break;
      case 2:  // quoted or measure-cancelled marker words
        parts.push_back(decoys[rng() % decoys.size()]);
        break;
      default:  // purely neutral or objective filler
        break;
    }
    if (rng() % 3 == 0) parts.push_back(objective[rng() % objective.size()]);

    std::string text;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const std::size_t j = rng() % parts.size();
      std::swap(parts[k], parts[j]);
    }
    for (const auto& p : parts) {
      if (!text.empty()) text += ' ';
      text += p;
    }
    if (exclaim) text += " !";

    const std::string id = "syn" + std::to_string(i);
    const SentenceAnalysis analysis = analyze_sentence(id, text, lex, ner);
    const double subjectivity = compute_scores(analysis).subjectivity;
    bool subj = subjectivity >= 0.1;
    if (rng() % 100 < 5) subj = !subj;  // label noise
    corpus.examples.push_back(
        LabeledExample{id, text, subj ? ClassLabel::subj : ClassLabel::obj});
  }
  return corpus;
}

double macro_f1_of(const FusionModel& model, const FeaturePipeline& pipeline,
                   const std::vector<LabeledExample>& data) {
  std::vector<ClassLabel> y_true;
  std::vector<ClassLabel> y_pred;
  for (const auto& ex : data) {
    y_true.push_back(ex.label);
    y_pred.push_back(predict(model, 0.5, pipeline.features(model.config, ex.id, ex.text)));
  }
  return metrics(y_true, y_pred).macro_f1;
}

void criterion_learning_sanity() {
  Criterion c(5, "learning sanity: scores variant >= 0.90 and >= 0.05 over embeddings");
  const Lexicon lex = Lexicon::load_file(kFixtures + "/lexicon_l0.tsv");
  const PatternNer ner;
  const SyntheticCorpus corpus = make_synthetic_corpus(400, lex, ner, 2024);

  int n_subj = 0;
  for (const auto& ex : corpus.examples) n_subj += ex.label == ClassLabel::subj ? 1 : 0;
  c.expect(n_subj > 50 && n_subj < 350, "class balance drifted: " + std::to_string(n_subj));

  const HashEmbedding embed_a(16, 1);
  const HashEmbedding embed_b(16, 2);
  const FeaturePipeline pipeline(&lex, &ner, &embed_a, &embed_b);

  const auto start = std::chrono::steady_clock::now();
  FusionConfig with_scores = variant_config("roberta+sbert+scores");
  with_scores.learning_rate = 1.0;
  with_scores.seed = 9;
  const TrainResult scores_run = train(with_scores, corpus.examples, pipeline);

  FusionConfig embeddings_only = variant_config("roberta+sbert");
  embeddings_only.learning_rate = 1.0;
  embeddings_only.seed = 9;
  const TrainResult embed_run = train(embeddings_only, corpus.examples, pipeline);
  const double seconds = elapsed_seconds(start);

  const double f1_scores = macro_f1_of(scores_run.model, pipeline, corpus.examples);
  const double f1_embed = macro_f1_of(embed_run.model, pipeline, corpus.examples);
  c.expect(f1_scores >= 0.90,
           "scores variant macro F1 " + std::to_string(f1_scores) + " < 0.90");
  c.expect(f1_scores - f1_embed >= 0.05, "margin " + std::to_string(f1_scores - f1_embed) +
                                             " < 0.05 (embeddings " +
                                             std::to_string(f1_embed) + ")");
  c.expect(seconds < 30.0, "training took " + std::to_string(seconds) + "s");
  std::ostringstream note;
  note.precision(3);
  note << std::fixed << "scores " << f1_scores << ", embeddings " << f1_embed << ", "
       << seconds << "s";
  c.note(note.str());
}

// ---------------------------------------------------------------------------
// 6. Threshold sweep equals brute force.

void criterion_sweep_equivalence() {
  Criterion c(6, "threshold sweep: equals brute force on 1,000 random sets");
  std::mt19937_64 rng(303);
  const auto grid = default_grid();
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 24);
    std::vector<ClassLabel> t(n);
    std::vector<double> s(n);
    for (int i = 0; i < n; ++i) {
      t[i] = (rng() & 1) != 0 ? ClassLabel::subj : ClassLabel::obj;
      s[i] = static_cast<double>(rng() % 21) / 20.0;  // grid-aligned: forces ties
    }
    double best_f1 = -1.0;
    double best_t = 0.0;
    for (double threshold : grid) {
      std::size_t tp = 0;
      std::size_t fp = 0;
      std::size_t fn = 0;
      std::size_t tn = 0;
      for (int i = 0; i < n; ++i) {
        const bool pred = s[i] >= threshold;
        const bool truth = t[i] == ClassLabel::subj;
        if (truth && pred) ++tp;
        else if (!truth && pred) ++fp;
        else if (truth && !pred) ++fn;
        else ++tn;
      }
      const double f1s = (2 * tp + fp + fn) == 0
                             ? 0.0
                             : 2.0 * static_cast<double>(tp) /
                                   static_cast<double>(2 * tp + fp + fn);
      const double f1o = (2 * tn + fn + fp) == 0
                             ? 0.0
                             : 2.0 * static_cast<double>(tn) /
                                   static_cast<double>(2 * tn + fn + fp);
      const double macro = (f1s + f1o) / 2.0;
      if (macro > best_f1) {
        best_f1 = macro;
        best_t = threshold;
      }
    }
    const SweepResult got = sweep_threshold(t, s, grid);
    c.expect(got.threshold == best_t && got.macro_f1 == best_f1,
             "divergence from brute force at trial " + std::to_string(trial));
  }
  // explicit tie-breaks: lowest winning threshold is returned
  {
    const std::vector<ClassLabel> t = {ClassLabel::subj, ClassLabel::obj};
    const std::vector<double> s = {0.9, 0.1};
    const SweepResult got = sweep_threshold(t, s, grid);
    c.expect(got.threshold == 0.15 && got.macro_f1 == 1.0,
             "perfect separation should pick the lowest winning threshold 0.15");
  }
  {
    const std::vector<ClassLabel> t = {ClassLabel::subj, ClassLabel::subj};
    const std::vector<double> s = {0.9, 0.8};
    const SweepResult got = sweep_threshold(t, s, grid);
    c.expect(got.threshold == 0.0, "all-tied sweep must return threshold 0");
  }
}

// ---------------------------------------------------------------------------
// 7. Metric oracle: 20 hand-computed confusion matrices.

void criterion_metric_oracle() {
  Criterion c(7, "metric oracle: 20 hand-computed cases match exactly");
  struct Case {
    const char* y_true;
    const char* y_pred;
    double f1_subj;
    double f1_obj;
  };
  // F1 values derived by hand from the confusion counts as 2tp/(2tp+fp+fn).
  const Case cases[] = {
      {"SSOO", "SOOO", 2.0 / 3.0, 4.0 / 5.0},
      {"SO", "SO", 1.0, 1.0},
      {"SSOO", "OOOO", 0.0, 2.0 / 3.0},
      {"SO", "OS", 0.0, 0.0},
      {"S", "S", 1.0, 0.0},
      {"O", "O", 0.0, 1.0},
      {"SSSO", "SSOO", 4.0 / 5.0, 2.0 / 3.0},
      {"SOSOSO", "SSSSSS", 2.0 / 3.0, 0.0},
      {"SOSO", "SSOO", 1.0 / 2.0, 1.0 / 2.0},
      {"OOOO", "SOOO", 0.0, 6.0 / 7.0},
      {"SSSS", "SSSO", 6.0 / 7.0, 0.0},
      {"SSO", "SSO", 1.0, 1.0},
      {"SOO", "OSO", 0.0, 1.0 / 2.0},
      {"SSOOO", "SSSOO", 4.0 / 5.0, 4.0 / 5.0},
      {"SOOOOO", "SSOOOO", 2.0 / 3.0, 8.0 / 9.0},
      {"SSSOOO", "OOOSSS", 0.0, 0.0},
      {"SSOO", "SSSS", 2.0 / 3.0, 0.0},
      {"SSOO", "OOSS", 0.0, 0.0},
      {"OSSSSS", "OSSSSO", 8.0 / 9.0, 2.0 / 3.0},
      {"SOSOO", "SOOOO", 2.0 / 3.0, 6.0 / 7.0},
  };
  const auto to_labels = [](const char* pattern) {
    std::vector<ClassLabel> out;
    for (const char* p = pattern; *p != '\0'; ++p) {
      out.push_back(*p == 'S' ? ClassLabel::subj : ClassLabel::obj);
    }
    return out;
  };
  int index = 0;
  for (const auto& want : cases) {
    ++index;
    const MetricsReport got = metrics(to_labels(want.y_true), to_labels(want.y_pred));
    c.expect(got.subj.f1 == want.f1_subj, "SUBJ F1 case " + std::to_string(index));
    c.expect(got.obj.f1 == want.f1_obj, "OBJ F1 case " + std::to_string(index));
    c.expect(got.macro_f1 == (want.f1_subj + want.f1_obj) / 2.0,
             "macro F1 case " + std::to_string(index));
  }
  // the worked 0.7333 example, against the literal fraction
  const MetricsReport worked = metrics(to_labels("SSOO"), to_labels("SOOO"));
  c.expect(std::abs(worked.macro_f1 - 11.0 / 15.0) <= 1e-12, "macro must equal 11/15");
}

// ---------------------------------------------------------------------------
// 8. ROC properties on 1,000 random instances.

void criterion_roc_properties() {
  Criterion c(8, "ROC: endpoints, monotonicity and perfect-separation point");
  std::mt19937_64 rng(404);
  int tested = 0;
  while (tested < 1000) {
    const int n = 2 + static_cast<int>(rng() % 40);
    std::vector<ClassLabel> t(n);
    std::vector<double> s(n);
    bool subj = false;
    bool obj = false;
    const bool separate = (tested % 4 == 0);  // every fourth instance is separable
    for (int i = 0; i < n; ++i) {
      t[i] = (rng() & 1) != 0 ? ClassLabel::subj : ClassLabel::obj;
      (t[i] == ClassLabel::subj ? subj : obj) = true;
      const double noise = static_cast<double>(rng() % 1000) / 1000.0;
      s[i] = separate ? (t[i] == ClassLabel::subj ? 0.5 + noise / 2.1 : noise / 2.1)
                      : static_cast<double>(rng() % 11) / 10.0;
    }
    if (!subj || !obj) continue;
    ++tested;
    const auto points = roc_curve(t, s);
    c.expect(points.size() >= 2, "curve too short");
    c.expect(points.front().fpr == 0.0 && points.front().tpr == 0.0,
             "curve must begin at (0,0)");
    c.expect(points.back().fpr == 1.0 && points.back().tpr == 1.0,
             "curve must end at (1,1)");
    bool monotone = true;
    for (std::size_t i = 1; i < points.size(); ++i) {
      monotone &= points[i].fpr >= points[i - 1].fpr;
      monotone &= points[i].tpr >= points[i - 1].tpr;
    }
    c.expect(monotone, "tpr/fpr must be non-decreasing");
    if (separate) {
      bool has_corner = false;
      for (const auto& p : points) has_corner |= (p.fpr == 0.0 && p.tpr == 1.0);
      c.expect(has_corner, "separable instance must pass through (0,1)");
    }
  }
}

// ---------------------------------------------------------------------------
// 9. Determinism of seeded CLI runs.

void criterion_determinism() {
  Criterion c(9, "determinism: seeded train+evaluate runs are byte-identical");
  const std::string lex = kFixtures + "/lexicon_l0.tsv";
  const std::string corpus = kFixtures + "/corpus_30.tsv";
  const std::string providers = " --embed-a hash:16:1 --embed-b hash:16:2";
  for (int run = 1; run <= 2; ++run) {
    const std::string tag = std::to_string(run);
    const fs::path model = scratch_dir() / ("det_model_" + tag + ".json");
    const fs::path report = scratch_dir() / ("det_report_" + tag + ".json");
    const fs::path roc = scratch_dir() / ("det_roc_" + tag + ".csv");
    const int train_rc =
        run_cli("train --lexicon " + lex + " --corpus " + corpus +
                " --variant roberta+sbert+scores" + providers +
                " --epochs 8 --seed 42 --out " + model.string());
    const int eval_rc = run_cli("evaluate --lexicon " + lex + " --corpus " + corpus +
                                providers + " --model " + model.string() +
                                " --threshold 0.3 --sweep --out " + report.string() +
                                " --roc-out " + roc.string());
    c.expect(train_rc == 0, "train run " + tag + " failed");
    c.expect(eval_rc == 0, "evaluate run " + tag + " failed");
  }
  const auto same = [&](const std::string& a, const std::string& b, const char* what) {
    const std::string sa = slurp(scratch_dir() / a);
    const std::string sb = slurp(scratch_dir() / b);
    c.expect(!sa.empty() && sa == sb, std::string(what) + " files differ");
  };
  same("det_model_1.json", "det_model_2.json", "model");
  same("det_model_1.json.loss.csv", "det_model_2.json.loss.csv", "loss trace");
  same("det_report_1.json", "det_report_2.json", "report");
  same("det_roc_1.csv", "det_roc_2.csv", "ROC");
}

// ---------------------------------------------------------------------------
// 10. Analyze throughput: 10,000 sentences, 1,600-entry lexicon, < 5 s.

void criterion_throughput() {
  Criterion c(10, "throughput: analyze 10,000 sentences in < 5 s");
  std::mt19937_64 rng(505);
  const fs::path lex_path = scratch_dir() / "big_lexicon.tsv";
  const fs::path corpus_path = scratch_dir() / "big_corpus.tsv";
  const fs::path out_path = scratch_dir() / "big_out.jsonl";

  // 1,600 entries: 300 real word forms that occur in the corpus plus
  // filler terms, with a sprinkle of multiword entries.
  std::vector<std::string> vocab;
  for (int i = 0; i < 300; ++i) vocab.push_back("word" + std::to_string(i));
  {
    std::ofstream lex(lex_path, std::ios::binary);
    const char* cats[] = {"VA", "VG", "VD", "VC", "ES"};
    for (int i = 0; i < 300; ++i) {
      lex << vocab[static_cast<std::size_t>(i)] << '\t' << cats[i % 5] << '\n';
    }
    for (int i = 0; i < 100; ++i) {
      lex << vocab[rng() % vocab.size()] << ' ' << vocab[rng() % vocab.size()] << "\tVG\n";
    }
    for (int i = 0; i < 1200; ++i) lex << "filler" << i << "\tVC\n";
  }
  {
    std::ofstream corpus(corpus_path, std::ios::binary);
    corpus << "sentence_id\tsentence\n";
    for (int i = 0; i < 10000; ++i) {
      corpus << 'd' << i << '\t';
      const int len = 8 + static_cast<int>(rng() % 7);
      for (int k = 0; k < len; ++k) {
        if (k > 0) corpus << ' ';
        const int kind = static_cast<int>(rng() % 10);
        if (kind < 6) corpus << vocab[rng() % vocab.size()];
        else if (kind < 8) corpus << "Name" << (rng() % 50);
        else corpus << (1900 + rng() % 200);
      }
      corpus << '\n';
    }
  }

  const auto start = std::chrono::steady_clock::now();
  const int rc = run_cli("analyze --lexicon " + lex_path.string() + " --corpus " +
                         corpus_path.string() + " --out " + out_path.string());
  const double seconds = elapsed_seconds(start);
  c.expect(rc == 0, "analyze failed");
  c.expect(seconds < 5.0, "analyze took " + std::to_string(seconds) + "s");
  std::size_t lines = 0;
  std::ifstream out(out_path);
  std::string line;
  while (std::getline(out, line)) ++lines;
  c.expect(lines == 10000, "expected 10000 output lines, got " + std::to_string(lines));
  std::ostringstream note;
  note.precision(2);
  note << std::fixed << seconds << "s for 10k sentences";
  c.note(note.str());
}

}  // namespace

int main() {
  criterion_scoring_oracle();
  criterion_lexicon_histogram();
  criterion_gradient_check();
  criterion_variant_shapes();
  criterion_learning_sanity();
  criterion_sweep_equivalence();
  criterion_metric_oracle();
  criterion_roc_properties();
  criterion_determinism();
  criterion_throughput();
  if (g_failures != 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
