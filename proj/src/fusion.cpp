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

#include "vago/fusion.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>

#include <json.hpp>

#include "vago/error.hpp"

namespace vago {

namespace {

// All training randomness: a fully specified engine plus explicit
// transforms, so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

FusionModel initialize_with(Rng& rng, const FusionConfig& config, int dim_a, int dim_b) {
  if (config.proj_dim < 1) throw ConfigError("proj_dim must be >= 1");
  if (!config.use_embed_a && !config.use_embed_b) {
    throw ConfigError("at least one embedding input must be enabled");
  }
  FusionModel model;
  model.config = config;
  model.dim_a = config.use_embed_a ? dim_a : 0;
  model.dim_b = config.use_embed_b ? dim_b : 0;
  model.projection.resize(config.proj_dim, model.embed_dim());
  for (Eigen::Index r = 0; r < model.projection.rows(); ++r) {
    for (Eigen::Index c = 0; c < model.projection.cols(); ++c) {
      model.projection(r, c) = rng.uniform(-0.1, 0.1);
    }
  }
  model.head_weights.resize(config.head_dim());
  for (Eigen::Index i = 0; i < model.head_weights.size(); ++i) {
    model.head_weights[i] = rng.uniform(-0.1, 0.1);
  }
  model.head_bias = 0.0;
  return model;
}

// Numerically stable mean BCE term from the raw logit.
double bce_from_logit(double logit, double y) {
  return std::max(logit, 0.0) - logit * y + std::log1p(std::exp(-std::abs(logit)));
}

// Concatenated embedding input, shape-checked against the model.
Eigen::VectorXd stacked_embeddings(const FusionModel& model, const FeatureInput& input) {
  const FusionConfig& config = model.config;
  if (config.use_embed_a != input.embed_a.has_value()) {
    throw ShapeError(config.use_embed_a ? "embedding A required but missing"
                                        : "embedding A supplied but disabled");
  }
  if (config.use_embed_b != input.embed_b.has_value()) {
    throw ShapeError(config.use_embed_b ? "embedding B required but missing"
                                        : "embedding B supplied but disabled");
  }
  if (config.use_vago_scores != input.scores.has_value()) {
    throw ShapeError(config.use_vago_scores ? "scores required but missing"
                                            : "scores supplied but disabled");
  }
  if (input.embed_a && input.embed_a->size() != model.dim_a) {
    throw ShapeError("embedding A dimension mismatch: expected " +
                     std::to_string(model.dim_a) + ", got " +
                     std::to_string(input.embed_a->size()));
  }
  if (input.embed_b && input.embed_b->size() != model.dim_b) {
    throw ShapeError("embedding B dimension mismatch: expected " +
                     std::to_string(model.dim_b) + ", got " +
                     std::to_string(input.embed_b->size()));
  }
  Eigen::VectorXd e(model.embed_dim());
  if (input.embed_a) e.head(model.dim_a) = *input.embed_a;
  if (input.embed_b) e.tail(model.dim_b) = *input.embed_b;
  return e;
}

Eigen::VectorXd head_features(const FusionModel& model, const Eigen::VectorXd& projected,
                              const FeatureInput& input) {
  Eigen::VectorXd f(model.config.head_dim());
  f.head(model.config.proj_dim) = projected;
  if (input.scores) {
    const VagoScores& s = *input.scores;
    f.tail(kScoreCount) << s.vagueness, s.subjectivity, s.detail_vs_vagueness,
        s.objectivity_vs_subjectivity;
  }
  return f;
}

}  // namespace

std::vector<std::string> variant_names() {
  return {"roberta",        "roberta+sbert", "roberta+terms",
          "roberta+scores", "roberta+sbert+scores", "roberta+sbert+terms+scores"};
}

FusionConfig variant_config(std::string_view name) {
  FusionConfig config;
  config.use_embed_a = true;
  if (name == "roberta") {
    // defaults
  } else if (name == "roberta+sbert") {
    config.use_embed_b = true;
  } else if (name == "roberta+terms") {
    config.use_vago_terms = true;
  } else if (name == "roberta+scores") {
    config.use_vago_scores = true;
  } else if (name == "roberta+sbert+scores") {
    config.use_embed_b = true;
    config.use_vago_scores = true;
  } else if (name == "roberta+sbert+terms+scores") {
    config.use_embed_b = true;
    config.use_vago_terms = true;
    config.use_vago_scores = true;
  } else {
    throw ConfigError("unknown variant \"" + std::string(name) + "\"");
  }
  return config;
}

std::string augment_with_terms(std::string_view text, std::span<const std::string> terms,
                               std::string_view separator) {
  if (separator.empty()) throw ConfigError("separator must be non-empty");
  std::string out(text);
  out += ' ';
  out += separator;
  for (const std::string& term : terms) {
    out += ' ';
    out += term;
  }
  return out;
}

double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

FeatureInput FeaturePipeline::features(const FusionConfig& config, std::string_view id,
                                       std::string_view text) const {
  FeatureInput input;
  std::vector<std::string> terms;
  if (config.use_vago_terms || config.use_vago_scores) {
    if (lexicon_ == nullptr || ner_ == nullptr) {
      throw ConfigError("expert features require a lexicon and a NER provider");
    }
    const SentenceAnalysis analysis = analyze_sentence(id, text, *lexicon_, *ner_);
    if (config.use_vago_terms) terms = vago_terms(analysis);
    if (config.use_vago_scores) input.scores = compute_scores(analysis);
  }
  if (config.use_embed_a) {
    if (embed_a_ == nullptr) throw ConfigError("embedding provider A is not configured");
    const std::string text_a =
        config.use_vago_terms ? augment_with_terms(text, terms, config.separator)
                              : std::string(text);
    input.embed_a = embed_a_->embed(id, text_a);
  }
  if (config.use_embed_b) {
    if (embed_b_ == nullptr) throw ConfigError("embedding provider B is not configured");
    input.embed_b = embed_b_->embed(id, text);
  }
  return input;
}

int FeaturePipeline::dim_a(const FusionConfig& config) const {
  if (!config.use_embed_a) return 0;
  if (embed_a_ == nullptr) throw ConfigError("embedding provider A is not configured");
  return embed_a_->dim();
}

int FeaturePipeline::dim_b(const FusionConfig& config) const {
  if (!config.use_embed_b) return 0;
  if (embed_b_ == nullptr) throw ConfigError("embedding provider B is not configured");
  return embed_b_->dim();
}

double forward(const FusionModel& model, const FeatureInput& input) {
  const Eigen::VectorXd e = stacked_embeddings(model, input);
  const Eigen::VectorXd f = head_features(model, model.projection * e, input);
  return sigmoid(model.head_weights.dot(f) + model.head_bias);
}

ClassLabel predict(const FusionModel& model, double threshold, const FeatureInput& input) {
  if (threshold < 0.0 || threshold > 1.0) {
    throw ConfigError("threshold must be in [0, 1]");
  }
  return forward(model, input) >= threshold ? ClassLabel::subj : ClassLabel::obj;
}

FusionModel initialize_model(const FusionConfig& config, int dim_a, int dim_b) {
  Rng rng(config.seed);
  return initialize_with(rng, config, dim_a, dim_b);
}

BatchGradients batch_gradients(const FusionModel& model,
                               std::span<const FeatureInput> inputs,
                               std::span<const ClassLabel> labels) {
  if (inputs.size() != labels.size() || inputs.empty()) {
    throw ShapeError("batch inputs and labels must be non-empty and equal-sized");
  }
  BatchGradients grads;
  grads.d_projection = Eigen::MatrixXd::Zero(model.projection.rows(), model.projection.cols());
  grads.d_head_weights = Eigen::VectorXd::Zero(model.head_weights.size());
  const auto w_proj = model.head_weights.head(model.config.proj_dim);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Eigen::VectorXd e = stacked_embeddings(model, inputs[i]);
    const Eigen::VectorXd f = head_features(model, model.projection * e, inputs[i]);
    const double logit = model.head_weights.dot(f) + model.head_bias;
    const double y = labels[i] == ClassLabel::subj ? 1.0 : 0.0;
    const double g = sigmoid(logit) - y;
    grads.loss += bce_from_logit(logit, y);
    grads.d_head_weights += g * f;
    grads.d_head_bias += g;
    grads.d_projection += g * w_proj * e.transpose();
  }
  const double inv_n = 1.0 / static_cast<double>(inputs.size());
  grads.loss *= inv_n;
  grads.d_projection *= inv_n;
  grads.d_head_weights *= inv_n;
  grads.d_head_bias *= inv_n;
  return grads;
}

TrainResult train(const FusionConfig& config, std::span<const LabeledExample> data,
                  const FeaturePipeline& pipeline) {
  if (data.empty()) throw DataError("training data is empty");
  bool has_subj = false;
  bool has_obj = false;
  for (const LabeledExample& ex : data) {
    (ex.label == ClassLabel::subj ? has_subj : has_obj) = true;
  }
  if (!has_subj || !has_obj) {
    throw DataError("degenerate training data: both SUBJ and OBJ labels are required");
  }
  if (config.batch_size < 1) throw ConfigError("batch_size must be >= 1");
  if (config.epochs < 0) throw ConfigError("epochs must be >= 0");
  if (config.learning_rate <= 0.0) throw ConfigError("learning_rate must be positive");

  std::vector<FeatureInput> features;
  std::vector<ClassLabel> labels;
  features.reserve(data.size());
  labels.reserve(data.size());
  for (const LabeledExample& ex : data) {
    features.push_back(pipeline.features(config, ex.id, ex.text));
    labels.push_back(ex.label);
  }

  Rng rng(config.seed);
  TrainResult result;
  result.model = initialize_with(rng, config, pipeline.dim_a(config), pipeline.dim_b(config));
  FusionModel& model = result.model;

  const std::size_t n = data.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  std::vector<FeatureInput> batch_inputs;
  std::vector<ClassLabel> batch_labels;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(order);
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < n; start += config.batch_size) {
      const std::size_t stop = std::min(n, start + static_cast<std::size_t>(config.batch_size));
      batch_inputs.clear();
      batch_labels.clear();
      for (std::size_t k = start; k < stop; ++k) {
        batch_inputs.push_back(features[order[k]]);
        batch_labels.push_back(labels[order[k]]);
      }
      const BatchGradients grads = batch_gradients(model, batch_inputs, batch_labels);
      model.projection -= config.learning_rate * grads.d_projection;
      model.head_weights -= config.learning_rate * grads.d_head_weights;
      model.head_bias -= config.learning_rate * grads.d_head_bias;
      epoch_loss += grads.loss * static_cast<double>(stop - start);
    }
    epoch_loss /= static_cast<double>(n);
    if (!std::isfinite(epoch_loss)) {
      throw TrainError("training diverged at epoch " + std::to_string(epoch + 1) +
                       ": loss is not finite");
    }
    result.loss_trace.push_back(epoch_loss);
  }
  return result;
}

void save_model(std::ostream& out, const FusionModel& model) {
  nlohmann::json doc;
  doc["config"] = {{"use_embed_a", model.config.use_embed_a},
                   {"use_embed_b", model.config.use_embed_b},
                   {"use_vago_scores", model.config.use_vago_scores},
                   {"use_vago_terms", model.config.use_vago_terms},
                   {"proj_dim", model.config.proj_dim},
                   {"separator", model.config.separator},
                   {"epochs", model.config.epochs},
                   {"batch_size", model.config.batch_size},
                   {"learning_rate", model.config.learning_rate},
                   {"seed", model.config.seed}};
  doc["dims"] = {{"embed_a", model.dim_a},
                 {"embed_b", model.dim_b},
                 {"projection_input", model.embed_dim()},
                 {"head_input", model.config.head_dim()}};
  auto rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < model.projection.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < model.projection.cols(); ++c) {
      row.push_back(model.projection(r, c));
    }
    rows.push_back(std::move(row));
  }
  doc["projection"] = std::move(rows);
  auto weights = nlohmann::json::array();
  for (Eigen::Index i = 0; i < model.head_weights.size(); ++i) {
    weights.push_back(model.head_weights[i]);
  }
  doc["head_weights"] = std::move(weights);
  doc["head_bias"] = model.head_bias;
  out << doc.dump(2) << '\n';
}

void save_model_file(const std::string& path, const FusionModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write model file: " + path);
  save_model(out, model);
}

FusionModel load_model(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed model file: ") + e.what());
  }
  try {
    FusionModel model;
    const auto& c = doc.at("config");
    model.config.use_embed_a = c.at("use_embed_a").get<bool>();
    model.config.use_embed_b = c.at("use_embed_b").get<bool>();
    model.config.use_vago_scores = c.at("use_vago_scores").get<bool>();
    model.config.use_vago_terms = c.at("use_vago_terms").get<bool>();
    model.config.proj_dim = c.at("proj_dim").get<int>();
    model.config.separator = c.at("separator").get<std::string>();
    model.config.epochs = c.at("epochs").get<int>();
    model.config.batch_size = c.at("batch_size").get<int>();
    model.config.learning_rate = c.at("learning_rate").get<double>();
    model.config.seed = c.at("seed").get<std::uint64_t>();
    const auto& d = doc.at("dims");
    model.dim_a = d.at("embed_a").get<int>();
    model.dim_b = d.at("embed_b").get<int>();
    const auto& rows = doc.at("projection");
    model.projection.resize(model.config.proj_dim, model.embed_dim());
    if (static_cast<Eigen::Index>(rows.size()) != model.projection.rows()) {
      throw ParseError("model projection row count mismatch");
    }
    for (Eigen::Index r = 0; r < model.projection.rows(); ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (static_cast<Eigen::Index>(row.size()) != model.projection.cols()) {
        throw ParseError("model projection column count mismatch");
      }
      for (Eigen::Index cc = 0; cc < model.projection.cols(); ++cc) {
        model.projection(r, cc) = row[static_cast<std::size_t>(cc)].get<double>();
      }
    }
    const auto& weights = doc.at("head_weights");
    if (static_cast<int>(weights.size()) != model.config.head_dim()) {
      throw ParseError("model head length mismatch: expected " +
                       std::to_string(model.config.head_dim()) + ", got " +
                       std::to_string(weights.size()));
    }
    model.head_weights.resize(model.config.head_dim());
    for (Eigen::Index i = 0; i < model.head_weights.size(); ++i) {
      model.head_weights[i] = weights[static_cast<std::size_t>(i)].get<double>();
    }
    model.head_bias = doc.at("head_bias").get<double>();
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed model file: ") + e.what());
  }
}

FusionModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open model file: " + path);
  return load_model(in);
}

}  // namespace vago
