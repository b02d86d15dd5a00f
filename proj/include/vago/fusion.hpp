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

#ifndef VAGO_FUSION_HPP
#define VAGO_FUSION_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "vago/corpus.hpp"
#include "vago/embeddings.hpp"
#include "vago/ner.hpp"
#include "vago/scoring.hpp"

namespace vago {

inline constexpr int kScoreCount = 4;

// Classifier configuration. The preset variants toggle the four use_*
// flags; everything else keeps the defaults below unless overridden.
struct FusionConfig {
  bool use_embed_a = true;
  bool use_embed_b = false;
  bool use_vago_scores = false;
  bool use_vago_terms = false;
  int proj_dim = 5;
  std::string separator = "[SEP]";
  int epochs = 30;
  int batch_size = 6;
  double learning_rate = 1e-3;
  std::uint64_t seed = 0;

  int score_dim() const { return use_vago_scores ? kScoreCount : 0; }
  int head_dim() const { return proj_dim + score_dim(); }

  friend bool operator==(const FusionConfig&, const FusionConfig&) = default;
};

// Named preset variants, from embeddings-only baselines to the full
// embeddings + expert-score combination.
std::vector<std::string> variant_names();
FusionConfig variant_config(std::string_view name);

// Linear projection of the concatenated embeddings followed by a linear
// head over [projection output, expert scores] with sigmoid output.
struct FusionModel {
  Eigen::MatrixXd projection;    // proj_dim x (dim_a + dim_b)
  Eigen::VectorXd head_weights;  // proj_dim + score_dim
  double head_bias = 0.0;
  FusionConfig config;
  int dim_a = 0;  // 0 when embedding A is disabled
  int dim_b = 0;

  int embed_dim() const { return dim_a + dim_b; }
};

struct LabeledExample {
  std::string id;
  std::string text;
  ClassLabel label = ClassLabel::obj;
};

// Per-example classifier input; fields mirror the config flags.
struct FeatureInput {
  std::optional<Eigen::VectorXd> embed_a;
  std::optional<Eigen::VectorXd> embed_b;
  std::optional<VagoScores> scores;
};

// Appends `separator` and the detected terms to the text:
// "Mary is tall" + ["tall"] -> "Mary is tall [SEP] tall".
std::string augment_with_terms(std::string_view text, std::span<const std::string> terms,
                               std::string_view separator);

double sigmoid(double x);

// Wires lexicon, recognizer and embedding providers into per-example
// classifier inputs, applying term augmentation to provider A when the
// config asks for it.
class FeaturePipeline {
 public:
  FeaturePipeline(const Lexicon* lexicon, const NerProvider* ner,
                  const EmbeddingProvider* embed_a, const EmbeddingProvider* embed_b)
      : lexicon_(lexicon), ner_(ner), embed_a_(embed_a), embed_b_(embed_b) {}

  FeatureInput features(const FusionConfig& config, std::string_view id,
                        std::string_view text) const;

  int dim_a(const FusionConfig& config) const;
  int dim_b(const FusionConfig& config) const;

 private:
  const Lexicon* lexicon_;
  const NerProvider* ner_;
  const EmbeddingProvider* embed_a_;
  const EmbeddingProvider* embed_b_;
};

// Sigmoid probability of the SUBJ class. Throws ShapeError when a
// vector length or the score presence disagrees with the model.
double forward(const FusionModel& model, const FeatureInput& input);

ClassLabel predict(const FusionModel& model, double threshold, const FeatureInput& input);

// Uniform [-0.1, 0.1] weights from the config seed, zero bias.
FusionModel initialize_model(const FusionConfig& config, int dim_a, int dim_b);

struct TrainResult {
  FusionModel model;
  std::vector<double> loss_trace;  // mean BCE per epoch
};

// Mini-batch gradient descent on the mean binary cross-entropy, with a
// seeded shuffle per epoch; the last short batch is kept. Reproducible:
// identical config and data give bit-identical parameters. Throws
// DataError when only one label is present and TrainError when the
// loss stops being finite.
TrainResult train(const FusionConfig& config, std::span<const LabeledExample> data,
                  const FeaturePipeline& pipeline);

// Mean BCE loss and its gradients at one batch; exposed for testing.
struct BatchGradients {
  double loss = 0.0;
  Eigen::MatrixXd d_projection;
  Eigen::VectorXd d_head_weights;
  double d_head_bias = 0.0;
};

BatchGradients batch_gradients(const FusionModel& model,
                               std::span<const FeatureInput> inputs,
                               std::span<const ClassLabel> labels);

// Single-document JSON persistence with full-precision numbers.
void save_model(std::ostream& out, const FusionModel& model);
void save_model_file(const std::string& path, const FusionModel& model);
FusionModel load_model(std::istream& in);
FusionModel load_model_file(const std::string& path);

}  // namespace vago

#endif  // VAGO_FUSION_HPP
