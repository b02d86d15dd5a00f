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

#ifndef VAGO_EVALUATION_HPP
#define VAGO_EVALUATION_HPP

#include <span>
#include <vector>

#include "vago/corpus.hpp"

namespace vago {

// Confusion counts with SUBJ as the positive class.
struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Per-class precision/recall/F1 and their unweighted mean F1.
// Zero-denominator convention: a precision, recall or F1 whose
// denominator is zero is 0.
struct MetricsReport {
  ConfusionCounts confusion;
  ClassMetrics subj;
  ClassMetrics obj;
  double macro_f1 = 0.0;
};

MetricsReport metrics(std::span<const ClassLabel> y_true,
                      std::span<const ClassLabel> y_pred);

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
};

// One point per distinct score threshold (rule: score >= threshold)
// plus the (0,0) and (1,1) endpoints, sorted by fpr then tpr. Throws
// DataError unless both classes are present.
std::vector<RocPoint> roc_curve(std::span<const ClassLabel> y_true,
                                std::span<const double> scores);

struct SweepResult {
  double threshold = 0.0;
  double macro_f1 = 0.0;
};

// Macro F1 of the rule score >= threshold at one threshold.
double macro_f1_at(std::span<const ClassLabel> y_true, std::span<const double> scores,
                   double threshold);

// Evaluates every grid threshold and returns the maximizer; ties break
// toward the lowest threshold. Throws ConfigError on an empty grid.
SweepResult sweep_threshold(std::span<const ClassLabel> y_true,
                            std::span<const double> scores,
                            std::span<const double> grid);

// {0, step, 2*step, ..., 1}; the default step of 0.05 gives 21 points.
std::vector<double> default_grid(double step = 0.05);

}  // namespace vago

#endif  // VAGO_EVALUATION_HPP
