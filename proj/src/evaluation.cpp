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

#include "vago/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "vago/error.hpp"

namespace vago {

namespace {

double safe_ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

// F1 = 2PR/(P+R) computed as 2tp/(2tp+fp+fn): one exact integer ratio,
// identical to the two-step form under the zero conventions.
ClassMetrics class_metrics(std::size_t tp, std::size_t fp, std::size_t fn) {
  ClassMetrics m;
  m.precision = safe_ratio(tp, tp + fp);
  m.recall = safe_ratio(tp, tp + fn);
  m.f1 = safe_ratio(2 * tp, 2 * tp + fp + fn);
  return m;
}

}  // namespace

MetricsReport metrics(std::span<const ClassLabel> y_true,
                      std::span<const ClassLabel> y_pred) {
  if (y_true.size() != y_pred.size() || y_true.empty()) {
    throw ShapeError("metrics need equal-length, non-empty label sequences (got " +
                     std::to_string(y_true.size()) + " and " +
                     std::to_string(y_pred.size()) + ")");
  }
  MetricsReport report;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const bool t = y_true[i] == ClassLabel::subj;
    const bool p = y_pred[i] == ClassLabel::subj;
    if (t && p) ++report.confusion.tp;
    else if (!t && p) ++report.confusion.fp;
    else if (t && !p) ++report.confusion.fn;
    else ++report.confusion.tn;
  }
  const ConfusionCounts& c = report.confusion;
  report.subj = class_metrics(c.tp, c.fp, c.fn);
  report.obj = class_metrics(c.tn, c.fn, c.fp);  // OBJ as positive class
  report.macro_f1 = (report.subj.f1 + report.obj.f1) / 2.0;
  return report;
}

std::vector<RocPoint> roc_curve(std::span<const ClassLabel> y_true,
                                std::span<const double> scores) {
  if (y_true.size() != scores.size() || y_true.empty()) {
    throw ShapeError("roc_curve needs equal-length, non-empty inputs");
  }
  std::size_t n_pos = 0;
  for (ClassLabel l : y_true)
    if (l == ClassLabel::subj) ++n_pos;
  const std::size_t n_neg = y_true.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw DataError("roc_curve needs both classes present");
  }

  std::vector<std::size_t> order(y_true.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  std::vector<RocPoint> points;
  points.push_back(RocPoint{0.0, 0.0});
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    // Take all items sharing this score: they flip together when the
    // threshold reaches the score value.
    const double threshold = scores[order[i]];
    while (i < order.size() && scores[order[i]] == threshold) {
      if (y_true[order[i]] == ClassLabel::subj) ++tp;
      else ++fp;
      ++i;
    }
    points.push_back(RocPoint{static_cast<double>(fp) / static_cast<double>(n_neg),
                              static_cast<double>(tp) / static_cast<double>(n_pos)});
  }
  points.push_back(RocPoint{1.0, 1.0});
  std::sort(points.begin(), points.end(), [](const RocPoint& a, const RocPoint& b) {
    if (a.fpr != b.fpr) return a.fpr < b.fpr;
    return a.tpr < b.tpr;
  });
  return points;
}

double macro_f1_at(std::span<const ClassLabel> y_true, std::span<const double> scores,
                   double threshold) {
  if (y_true.size() != scores.size() || y_true.empty()) {
    throw ShapeError("macro_f1_at needs equal-length, non-empty inputs");
  }
  std::vector<ClassLabel> y_pred(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    y_pred[i] = scores[i] >= threshold ? ClassLabel::subj : ClassLabel::obj;
  }
  return metrics(y_true, y_pred).macro_f1;
}

SweepResult sweep_threshold(std::span<const ClassLabel> y_true,
                            std::span<const double> scores,
                            std::span<const double> grid) {
  if (grid.empty()) throw ConfigError("threshold grid is empty");
  for (double t : grid) {
    if (!(t >= 0.0 && t <= 1.0)) throw ConfigError("grid thresholds must lie in [0, 1]");
  }
  std::vector<double> sorted(grid.begin(), grid.end());
  std::sort(sorted.begin(), sorted.end());
  SweepResult best{sorted.front(), -1.0};
  for (double t : sorted) {
    const double f1 = macro_f1_at(y_true, scores, t);
    if (f1 > best.macro_f1) best = SweepResult{t, f1};
  }
  return best;
}

std::vector<double> default_grid(double step) {
  if (!(step > 0.0 && step <= 1.0)) throw ConfigError("grid step must be in (0, 1]");
  const int n = static_cast<int>(std::round(1.0 / step));
  if (std::abs(n * step - 1.0) > 1e-9) {
    throw ConfigError("grid step must divide 1 evenly");
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    grid.push_back(static_cast<double>(k) / static_cast<double>(n));
  }
  return grid;
}

}  // namespace vago
