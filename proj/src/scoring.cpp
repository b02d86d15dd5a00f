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

#include "vago/scoring.hpp"

#include "vago/error.hpp"

namespace vago {

namespace {

constexpr std::size_t kMeasureWindow = 2;  // tokens before the match

bool preceded_by_number(std::span<const Token> tokens, std::size_t match_begin) {
  const std::size_t from = match_begin >= kMeasureWindow ? match_begin - kMeasureWindow : 0;
  for (std::size_t i = from; i < match_begin; ++i) {
    if (tokens[i].kind == TokenKind::number) return true;
  }
  return false;
}

// Ratio of the form x / (x + y); neutral 0.5 when both sides are zero.
double proportion(std::size_t x, std::size_t y) {
  if (x + y == 0) return 0.5;
  return static_cast<double>(x) / static_cast<double>(x + y);
}

// Per-word ratio, capped at 1: punctuation markers ("!") can match the
// lexicon without counting as words, so the raw count may exceed N.
double per_word(std::size_t count, std::size_t n_words) {
  const double r = static_cast<double>(count) / static_cast<double>(n_words);
  return r > 1.0 ? 1.0 : r;
}

}  // namespace

SentenceAnalysis analyze_sentence(std::string_view sentence_id, std::string_view text,
                                  const Lexicon& lexicon, const NerProvider& ner) {
  SentenceAnalysis analysis;
  analysis.tokens = tokenize(text);
  analysis.quotes = detect_quotes(analysis.tokens);
  analysis.matches = match_terms(analysis.tokens, analysis.quotes, lexicon);
  analysis.entities = ner.annotate(sentence_id, analysis.tokens);
  analysis.n_words = count_words(analysis.tokens);
  return apply_cancellations(std::move(analysis));
}

SentenceAnalysis apply_cancellations(SentenceAnalysis analysis) {
  EffectiveCounts counts;
  counts.ne = analysis.entities.size();
  for (TermMatch& m : analysis.matches) {
    const VagoCategory cat = m.entry->category;
    const bool gradable = (cat == VagoCategory::VD || cat == VagoCategory::VC);
    if (gradable && preceded_by_number(analysis.tokens, m.begin)) {
      m.cancelled = true;
      continue;
    }
    switch (cat) {
      case VagoCategory::VA:
        ++counts.va;
        break;
      case VagoCategory::VG:
        ++counts.vg;
        break;
      case VagoCategory::VD:
        ++counts.vd_vague;
        if (!m.quoted) ++counts.vd_subj;
        break;
      case VagoCategory::VC:
        ++counts.vc_vague;
        if (!m.quoted) ++counts.vc_subj;
        break;
      case VagoCategory::ES:
        if (!m.quoted) ++counts.es;
        break;
    }
  }
  analysis.counts = counts;
  return analysis;
}

VagoScores compute_scores(const SentenceAnalysis& analysis) {
  if (analysis.n_words == 0) {
    throw DataError("cannot score a sentence with no countable words");
  }
  const EffectiveCounts& c = analysis.counts;
  VagoScores scores;
  scores.vagueness = per_word(c.vague_total(), analysis.n_words);
  scores.subjectivity = per_word(c.subjective_total(), analysis.n_words);
  scores.detail_vs_vagueness = proportion(c.ne, c.vague_total());
  scores.objectivity_vs_subjectivity = proportion(c.objective_total(), c.subjective_total());
  return scores;
}

std::vector<std::string> vago_terms(const SentenceAnalysis& analysis) {
  std::vector<std::string> terms;
  for (const TermMatch& m : analysis.matches) {
    if (!m.cancelled) terms.push_back(m.entry->surface_text());
  }
  return terms;
}

}  // namespace vago
