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

#ifndef VAGO_SCORING_HPP
#define VAGO_SCORING_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vago/lexicon.hpp"
#include "vago/ner.hpp"
#include "vago/textprep.hpp"

namespace vago {

// Effective term counts after the cancellation rules. VD and VC keep
// two views: quoted subjective terms stay in the vagueness counts but
// leave the subjectivity counts, so the two aggregates differ.
struct EffectiveCounts {
  std::size_t va = 0;
  std::size_t vg = 0;
  std::size_t vd_vague = 0;   // VD terms counted for vagueness
  std::size_t vc_vague = 0;   // VC terms counted for vagueness
  std::size_t vd_subj = 0;    // VD terms counted for subjectivity
  std::size_t vc_subj = 0;    // VC terms counted for subjectivity
  std::size_t es = 0;         // unquoted ES markers
  std::size_t ne = 0;         // named entities

  std::size_t vague_total() const { return va + vg + vd_vague + vc_vague; }
  std::size_t subjective_total() const { return es + vd_subj + vc_subj; }
  std::size_t objective_total() const { return ne + va + vg; }
};

// Everything known about one sentence after matching and annotation.
struct SentenceAnalysis {
  std::vector<Token> tokens;
  std::vector<QuoteSpan> quotes;
  std::vector<TermMatch> matches;
  std::vector<EntitySpan> entities;
  std::size_t n_words = 0;
  EffectiveCounts counts;
};

// The four sentence ratios, each in [0, 1].
struct VagoScores {
  double vagueness = 0.0;
  double subjectivity = 0.0;
  double detail_vs_vagueness = 0.0;
  double objectivity_vs_subjectivity = 0.0;
};

// Runs tokenize -> detect_quotes -> match_terms -> annotate and applies
// the cancellation rules, producing a fully populated analysis.
SentenceAnalysis analyze_sentence(std::string_view sentence_id, std::string_view text,
                                  const Lexicon& lexicon, const NerProvider& ner);

// Applies the two expert rules and recomputes the effective counts:
//  (a) a VD/VC match with a number token within the two preceding
//      positions is cancelled and leaves every count ("180cm tall");
//  (b) a quoted VD/VC/ES match leaves the subjectivity counts but a
//      quoted VD/VC still counts as vague.
SentenceAnalysis apply_cancellations(SentenceAnalysis analysis);

// Computes the four ratios from the effective counts. A ratio of the
// form x/(x+y) with x+y = 0 is 0.5; the per-word ratios cap at 1 since
// punctuation markers match without counting as words. Throws DataError
// when the sentence has no countable words.
VagoScores compute_scores(const SentenceAnalysis& analysis);

// Lowercased surfaces of all non-cancelled matches, in sentence order,
// duplicates preserved.
std::vector<std::string> vago_terms(const SentenceAnalysis& analysis);

}  // namespace vago

#endif  // VAGO_SCORING_HPP
