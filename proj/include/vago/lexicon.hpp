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

#ifndef VAGO_LEXICON_HPP
#define VAGO_LEXICON_HPP

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vago/textprep.hpp"

namespace vago {

// The five lexical categories. VA and VG are objective-vague, VD and VC
// are subjective-vague, ES marks explicit subjectivity (not vague).
enum class VagoCategory { VA, VG, VD, VC, ES };

inline constexpr std::array<VagoCategory, 5> kAllCategories = {
    VagoCategory::VA, VagoCategory::VG, VagoCategory::VD, VagoCategory::VC,
    VagoCategory::ES};

std::string_view to_string(VagoCategory c);
std::optional<VagoCategory> parse_category(std::string_view label);

// One lexicon term: its lowercased surface tokens (length >= 1) and its
// category. Multiword terms keep one entry per token.
struct LexiconEntry {
  std::vector<std::string> surface;
  VagoCategory category = VagoCategory::VA;

  std::string surface_text() const;  // tokens joined by single spaces
};

// Immutable term database with a per-category histogram and a
// first-token index for matching. Thread-safe for concurrent reads.
class Lexicon {
 public:
  Lexicon() = default;

  // Parses the TSV stream: one `term<TAB>category` per line, with
  // `#` comments and blank lines allowed. Terms are lowercased and
  // duplicate (surface, category) lines are dropped. Throws ParseError
  // with the offending line number on malformed lines or unknown
  // category labels.
  static Lexicon load(std::istream& in);
  static Lexicon load_file(const std::string& path);
  static Lexicon from_entries(std::vector<LexiconEntry> entries);

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::size_t histogram(VagoCategory c) const {
    return histogram_[static_cast<std::size_t>(c)];
  }

  // Entry indices whose surface starts with `first_token` (lowercase),
  // ordered by decreasing surface length.
  std::span<const std::size_t> candidates(std::string_view first_token) const;

 private:
  void build_index();

  std::vector<LexiconEntry> entries_;
  std::array<std::size_t, 5> histogram_ = {0, 0, 0, 0, 0};
  std::unordered_map<std::string, std::vector<std::size_t>> by_first_token_;
};

// One detected occurrence of a lexicon entry in a token stream.
struct TermMatch {
  const LexiconEntry* entry = nullptr;
  std::size_t begin = 0;  // token index
  std::size_t end = 0;    // one past the last matched token
  bool quoted = false;    // fully inside a QuoteSpan
  bool cancelled = false; // set later by the cancellation rules
};

// Case-insensitive, left-to-right, longest-match-first scan. Matched
// ranges never overlap; after a match the scan resumes past it. The
// quoted flag is set from `quotes`, cancelled starts false.
std::vector<TermMatch> match_terms(std::span<const Token> tokens,
                                   std::span<const QuoteSpan> quotes,
                                   const Lexicon& lexicon);

}  // namespace vago

#endif  // VAGO_LEXICON_HPP
