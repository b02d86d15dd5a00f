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

#include "vago/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "vago/error.hpp"

namespace vago {

std::string_view to_string(VagoCategory c) {
  switch (c) {
    case VagoCategory::VA: return "VA";
    case VagoCategory::VG: return "VG";
    case VagoCategory::VD: return "VD";
    case VagoCategory::VC: return "VC";
    case VagoCategory::ES: return "ES";
  }
  return "?";
}

std::optional<VagoCategory> parse_category(std::string_view label) {
  for (VagoCategory c : kAllCategories)
    if (label == to_string(c)) return c;
  return std::nullopt;
}

std::string LexiconEntry::surface_text() const {
  std::string out;
  for (const auto& tok : surface) {
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

Lexicon Lexicon::load(std::istream& in) {
  std::vector<LexiconEntry> entries;
  std::set<std::pair<std::string, VagoCategory>> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("malformed lexicon line " + std::to_string(line_no) +
                       ": expected `term<TAB>category`");
    }
    const std::string term = line.substr(0, tab);
    const std::string label = line.substr(tab + 1);
    const auto category = parse_category(label);
    if (!category) {
      throw ParseError("unknown category " + label + " at line " + std::to_string(line_no));
    }
    std::vector<std::string> surface;
    for (const Token& t : tokenize(ascii_lower(term))) surface.push_back(t.text);
    if (surface.empty()) {
      throw ParseError("malformed lexicon line " + std::to_string(line_no) + ": empty term");
    }
    LexiconEntry entry{std::move(surface), *category};
    if (seen.emplace(entry.surface_text(), entry.category).second) {
      entries.push_back(std::move(entry));
    }
  }
  return from_entries(std::move(entries));
}

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open lexicon file: " + path);
  return load(in);
}

Lexicon Lexicon::from_entries(std::vector<LexiconEntry> entries) {
  Lexicon lex;
  lex.entries_ = std::move(entries);
  for (const LexiconEntry& e : lex.entries_) {
    ++lex.histogram_[static_cast<std::size_t>(e.category)];
  }
  lex.build_index();
  return lex;
}

void Lexicon::build_index() {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    by_first_token_[entries_[i].surface.front()].push_back(i);
  }
  // Longest surface first; category order breaks length ties so that
  // matching stays deterministic when the same surface carries two
  // categories.
  for (auto& [_, idx] : by_first_token_) {
    std::sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
      const auto& ea = entries_[a];
      const auto& eb = entries_[b];
      if (ea.surface.size() != eb.surface.size()) return ea.surface.size() > eb.surface.size();
      return ea.category < eb.category;
    });
  }
}

std::span<const std::size_t> Lexicon::candidates(std::string_view first_token) const {
  const auto it = by_first_token_.find(std::string(first_token));
  if (it == by_first_token_.end()) return {};
  return it->second;
}

std::vector<TermMatch> match_terms(std::span<const Token> tokens,
                                   std::span<const QuoteSpan> quotes,
                                   const Lexicon& lexicon) {
  std::vector<std::string> lowered;
  lowered.reserve(tokens.size());
  for (const Token& t : tokens) lowered.push_back(ascii_lower(t.text));

  const auto inside_quotes = [&](std::size_t begin, std::size_t end) {
    for (const QuoteSpan& q : quotes)
      if (q.open <= begin && end <= q.close) return true;
    return false;
  };

  std::vector<TermMatch> matches;
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    const LexiconEntry* hit = nullptr;
    std::size_t hit_len = 0;
    for (std::size_t idx : lexicon.candidates(lowered[pos])) {
      const LexiconEntry& e = lexicon.entries()[idx];
      const std::size_t len = e.surface.size();
      if (pos + len > tokens.size()) continue;
      bool ok = true;
      for (std::size_t k = 1; k < len && ok; ++k) ok = (lowered[pos + k] == e.surface[k]);
      if (ok) {
        hit = &e;
        hit_len = len;
        break;  // candidates are longest-first
      }
    }
    if (hit != nullptr) {
      matches.push_back(TermMatch{hit, pos, pos + hit_len,
                                  inside_quotes(pos, pos + hit_len), false});
      pos += hit_len;
    } else {
      ++pos;
    }
  }
  return matches;
}

}  // namespace vago
