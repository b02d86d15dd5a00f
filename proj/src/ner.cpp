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

#include "vago/ner.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>

#include <json.hpp>

#include "vago/error.hpp"

namespace vago {

std::string_view to_string(EntityLabel label) {
  switch (label) {
    case EntityLabel::person_or_org_or_loc: return "person_or_org_or_loc";
    case EntityLabel::temporal: return "temporal";
    case EntityLabel::number: return "number";
  }
  return "?";
}

namespace {

constexpr std::array<std::string_view, 12> kFunctionWords = {
    "the", "a", "an", "this", "that", "it", "he", "she", "they", "we", "you", "i"};

constexpr std::array<std::string_view, 19> kDateWords = {
    "january", "february", "march",    "april",   "may",      "june",   "july",
    "august",  "september", "october", "november", "december", "monday", "tuesday",
    "wednesday", "thursday", "friday",  "saturday", "sunday"};

bool is_function_word(std::string_view lowered) {
  return std::find(kFunctionWords.begin(), kFunctionWords.end(), lowered) !=
         kFunctionWords.end();
}

bool is_date_word(std::string_view lowered) {
  return std::find(kDateWords.begin(), kDateWords.end(), lowered) != kDateWords.end();
}

// First codepoint is an ASCII or Latin-1 uppercase letter.
bool starts_capitalized(const std::string& text) {
  if (text.empty()) return false;
  const auto b0 = static_cast<unsigned char>(text[0]);
  if (b0 >= 'A' && b0 <= 'Z') return true;
  if (b0 == 0xC3 && text.size() >= 2) {
    const auto b1 = static_cast<unsigned char>(text[1]);  // U+00C0..U+00DE
    return b1 >= 0x80 && b1 <= 0x9E && b1 != 0x97;
  }
  return false;
}

bool is_four_digit_year(const std::string& text) {
  if (text.size() != 4) return false;
  for (char c : text)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

std::vector<EntitySpan> pattern_annotate(std::span<const Token> tokens) {
  const std::size_t n = tokens.size();
  std::vector<bool> covered(n, false);
  std::vector<EntitySpan> spans;

  auto eligible = [&](std::size_t i) {
    const Token& t = tokens[i];
    if (t.kind != TokenKind::word || !starts_capitalized(t.text)) return false;
    if (i == 0 && is_function_word(ascii_lower(t.text))) return false;
    return true;
  };

  // (a) capitalized runs
  for (std::size_t i = 0; i < n;) {
    if (!eligible(i)) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < n && eligible(j)) ++j;
    spans.push_back(EntitySpan{i, j, EntityLabel::person_or_org_or_loc});
    for (std::size_t k = i; k < j; ++k) covered[k] = true;
    i = j;
  }

  // (c) dates and years, (b) remaining numbers
  for (std::size_t i = 0; i < n; ++i) {
    if (covered[i]) continue;
    const Token& t = tokens[i];
    if (t.kind == TokenKind::word && is_date_word(ascii_lower(t.text))) {
      spans.push_back(EntitySpan{i, i + 1, EntityLabel::temporal});
      covered[i] = true;
    } else if (t.kind == TokenKind::number) {
      spans.push_back(EntitySpan{i, i + 1,
                                 is_four_digit_year(t.text) ? EntityLabel::temporal
                                                            : EntityLabel::number});
      covered[i] = true;
    }
  }

  std::sort(spans.begin(), spans.end(),
            [](const EntitySpan& a, const EntitySpan& b) { return a.begin < b.begin; });
  return spans;
}

namespace {

EntityLabel parse_label(const std::string& label, std::size_t line_no) {
  if (label == "person_or_org_or_loc") return EntityLabel::person_or_org_or_loc;
  if (label == "temporal") return EntityLabel::temporal;
  if (label == "number") return EntityLabel::number;
  throw ParseError("unknown entity label \"" + label + "\" at line " +
                   std::to_string(line_no));
}

}  // namespace

FileNer FileNer::load(std::istream& in) {
  FileNer provider;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("malformed annotation line " + std::to_string(line_no) + ": " +
                       e.what());
    }
    if (!doc.is_object() || !doc.contains("id") || !doc["id"].is_string() ||
        !doc.contains("entities") || !doc["entities"].is_array()) {
      throw ParseError("malformed annotation line " + std::to_string(line_no) +
                       ": expected {\"id\", \"entities\"}");
    }
    const std::string id = doc["id"].get<std::string>();
    if (provider.spans_.contains(id)) {
      throw ParseError("duplicate annotation id \"" + id + "\" at line " +
                       std::to_string(line_no));
    }
    std::vector<EntitySpan> spans;
    for (const auto& item : doc["entities"]) {
      if (!item.is_array() || item.size() != 3 || !item[0].is_number_unsigned() ||
          !item[1].is_number_unsigned() || !item[2].is_string()) {
        throw ParseError("malformed entity triple at line " + std::to_string(line_no));
      }
      const auto begin = item[0].get<std::size_t>();
      const auto end = item[1].get<std::size_t>();
      if (end <= begin) {
        throw ParseError("empty entity span at line " + std::to_string(line_no));
      }
      spans.push_back(EntitySpan{begin, end, parse_label(item[2].get<std::string>(), line_no)});
    }
    std::sort(spans.begin(), spans.end(),
              [](const EntitySpan& a, const EntitySpan& b) { return a.begin < b.begin; });
    for (std::size_t k = 1; k < spans.size(); ++k) {
      if (spans[k].begin < spans[k - 1].end) {
        throw ParseError("overlapping entity spans at line " + std::to_string(line_no));
      }
    }
    provider.spans_.emplace(id, std::move(spans));
  }
  return provider;
}

FileNer FileNer::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open annotation file: " + path);
  return load(in);
}

std::vector<EntitySpan> FileNer::annotate(std::string_view sentence_id,
                                          std::span<const Token> /*tokens*/) const {
  const auto it = spans_.find(std::string(sentence_id));
  if (it == spans_.end()) {
    throw LookupError("no stored annotations for sentence id \"" +
                      std::string(sentence_id) + "\"");
  }
  return it->second;
}

std::unique_ptr<NerProvider> make_ner_provider(std::string_view selector) {
  if (selector == "pattern") return std::make_unique<PatternNer>();
  if (selector.starts_with("file:")) {
    return std::make_unique<FileNer>(FileNer::load_file(std::string(selector.substr(5))));
  }
  throw ConfigError("unknown --ner selector \"" + std::string(selector) +
                    "\"; expected `pattern` or `file:<path>`");
}

}  // namespace vago
