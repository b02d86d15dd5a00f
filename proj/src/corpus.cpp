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

#include "vago/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "vago/error.hpp"
#include "vago/textprep.hpp"

namespace vago {

std::string_view to_string(ClassLabel label) {
  return label == ClassLabel::subj ? "SUBJ" : "OBJ";
}

std::optional<ClassLabel> parse_label(std::string_view text) {
  if (text == "SUBJ") return ClassLabel::subj;
  if (text == "OBJ") return ClassLabel::obj;
  return std::nullopt;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

std::string trim(std::string s) {
  const auto is_ws = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
  };
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_ws(s[b])) ++b;
  while (e > b && is_ws(s[e - 1])) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::vector<CorpusRecord> load_corpus(std::istream& in, bool labeled, bool clean) {
  const std::size_t want = labeled ? 3 : 2;
  std::string raw;
  if (!std::getline(in, raw)) throw ParseError("corpus is missing its header row");
  if (!raw.empty() && raw.back() == '\r') raw.pop_back();
  const auto header = split_tabs(raw);
  if (header.size() != want || header[0] != "sentence_id" || header[1] != "sentence" ||
      (labeled && header[2] != "label")) {
    throw ParseError(labeled
                         ? "bad corpus header: expected `sentence_id\tsentence\tlabel`"
                         : "bad corpus header: expected `sentence_id\tsentence`");
  }

  std::vector<CorpusRecord> records;
  std::set<std::string> ids;
  std::size_t line_no = 1;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    const auto fields = split_tabs(raw);
    if (fields.size() != want) {
      throw ParseError("corpus line " + std::to_string(line_no) + ": expected " +
                       std::to_string(want) + " columns, got " +
                       std::to_string(fields.size()));
    }
    CorpusRecord rec;
    rec.id = fields[0];
    if (!ids.insert(rec.id).second) {
      throw ParseError("duplicate sentence id \"" + rec.id + "\" at line " +
                       std::to_string(line_no));
    }
    rec.text = trim(clean ? clean_brackets(fields[1]) : fields[1]);
    if (rec.text.empty()) {
      throw ParseError("empty sentence at line " + std::to_string(line_no));
    }
    if (labeled) {
      const auto label = parse_label(fields[2]);
      if (!label) {
        throw ParseError("unknown label \"" + fields[2] + "\" at line " +
                         std::to_string(line_no));
      }
      rec.label = label;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<CorpusRecord> load_corpus_file(const std::string& path, bool labeled,
                                           bool clean) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open corpus file: " + path);
  return load_corpus(in, labeled, clean);
}

void write_corpus(std::ostream& out, std::span<const CorpusRecord> records, bool labeled) {
  out << (labeled ? "sentence_id\tsentence\tlabel\n" : "sentence_id\tsentence\n");
  for (const CorpusRecord& rec : records) {
    out << rec.id << '\t' << rec.text;
    if (labeled) {
      if (!rec.label) throw DataError("record \"" + rec.id + "\" has no label");
      out << '\t' << to_string(*rec.label);
    }
    out << '\n';
  }
}

AuditResult audit_term(std::span<const CorpusRecord> corpus, std::string_view term,
                       const Lexicon& lexicon) {
  std::vector<std::string> needle;
  for (const Token& t : tokenize(ascii_lower(term))) needle.push_back(t.text);
  if (needle.empty()) throw DataError("audit term is empty");

  AuditResult result;
  const std::string needle_text = [&] {
    std::string s;
    for (const auto& t : needle) {
      if (!s.empty()) s += ' ';
      s += t;
    }
    return s;
  }();
  for (const LexiconEntry& e : lexicon.entries()) {
    if (e.surface_text() == needle_text) result.categories.push_back(e.category);
  }

  for (const CorpusRecord& rec : corpus) {
    if (!rec.label) {
      throw DataError("audit requires a labeled corpus; record \"" + rec.id +
                      "\" has no label");
    }
    const auto tokens = tokenize(rec.text);
    bool found = false;
    for (std::size_t i = 0; i + needle.size() <= tokens.size() && !found; ++i) {
      bool ok = true;
      for (std::size_t k = 0; k < needle.size() && ok; ++k) {
        ok = (ascii_lower(tokens[i + k].text) == needle[k]);
      }
      found = ok;
    }
    if (found) {
      ++result.n_containing;
      if (*rec.label == ClassLabel::obj) ++result.n_objective;
    }
  }
  return result;
}

std::vector<CorpusRecord> translate_corpus(std::vector<CorpusRecord> records,
                                           const Translator& translator) {
  for (CorpusRecord& rec : records) rec.text = translator.translate(rec.text);
  return records;
}

}  // namespace vago
