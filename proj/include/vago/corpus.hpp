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

#ifndef VAGO_CORPUS_HPP
#define VAGO_CORPUS_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vago/lexicon.hpp"

namespace vago {

// Binary task label: subjective is the positive class.
enum class ClassLabel { obj = 0, subj = 1 };

std::string_view to_string(ClassLabel label);
std::optional<ClassLabel> parse_label(std::string_view text);

struct CorpusRecord {
  std::string id;
  std::string text;
  std::optional<ClassLabel> label;
};

// Reads a TSV corpus with header `sentence_id<TAB>sentence` plus a
// `label` column when labeled. Text is trimmed; clean_brackets runs
// first when `clean` is set. Throws ParseError on a missing or wrong
// header, duplicate ids, unknown labels or empty sentences.
std::vector<CorpusRecord> load_corpus(std::istream& in, bool labeled, bool clean = false);
std::vector<CorpusRecord> load_corpus_file(const std::string& path, bool labeled,
                                           bool clean = false);

// Writes the same TSV format, header included.
void write_corpus(std::ostream& out, std::span<const CorpusRecord> records, bool labeled);

struct AuditResult {
  std::size_t n_containing = 0;  // sentences whose tokens contain the term
  std::size_t n_objective = 0;   // of those, sentences labeled OBJ
  std::vector<VagoCategory> categories;  // categories of the term in the lexicon
};

// Counts labeled sentences containing `term` as a case-insensitive
// consecutive token sequence, and how many of them carry label OBJ.
// Throws DataError when a record has no label.
AuditResult audit_term(std::span<const CorpusRecord> corpus, std::string_view term,
                       const Lexicon& lexicon);

// Hook for pre-translated corpora. The only built-in implementation is
// the identity; external translations are supplied as translated files.
class Translator {
 public:
  virtual ~Translator() = default;
  virtual std::string_view name() const = 0;
  virtual std::string translate(std::string_view text) const = 0;
};

class IdentityTranslator final : public Translator {
 public:
  std::string_view name() const override { return "identity"; }
  std::string translate(std::string_view text) const override {
    return std::string(text);
  }
};

std::vector<CorpusRecord> translate_corpus(std::vector<CorpusRecord> records,
                                           const Translator& translator);

}  // namespace vago

#endif  // VAGO_CORPUS_HPP
