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

#ifndef VAGO_NER_HPP
#define VAGO_NER_HPP

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vago/textprep.hpp"

namespace vago {

enum class EntityLabel { person_or_org_or_loc, temporal, number };

std::string_view to_string(EntityLabel label);

// Half-open token-index range of one named entity. Each span counts as
// one entity regardless of its token length.
struct EntitySpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  EntityLabel label = EntityLabel::person_or_org_or_loc;
};

// Pluggable recognizer boundary. Implementations are immutable after
// construction and annotate deterministically.
class NerProvider {
 public:
  virtual ~NerProvider() = default;
  virtual std::string_view name() const = 0;
  virtual std::vector<EntitySpan> annotate(std::string_view sentence_id,
                                           std::span<const Token> tokens) const = 0;
};

// Built-in pattern recognizer:
//  (a) maximal runs of capitalized word tokens, where the sentence-
//      initial token only qualifies if it is not a function word
//      (the, a, an, this, that, it, he, she, they, we, you, i);
//  (b) number tokens;
//  (c) month names, weekday names and 4-digit years.
// Overlaps resolve (a) > (c) > (b); spans come out sorted and disjoint.
std::vector<EntitySpan> pattern_annotate(std::span<const Token> tokens);

class PatternNer final : public NerProvider {
 public:
  std::string_view name() const override { return "pattern"; }
  std::vector<EntitySpan> annotate(std::string_view /*sentence_id*/,
                                   std::span<const Token> tokens) const override {
    return pattern_annotate(tokens);
  }
};

// Serves externally produced annotations from a JSON-lines stream:
// {"id": "...", "entities": [[start_token, end_token, label], ...]}.
// annotate throws LookupError for ids absent from the file.
class FileNer final : public NerProvider {
 public:
  static FileNer load(std::istream& in);
  static FileNer load_file(const std::string& path);

  std::string_view name() const override { return "file"; }
  std::vector<EntitySpan> annotate(std::string_view sentence_id,
                                   std::span<const Token> tokens) const override;

 private:
  std::unordered_map<std::string, std::vector<EntitySpan>> spans_;
};

// Builds a provider from a CLI selector: "pattern" or "file:<path>".
std::unique_ptr<NerProvider> make_ner_provider(std::string_view selector);

}  // namespace vago

#endif  // VAGO_NER_HPP
