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

#ifndef VAGO_TEXTPREP_HPP
#define VAGO_TEXTPREP_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vago {

enum class TokenKind { word, number, punctuation };

// A token plus its half-open byte span into the source string.
// kind is number iff the text begins with a decimal digit, and
// punctuation iff the text contains no letters or digits.
struct Token {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::word;
};

// Half-open token-index interval strictly inside a pair of quote marks.
// The quote tokens themselves are not part of the span.
struct QuoteSpan {
  std::size_t open = 0;   // first quoted token
  std::size_t close = 0;  // one past the last quoted token
};

// Splits text into word, number and punctuation tokens. Whitespace
// separates tokens; each punctuation codepoint is its own token; an
// alphanumeric run starting with a digit stays whole ("180cm" is one
// number token). Deterministic; empty text yields an empty list.
std::vector<Token> tokenize(std::string_view text);

// Pairs straight double quotes and curly quote pairs left to right and
// returns the enclosed token ranges. Unpaired openers and empty pairs
// produce no span.
std::vector<QuoteSpan> detect_quotes(std::span<const Token> tokens);

// Removes every '[' and ']' from text. A whitespace run that a removal
// merged together collapses to a single space; text without brackets is
// returned unchanged.
std::string clean_brackets(std::string_view text);

// Number of word and number tokens. Punctuation tokens do not count.
std::size_t count_words(std::span<const Token> tokens);

// Lowercases ASCII letters; other bytes pass through.
std::string ascii_lower(std::string_view text);

}  // namespace vago

#endif  // VAGO_TEXTPREP_HPP
