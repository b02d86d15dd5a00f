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

#include "vago/textprep.hpp"

#include <cstdint>

namespace vago {

namespace {

// Decodes one UTF-8 codepoint starting at byte i. Invalid bytes are
// returned as-is (one byte, value of the byte) so tokenization never
// fails on malformed input.
struct Codepoint {
  char32_t value;
  std::size_t size;
};

Codepoint decode_utf8(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {b0, 1};
  }
  if (i + len > s.size()) return {b0, 1};
  for (std::size_t k = 1; k < len; ++k) {
    const auto bk = static_cast<unsigned char>(s[i + k]);
    if ((bk & 0xC0) != 0x80) return {b0, 1};
    cp = (cp << 6) | (bk & 0x3F);
  }
  return {cp, len};
}

bool is_space_cp(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v' || c == 0x00A0 || (c >= 0x2000 && c <= 0x200A) ||
         c == 0x2028 || c == 0x2029 || c == 0x3000;
}

bool is_digit_cp(char32_t c) { return c >= U'0' && c <= U'9'; }

// Letters: ASCII alphabetic plus any non-ASCII codepoint that is not
// whitespace and not in the punctuation ranges below. Good enough for
// Latin-script text; no Unicode tables required.
bool is_punct_cp(char32_t c) {
  if (c < 0x80) return !is_digit_cp(c) && !(c >= U'A' && c <= U'Z') && !(c >= U'a' && c <= U'z');
  if (c >= 0x00A1 && c <= 0x00BF) return true;  // ¡ ¿ « » · ...
  if (c == 0x00D7 || c == 0x00F7) return true;
  if (c >= 0x2010 && c <= 0x206F) return true;  // dashes, curly quotes, ellipsis
  return false;
}

bool is_alnum_cp(char32_t c) {
  return !is_space_cp(c) && !is_punct_cp(c);
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto [cp, len] = decode_utf8(text, i);
    if (is_space_cp(cp)) {
      i += len;
      continue;
    }
    const std::size_t begin = i;
    if (is_alnum_cp(cp)) {
      const bool starts_with_digit = is_digit_cp(cp);
      i += len;
      while (i < text.size()) {
        const auto [c2, l2] = decode_utf8(text, i);
        if (!is_alnum_cp(c2)) break;
        i += l2;
      }
      tokens.push_back(Token{std::string(text.substr(begin, i - begin)), begin, i,
                             starts_with_digit ? TokenKind::number : TokenKind::word});
    } else {
      i += len;
      tokens.push_back(
          Token{std::string(text.substr(begin, i - begin)), begin, i, TokenKind::punctuation});
    }
  }
  return tokens;
}

namespace {

enum class QuoteMark { none, straight_open, curly_open, curly_close };

QuoteMark classify_quote(const Token& t) {
  if (t.kind != TokenKind::punctuation) return QuoteMark::none;
  if (t.text == "\"") return QuoteMark::straight_open;
  if (t.text == "“") return QuoteMark::curly_open;   // “
  if (t.text == "”") return QuoteMark::curly_close;  // ”
  return QuoteMark::none;
}

}  // namespace

std::vector<QuoteSpan> detect_quotes(std::span<const Token> tokens) {
  std::vector<QuoteSpan> spans;
  bool pending = false;
  bool pending_curly = false;
  std::size_t open_idx = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const QuoteMark m = classify_quote(tokens[i]);
    if (m == QuoteMark::none) continue;
    if (!pending) {
      if (m == QuoteMark::straight_open || m == QuoteMark::curly_open) {
        pending = true;
        pending_curly = (m == QuoteMark::curly_open);
        open_idx = i;
      }
      // A stray curly closer with no opener is ignored.
      continue;
    }
    const bool closes = pending_curly ? (m == QuoteMark::curly_close)
                                      : (m == QuoteMark::straight_open);
    if (closes) {
      if (i > open_idx + 1) spans.push_back(QuoteSpan{open_idx + 1, i});
      pending = false;
    }
    // Other quote marks inside an open pair are treated as content.
  }
  return spans;
}

std::string clean_brackets(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool removed = false;
  auto is_ws = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  for (char c : text) {
    if (c == '[' || c == ']') {
      removed = true;
      continue;
    }
    if (is_ws(c)) {
      if (removed && !out.empty() && is_ws(out.back())) continue;
    } else {
      removed = false;
    }
    out.push_back(c);
  }
  return out;
}

std::size_t count_words(std::span<const Token> tokens) {
  std::size_t n = 0;
  for (const Token& t : tokens)
    if (t.kind != TokenKind::punctuation) ++n;
  return n;
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

}  // namespace vago
