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

#include "vago/embeddings.hpp"

#include <cmath>
#include <fstream>
#include <istream>

#include <json.hpp>

#include "vago/error.hpp"
#include "vago/textprep.hpp"

namespace vago {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x00000100000001B3ULL;
  }
  return h;
}

}  // namespace

Eigen::VectorXd hash_embed(std::string_view text, int dim, std::uint64_t seed) {
  if (dim < 1) throw ConfigError("hash embedding dimension must be >= 1");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  const std::uint64_t seed_mix = splitmix64(seed);
  for (const Token& t : tokenize(text)) {
    if (t.kind == TokenKind::punctuation) continue;
    const std::uint64_t h = splitmix64(fnv1a64(ascii_lower(t.text)) ^ seed_mix);
    const auto index = static_cast<Eigen::Index>(h % static_cast<std::uint64_t>(dim));
    v[index] += (h >> 63) != 0 ? -1.0 : 1.0;
  }
  const double norm = v.norm();
  if (norm > 0.0) v /= norm;
  return v;
}

HashEmbedding::HashEmbedding(int dim, std::uint64_t seed) : dim_(dim), seed_(seed) {
  if (dim < 1) throw ConfigError("hash embedding dimension must be >= 1");
}

FileEmbedding FileEmbedding::load(std::istream& in) {
  FileEmbedding provider;
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
      throw ParseError("malformed embedding line " + std::to_string(line_no) + ": " +
                       e.what());
    }
    if (!doc.is_object() || !doc.contains("id") || !doc["id"].is_string() ||
        !doc.contains("vector") || !doc["vector"].is_array()) {
      throw ParseError("malformed embedding line " + std::to_string(line_no) +
                       ": expected {\"id\", \"vector\"}");
    }
    const std::string id = doc["id"].get<std::string>();
    if (provider.vectors_.contains(id)) {
      throw ParseError("duplicate embedding id \"" + id + "\" at line " +
                       std::to_string(line_no));
    }
    const auto& arr = doc["vector"];
    Eigen::VectorXd v(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t k = 0; k < arr.size(); ++k) {
      if (!arr[k].is_number()) {
        throw ParseError("non-numeric vector entry at line " + std::to_string(line_no));
      }
      v[static_cast<Eigen::Index>(k)] = arr[k].get<double>();
      if (!std::isfinite(v[static_cast<Eigen::Index>(k)])) {
        throw ParseError("non-finite vector entry at line " + std::to_string(line_no));
      }
    }
    if (provider.dim_ == 0) {
      if (v.size() == 0) {
        throw ParseError("empty vector at line " + std::to_string(line_no));
      }
      provider.dim_ = static_cast<int>(v.size());
    } else if (v.size() != provider.dim_) {
      throw ParseError("inconsistent vector lengths: " + std::to_string(provider.dim_) +
                       " vs " + std::to_string(v.size()) + " at line " +
                       std::to_string(line_no));
    }
    provider.vectors_.emplace(id, std::move(v));
  }
  if (provider.vectors_.empty()) {
    throw ParseError("embedding file contains no vectors");
  }
  return provider;
}

FileEmbedding FileEmbedding::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open embedding file: " + path);
  return load(in);
}

Eigen::VectorXd FileEmbedding::embed(std::string_view sentence_id,
                                     std::string_view /*text*/) const {
  const auto it = vectors_.find(std::string(sentence_id));
  if (it == vectors_.end()) {
    throw LookupError("no stored embedding for sentence id \"" +
                      std::string(sentence_id) + "\"");
  }
  return it->second;
}

std::unique_ptr<EmbeddingProvider> make_embedding_provider(std::string_view selector) {
  if (selector == "hash") {
    return std::make_unique<HashEmbedding>(kDefaultEmbeddingDim, 0);
  }
  if (selector.starts_with("hash:")) {
    const std::string spec(selector.substr(5));
    const auto colon = spec.find(':');
    try {
      const int dim = std::stoi(spec.substr(0, colon));
      const std::uint64_t seed =
          colon == std::string::npos ? 0 : std::stoull(spec.substr(colon + 1));
      return std::make_unique<HashEmbedding>(dim, seed);
    } catch (const std::logic_error&) {
      throw ConfigError("bad hash embedding selector \"" + std::string(selector) +
                        "\"; expected hash:<dim>:<seed>");
    }
  }
  if (selector.starts_with("file:")) {
    return std::make_unique<FileEmbedding>(
        FileEmbedding::load_file(std::string(selector.substr(5))));
  }
  throw ConfigError("unknown embedding selector \"" + std::string(selector) +
                    "\"; expected hash:<dim>:<seed> or file:<path>");
}

}  // namespace vago
