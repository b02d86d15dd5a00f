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

#ifndef VAGO_EMBEDDINGS_HPP
#define VAGO_EMBEDDINGS_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>

#include <Eigen/Dense>

namespace vago {

inline constexpr int kDefaultEmbeddingDim = 768;

// Fixed-dimension sentence-vector boundary. Providers are immutable
// after construction; embed is pure and safe for concurrent reads.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::string_view name() const = 0;
  virtual int dim() const = 0;
  virtual Eigen::VectorXd embed(std::string_view sentence_id,
                                std::string_view text) const = 0;
};

// Signed bag-of-tokens feature hashing. Each lowercased word or number
// token maps to (index, sign) through a seeded 64-bit hash; the count
// vector is L2-normalized. Token hash: FNV-1a over the UTF-8 bytes,
// mixed with splitmix64(seed) and finalized by splitmix64. Index is
// hash mod dim, sign is the top hash bit. Bit-identical on every
// platform. Empty text yields the zero vector.
Eigen::VectorXd hash_embed(std::string_view text, int dim, std::uint64_t seed);

class HashEmbedding final : public EmbeddingProvider {
 public:
  HashEmbedding(int dim, std::uint64_t seed);

  std::string_view name() const override { return "hash"; }
  int dim() const override { return dim_; }
  Eigen::VectorXd embed(std::string_view /*sentence_id*/,
                        std::string_view text) const override {
    return hash_embed(text, dim_, seed_);
  }

 private:
  int dim_;
  std::uint64_t seed_;
};

// Serves precomputed vectors from a JSON-lines stream:
// {"id": "...", "vector": [..]}. All vectors must share one length;
// embed throws LookupError for unknown ids.
class FileEmbedding final : public EmbeddingProvider {
 public:
  static FileEmbedding load(std::istream& in);
  static FileEmbedding load_file(const std::string& path);

  std::string_view name() const override { return "file"; }
  int dim() const override { return dim_; }
  Eigen::VectorXd embed(std::string_view sentence_id,
                        std::string_view text) const override;

 private:
  int dim_ = 0;
  std::unordered_map<std::string, Eigen::VectorXd> vectors_;
};

// Builds a provider from a CLI selector: "hash:<dim>:<seed>" or
// "file:<path>". "hash" alone uses the default dimension and seed 0.
std::unique_ptr<EmbeddingProvider> make_embedding_provider(std::string_view selector);

}  // namespace vago

#endif  // VAGO_EMBEDDINGS_HPP
