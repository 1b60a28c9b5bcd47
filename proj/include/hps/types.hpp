/*
 * Copyright (c) 2026, HPS Contributors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <hps/error.hpp>

namespace hps {

/// Categorical feature id. Any 64-bit value is a valid key; equality is bitwise.
using EmbeddingKey = std::uint64_t;

/// Embedding table namespace discriminator. Non-empty, at most 255 bytes.
using TableName = std::string;

/// Storage data type of embedding scalars.
enum class Dtype : std::uint8_t { F32 = 0, F16 = 1 };

constexpr std::uint16_t kMaxDim = 4096;
constexpr std::size_t kMaxTableNameBytes = 255;

/// Version 0 is reserved for initial bulk loads; incremental updates start at 1.
constexpr std::uint64_t kBulkLoadVersion = 0;

inline std::size_t scalar_size(Dtype dtype) { return dtype == Dtype::F32 ? 4 : 2; }

void validate_table_name(const TableName& name);
void validate_dim(std::uint32_t dim);
Dtype dtype_from_byte(std::uint8_t b);

/// Fixed-dimension numeric vector, stored as its wire byte layout
/// (little-endian scalars). Values are validated finite at construction;
/// equality is bitwise.
class EmbeddingVector {
 public:
  EmbeddingVector() = default;

  static EmbeddingVector f32(std::span<const float> values);
  static EmbeddingVector f16(std::span<const std::uint16_t> bits);
  static EmbeddingVector zeros(std::uint16_t dim, Dtype dtype = Dtype::F32);
  static EmbeddingVector from_bytes(std::uint16_t dim, Dtype dtype, std::span<const std::byte> data);

  /// Skips the finiteness scan; for payloads that were validated at ingestion
  /// (store read paths, codec internals).
  static EmbeddingVector from_bytes_unchecked(std::uint16_t dim, Dtype dtype,
                                              std::vector<std::byte> data);

  std::uint16_t dim() const noexcept { return dim_; }
  Dtype dtype() const noexcept { return dtype_; }
  bool empty() const noexcept { return dim_ == 0; }
  std::size_t byte_size() const noexcept { return data_.size(); }
  std::span<const std::byte> bytes() const noexcept { return data_; }

  std::span<const float> f32_values() const;
  std::span<const std::uint16_t> f16_bits() const;

  friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;

 private:
  std::uint16_t dim_ = 0;
  Dtype dtype_ = Dtype::F32;
  std::vector<std::byte> data_;
};

/// One embedding with its per-table version. Versions are assigned by the
/// update pipeline's per-table sequence; larger versions win everywhere.
struct VersionedEntry {
  EmbeddingKey key = 0;
  EmbeddingVector vector;
  std::uint64_t version = 0;

  friend bool operator==(const VersionedEntry&, const VersionedEntry&) = default;
};

/// Immutable per-table schema shared by every tier.
struct TableMeta {
  TableName table;
  std::uint16_t dim = 0;
  Dtype dtype = Dtype::F32;
  EmbeddingVector default_vector;  // returned for keys absent from all tiers

  static TableMeta make(TableName table, std::uint16_t dim, Dtype dtype = Dtype::F32);
  static TableMeta make(TableName table, std::uint16_t dim, Dtype dtype,
                        EmbeddingVector default_vector);
  void validate() const;

  friend bool operator==(const TableMeta&, const TableMeta&) = default;
};

}  // namespace hps
