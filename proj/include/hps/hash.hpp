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

#include <hps/types.hpp>

namespace hps {

constexpr std::uint64_t kFnv1a64OffsetBasis = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnv1a64Prime = 0x100000001b3ull;

constexpr std::uint64_t fnv1a64(std::span<const std::byte> data) {
  std::uint64_t h = kFnv1a64OffsetBasis;
  for (std::byte b : data) {
    h ^= static_cast<std::uint64_t>(b);
    h *= kFnv1a64Prime;
  }
  return h;
}

/// FNV-1a 64 over the 8-byte little-endian encoding of the key. This is the
/// single placement authority: cache sets, VDB shards and distributed device
/// shards all derive from it, so layouts are identical across platforms.
constexpr std::uint64_t key_hash(EmbeddingKey key) {
  std::uint64_t h = kFnv1a64OffsetBasis;
  for (int i = 0; i < 8; ++i) {
    h ^= (key >> (8 * i)) & 0xffu;
    h *= kFnv1a64Prime;
  }
  return h;
}

/// Shard index of a key among num_shards hash partitions.
constexpr std::uint32_t partition_of(EmbeddingKey key, std::uint32_t num_shards) {
  return static_cast<std::uint32_t>(key_hash(key) % num_shards);
}

}  // namespace hps
