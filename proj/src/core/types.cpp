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

#include <bit>
#include <cstring>

#include <hps/kernels.hpp>
#include <hps/types.hpp>

static_assert(std::endian::native == std::endian::little,
              "value payloads are stored in wire order; big-endian hosts are unsupported");

namespace hps {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::BadFormatVersion: return "BadFormatVersion";
    case ErrorCode::Truncated: return "Truncated";
    case ErrorCode::TrailingBytes: return "TrailingBytes";
    case ErrorCode::DuplicateKey: return "DuplicateKey";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::DtypeMismatch: return "DtypeMismatch";
    case ErrorCode::F16Range: return "F16Range";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::UnknownTable: return "UnknownTable";
    case ErrorCode::TableExists: return "TableExists";
    case ErrorCode::BadShard: return "BadShard";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Corruption: return "Corruption";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Protocol: return "Protocol";
  }
  return "Unknown";
}

void validate_table_name(const TableName& name) {
  if (name.empty()) raise(ErrorCode::InvalidArgument, "table name must not be empty");
  if (name.size() > kMaxTableNameBytes)
    raise(ErrorCode::InvalidArgument, "table name exceeds 255 bytes: " + name.substr(0, 32));
}

void validate_dim(std::uint32_t dim) {
  if (dim == 0 || dim > kMaxDim)
    raise(ErrorCode::InvalidArgument, "dim must be in [1, 4096], got " + std::to_string(dim));
}

Dtype dtype_from_byte(std::uint8_t b) {
  if (b > 1) raise(ErrorCode::InvalidArgument, "unknown dtype byte " + std::to_string(b));
  return static_cast<Dtype>(b);
}

EmbeddingVector EmbeddingVector::f32(std::span<const float> values) {
  validate_dim(static_cast<std::uint32_t>(values.size()));
  if (kernels::has_non_finite_f32(values.data(), values.size()))
    raise(ErrorCode::NonFinite, "embedding vector contains NaN or Inf");
  EmbeddingVector v;
  v.dim_ = static_cast<std::uint16_t>(values.size());
  v.dtype_ = Dtype::F32;
  v.data_.resize(values.size() * 4);
  std::memcpy(v.data_.data(), values.data(), v.data_.size());
  return v;
}

EmbeddingVector EmbeddingVector::f16(std::span<const std::uint16_t> bits) {
  validate_dim(static_cast<std::uint32_t>(bits.size()));
  if (kernels::has_non_finite_f16(bits.data(), bits.size()))
    raise(ErrorCode::NonFinite, "embedding vector contains NaN or Inf");
  EmbeddingVector v;
  v.dim_ = static_cast<std::uint16_t>(bits.size());
  v.dtype_ = Dtype::F16;
  v.data_.resize(bits.size() * 2);
  std::memcpy(v.data_.data(), bits.data(), v.data_.size());
  return v;
}

EmbeddingVector EmbeddingVector::zeros(std::uint16_t dim, Dtype dtype) {
  validate_dim(dim);
  EmbeddingVector v;
  v.dim_ = dim;
  v.dtype_ = dtype;
  v.data_.assign(dim * scalar_size(dtype), std::byte{0});
  return v;
}

EmbeddingVector EmbeddingVector::from_bytes(std::uint16_t dim, Dtype dtype,
                                            std::span<const std::byte> data) {
  validate_dim(dim);
  if (data.size() != dim * scalar_size(dtype))
    raise(ErrorCode::DimMismatch, "payload size does not match dim*scalar_size");
  bool bad = dtype == Dtype::F32
                 ? kernels::has_non_finite_f32(reinterpret_cast<const float*>(data.data()), dim)
                 : kernels::has_non_finite_f16(
                       reinterpret_cast<const std::uint16_t*>(data.data()), dim);
  if (bad) raise(ErrorCode::NonFinite, "embedding vector contains NaN or Inf");
  EmbeddingVector v;
  v.dim_ = dim;
  v.dtype_ = dtype;
  v.data_.assign(data.begin(), data.end());
  return v;
}

EmbeddingVector EmbeddingVector::from_bytes_unchecked(std::uint16_t dim, Dtype dtype,
                                                      std::vector<std::byte> data) {
  EmbeddingVector v;
  v.dim_ = dim;
  v.dtype_ = dtype;
  v.data_ = std::move(data);
  return v;
}

std::span<const float> EmbeddingVector::f32_values() const {
  if (dtype_ != Dtype::F32) raise(ErrorCode::DtypeMismatch, "vector is not F32");
  return {reinterpret_cast<const float*>(data_.data()), dim_};
}

std::span<const std::uint16_t> EmbeddingVector::f16_bits() const {
  if (dtype_ != Dtype::F16) raise(ErrorCode::DtypeMismatch, "vector is not F16");
  return {reinterpret_cast<const std::uint16_t*>(data_.data()), dim_};
}

TableMeta TableMeta::make(TableName table, std::uint16_t dim, Dtype dtype) {
  return make(std::move(table), dim, dtype, EmbeddingVector::zeros(dim, dtype));
}

TableMeta TableMeta::make(TableName table, std::uint16_t dim, Dtype dtype,
                          EmbeddingVector default_vector) {
  TableMeta meta{std::move(table), dim, dtype, std::move(default_vector)};
  meta.validate();
  return meta;
}

void TableMeta::validate() const {
  validate_table_name(table);
  validate_dim(dim);
  if (default_vector.dim() != dim || default_vector.dtype() != dtype)
    raise(ErrorCode::DimMismatch, "default vector does not match table dim/dtype");
}

}  // namespace hps
