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
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <hps/error.hpp>

namespace hps {

/// Little-endian byte buffer writer. All multi-byte integers on wire and on
/// disk go through this, so the layouts are identical on every platform.
class ByteWriter {
 public:
  ByteWriter() = default;

  void u8(std::uint8_t v) { buf_.push_back(static_cast<std::byte>(v)); }

  void u16(std::uint16_t v) {
    const std::size_t n = buf_.size();
    buf_.resize(n + 2);
    buf_[n] = static_cast<std::byte>(v & 0xff);
    buf_[n + 1] = static_cast<std::byte>((v >> 8) & 0xff);
  }

  void u32(std::uint32_t v) {
    const std::size_t n = buf_.size();
    buf_.resize(n + 4);
    for (int i = 0; i < 4; ++i) buf_[n + i] = static_cast<std::byte>((v >> (8 * i)) & 0xff);
  }

  void u64(std::uint64_t v) {
    const std::size_t n = buf_.size();
    buf_.resize(n + 8);
    for (int i = 0; i < 8; ++i) buf_[n + i] = static_cast<std::byte>((v >> (8 * i)) & 0xff);
  }

  void bytes(std::span<const std::byte> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }

  void bytes(std::string_view s) {
    const auto* p = reinterpret_cast<const std::byte*>(s.data());
    buf_.insert(buf_.end(), p, p + s.size());
  }

  std::size_t size() const noexcept { return buf_.size(); }
  std::span<const std::byte> view() const noexcept { return buf_; }
  std::vector<std::byte> take() { return std::move(buf_); }

 private:
  std::vector<std::byte> buf_;
};

/// Cursor over a byte span with bounds-checked little-endian reads.
/// Out-of-bounds reads raise ErrorCode::Truncated.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::byte> data) : data_(data) {}

  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(data_[pos_++]);
  }

  std::uint16_t u16() {
    need(2);
    std::uint16_t v = static_cast<std::uint16_t>(static_cast<std::uint8_t>(data_[pos_])) |
                      static_cast<std::uint16_t>(static_cast<std::uint8_t>(data_[pos_ + 1])) << 8;
    pos_ += 2;
    return v;
  }

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(data_[pos_ + i])) << (8 * i);
    pos_ += 4;
    return v;
  }

  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(data_[pos_ + i])) << (8 * i);
    pos_ += 8;
    return v;
  }

  std::span<const std::byte> bytes(std::size_t n) {
    need(n);
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::string str(std::size_t n) {
    auto b = bytes(n);
    return std::string(reinterpret_cast<const char*>(b.data()), b.size());
  }

  std::size_t remaining() const noexcept { return data_.size() - pos_; }
  std::size_t position() const noexcept { return pos_; }
  bool done() const noexcept { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n) raise(ErrorCode::Truncated, "payload truncated");
  }

  std::span<const std::byte> data_;
  std::size_t pos_ = 0;
};

}  // namespace hps
