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

#include <array>
#include <bit>
#include <cstring>

#include <hps/kernels.hpp>

namespace hps::kernels::scalar {

std::uint16_t f32_bits_to_f16_bits(std::uint32_t bits) {
  const std::uint32_t sign = (bits >> 16) & 0x8000u;
  const std::uint32_t abs = bits & 0x7fffffffu;

  if (abs >= 0x7f800000u) {
    // Inf keeps a zero mantissa; NaN keeps its top payload bits and the quiet bit.
    const std::uint32_t mant = abs > 0x7f800000u ? (((abs >> 13) & 0x3ffu) | 0x200u) : 0u;
    return static_cast<std::uint16_t>(sign | 0x7c00u | mant);
  }

  const int e = static_cast<int>(abs >> 23) - 127 + 15;  // rebiased exponent
  std::uint32_t mant = abs & 0x007fffffu;

  if (e >= 31) return static_cast<std::uint16_t>(sign | 0x7c00u);  // >= 2^16 overflows

  std::uint32_t out;
  if (e <= 0) {
    // Subnormal target. Values below half the smallest subnormal round to zero.
    if (e < -10) return static_cast<std::uint16_t>(sign);
    mant |= 0x00800000u;
    const std::uint32_t shift = static_cast<std::uint32_t>(14 - e);
    const std::uint32_t half = 1u << (shift - 1);
    const std::uint32_t rem = mant & ((1u << shift) - 1);
    out = mant >> shift;
    if (rem > half || (rem == half && (out & 1u))) ++out;
  } else {
    const std::uint32_t rem = mant & 0x1fffu;
    out = (static_cast<std::uint32_t>(e) << 10) | (mant >> 13);
    if (rem > 0x1000u || (rem == 0x1000u && (out & 1u))) ++out;
    if (out >= 0x7c00u) out = 0x7c00u;  // rounded up into infinity
  }
  return static_cast<std::uint16_t>(sign | out);
}

std::uint32_t f16_bits_to_f32_bits(std::uint16_t bits) {
  const std::uint32_t sign = static_cast<std::uint32_t>(bits & 0x8000u) << 16;
  const std::uint32_t e = (bits >> 10) & 0x1fu;
  std::uint32_t m = bits & 0x3ffu;

  if (e == 0) {
    if (m == 0) return sign;
    // Normalize the subnormal significand.
    std::uint32_t shift = 0;
    while ((m & 0x400u) == 0) {
      m <<= 1;
      ++shift;
    }
    m &= 0x3ffu;
    return sign | ((113u - shift) << 23) | (m << 13);
  }
  if (e == 31) return sign | 0x7f800000u | (m << 13);
  return sign | ((e + 112u) << 23) | (m << 13);
}

void f32_to_f16(const float* src, std::uint16_t* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = f32_bits_to_f16_bits(std::bit_cast<std::uint32_t>(src[i]));
}

void f16_to_f32(const std::uint16_t* src, float* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = std::bit_cast<float>(f16_bits_to_f32_bits(src[i]));
}

namespace {

std::array<std::uint32_t, 256> make_crc32c_table() {
  std::array<std::uint32_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int k = 0; k < 8; ++k) c = (c & 1u) ? (0x82f63b78u ^ (c >> 1)) : (c >> 1);
    table[i] = c;
  }
  return table;
}

const std::array<std::uint32_t, 256> kCrc32cTable = make_crc32c_table();

}  // namespace

std::uint32_t crc32c(std::uint32_t crc, const void* data, std::size_t n) {
  const auto* p = static_cast<const std::uint8_t*>(data);
  std::uint32_t c = crc ^ 0xffffffffu;
  for (std::size_t i = 0; i < n; ++i) c = kCrc32cTable[(c ^ p[i]) & 0xffu] ^ (c >> 8);
  return c ^ 0xffffffffu;
}

bool has_non_finite_f32(const float* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const auto bits = std::bit_cast<std::uint32_t>(v[i]);
    if ((bits & 0x7f800000u) == 0x7f800000u) return true;
  }
  return false;
}

bool has_non_finite_f16(const std::uint16_t* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if ((v[i] & 0x7c00u) == 0x7c00u) return true;
  }
  return false;
}

}  // namespace hps::kernels::scalar
