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

// x86-64 variants: F16C for the half conversions, SSE4.2 for CRC-32C, AVX2
// for the finiteness scans. This translation unit is compiled with
// -mavx2 -mf16c -msse4.2 and must only be entered after a runtime CPUID check.

#include <hps/kernels.hpp>

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

namespace hps::kernels::avx2 {

void f32_to_f16(const float* src, std::uint16_t* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 v = _mm256_loadu_ps(src + i);
    const __m128i h = _mm256_cvtps_ph(v, _MM_FROUND_TO_NEAREST_INT);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), h);
  }
  if (i < n) scalar::f32_to_f16(src + i, dst + i, n - i);
}

void f16_to_f32(const std::uint16_t* src, float* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m128i h = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
    _mm256_storeu_ps(dst + i, _mm256_cvtph_ps(h));
  }
  if (i < n) scalar::f16_to_f32(src + i, dst + i, n - i);
}

std::uint32_t crc32c(std::uint32_t crc, const void* data, std::size_t n) {
  const auto* p = static_cast<const std::uint8_t*>(data);
  std::uint64_t c = crc ^ 0xffffffffu;
  while (n >= 8) {
    std::uint64_t chunk;
    std::memcpy(&chunk, p, 8);
    c = _mm_crc32_u64(c, chunk);
    p += 8;
    n -= 8;
  }
  std::uint32_t c32 = static_cast<std::uint32_t>(c);
  while (n > 0) {
    c32 = _mm_crc32_u8(c32, *p++);
    --n;
  }
  return c32 ^ 0xffffffffu;
}

bool has_non_finite_f32(const float* v, std::size_t n) {
  const __m256i exp_mask = _mm256_set1_epi32(0x7f800000);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i bits = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const __m256i masked = _mm256_and_si256(bits, exp_mask);
    const __m256i eq = _mm256_cmpeq_epi32(masked, exp_mask);
    if (_mm256_movemask_epi8(eq) != 0) return true;
  }
  return i < n ? scalar::has_non_finite_f32(v + i, n - i) : false;
}

bool has_non_finite_f16(const std::uint16_t* v, std::size_t n) {
  const __m256i exp_mask = _mm256_set1_epi16(0x7c00);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i bits = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const __m256i masked = _mm256_and_si256(bits, exp_mask);
    const __m256i eq = _mm256_cmpeq_epi16(masked, exp_mask);
    if (_mm256_movemask_epi8(eq) != 0) return true;
  }
  return i < n ? scalar::has_non_finite_f16(v + i, n - i) : false;
}

}  // namespace hps::kernels::avx2

#endif  // x86-64
