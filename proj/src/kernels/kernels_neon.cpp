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

// AArch64 variants. Binary16 conversion instructions are baseline on ARMv8,
// so no runtime feature probe is needed for these.

#include <hps/kernels.hpp>

#if defined(__aarch64__)

#include <arm_neon.h>

namespace hps::kernels::neon {

void f32_to_f16(const float* src, std::uint16_t* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float32x4_t v = vld1q_f32(src + i);
    const float16x4_t h = vcvt_f16_f32(v);
    vst1_u16(dst + i, vreinterpret_u16_f16(h));
  }
  if (i < n) scalar::f32_to_f16(src + i, dst + i, n - i);
}

void f16_to_f32(const std::uint16_t* src, float* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float16x4_t h = vreinterpret_f16_u16(vld1_u16(src + i));
    vst1q_f32(dst + i, vcvt_f32_f16(h));
  }
  if (i < n) scalar::f16_to_f32(src + i, dst + i, n - i);
}

bool has_non_finite_f32(const float* v, std::size_t n) {
  const uint32x4_t exp_mask = vdupq_n_u32(0x7f800000u);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t bits = vld1q_u32(reinterpret_cast<const std::uint32_t*>(v) + i);
    const uint32x4_t eq = vceqq_u32(vandq_u32(bits, exp_mask), exp_mask);
    if (vmaxvq_u32(eq) != 0) return true;
  }
  return i < n ? scalar::has_non_finite_f32(v + i, n - i) : false;
}

bool has_non_finite_f16(const std::uint16_t* v, std::size_t n) {
  const uint16x8_t exp_mask = vdupq_n_u16(0x7c00u);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const uint16x8_t bits = vld1q_u16(v + i);
    const uint16x8_t eq = vceqq_u16(vandq_u16(bits, exp_mask), exp_mask);
    if (vmaxvq_u16(eq) != 0) return true;
  }
  return i < n ? scalar::has_non_finite_f16(v + i, n - i) : false;
}

}  // namespace hps::kernels::neon

#endif  // __aarch64__
