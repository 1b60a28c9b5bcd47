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

namespace hps::kernels {

// Data-parallel inner loops used on the value-payload paths. Every kernel has
// a scalar reference implementation plus (on supporting hardware) a SIMD
// variant selected once at startup. The two are bit-equivalent; the test
// suite checks them against each other on randomized buffers.

/// Narrows n single-precision values to IEEE 754 binary16, round-to-nearest-even.
/// Values whose rounded magnitude exceeds the binary16 finite range come out as
/// the infinity bit pattern; callers that must reject out-of-range inputs scan
/// the output with has_non_finite_f16.
void f32_to_f16(const float* src, std::uint16_t* dst, std::size_t n);

/// Widens n binary16 values to single precision. Exact.
void f16_to_f32(const std::uint16_t* src, float* dst, std::size_t n);

/// CRC-32C (Castagnoli). `crc` is the running value; start from 0.
std::uint32_t crc32c(std::uint32_t crc, const void* data, std::size_t n);

/// True if any element is NaN or +-Inf.
bool has_non_finite_f32(const float* v, std::size_t n);
bool has_non_finite_f16(const std::uint16_t* v, std::size_t n);

/// Name of the selected backend: "avx2", "neon" or "scalar".
const char* active_backend();

/// Force the scalar reference path (test hook). Also honored at startup when
/// the environment variable HPS_KERNELS=scalar is set.
void force_scalar(bool on);

namespace scalar {

// Reference implementations; always available, platform independent.
void f32_to_f16(const float* src, std::uint16_t* dst, std::size_t n);
void f16_to_f32(const std::uint16_t* src, float* dst, std::size_t n);
std::uint32_t crc32c(std::uint32_t crc, const void* data, std::size_t n);
bool has_non_finite_f32(const float* v, std::size_t n);
bool has_non_finite_f16(const std::uint16_t* v, std::size_t n);

std::uint16_t f32_bits_to_f16_bits(std::uint32_t bits);
std::uint32_t f16_bits_to_f32_bits(std::uint16_t bits);

}  // namespace scalar

}  // namespace hps::kernels
