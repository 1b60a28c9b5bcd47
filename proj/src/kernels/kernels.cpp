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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include <hps/kernels.hpp>

#if defined(__x86_64__) || defined(_M_X64)
namespace hps::kernels::avx2 {
void f32_to_f16(const float*, std::uint16_t*, std::size_t);
void f16_to_f32(const std::uint16_t*, float*, std::size_t);
std::uint32_t crc32c(std::uint32_t, const void*, std::size_t);
bool has_non_finite_f32(const float*, std::size_t);
bool has_non_finite_f16(const std::uint16_t*, std::size_t);
}  // namespace hps::kernels::avx2
#endif

#if defined(__aarch64__)
namespace hps::kernels::neon {
void f32_to_f16(const float*, std::uint16_t*, std::size_t);
void f16_to_f32(const std::uint16_t*, float*, std::size_t);
bool has_non_finite_f32(const float*, std::size_t);
bool has_non_finite_f16(const std::uint16_t*, std::size_t);
}  // namespace hps::kernels::neon
#endif

namespace hps::kernels {

namespace {

struct Vtable {
  const char* name;
  void (*f32_to_f16)(const float*, std::uint16_t*, std::size_t);
  void (*f16_to_f32)(const std::uint16_t*, float*, std::size_t);
  std::uint32_t (*crc32c)(std::uint32_t, const void*, std::size_t);
  bool (*has_non_finite_f32)(const float*, std::size_t);
  bool (*has_non_finite_f16)(const std::uint16_t*, std::size_t);
};

constexpr Vtable kScalar{"scalar",
                         &scalar::f32_to_f16,
                         &scalar::f16_to_f32,
                         &scalar::crc32c,
                         &scalar::has_non_finite_f32,
                         &scalar::has_non_finite_f16};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Vtable kAvx2{"avx2",
                       &avx2::f32_to_f16,
                       &avx2::f16_to_f32,
                       &avx2::crc32c,
                       &avx2::has_non_finite_f32,
                       &avx2::has_non_finite_f16};
#endif

#if defined(__aarch64__)
constexpr Vtable kNeon{"neon",
                       &neon::f32_to_f16,
                       &neon::f16_to_f32,
                       &scalar::crc32c,
                       &neon::has_non_finite_f32,
                       &neon::has_non_finite_f16};
#endif

const Vtable* detect() {
  const char* env = std::getenv("HPS_KERNELS");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return &kScalar;
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("f16c") &&
      __builtin_cpu_supports("sse4.2")) {
    return &kAvx2;
  }
#elif defined(__aarch64__)
  return &kNeon;
#endif
  return &kScalar;
}

std::atomic<const Vtable*> g_active{detect()};

const Vtable& active() { return *g_active.load(std::memory_order_relaxed); }

}  // namespace

void f32_to_f16(const float* src, std::uint16_t* dst, std::size_t n) {
  active().f32_to_f16(src, dst, n);
}

void f16_to_f32(const std::uint16_t* src, float* dst, std::size_t n) {
  active().f16_to_f32(src, dst, n);
}

std::uint32_t crc32c(std::uint32_t crc, const void* data, std::size_t n) {
  return active().crc32c(crc, data, n);
}

bool has_non_finite_f32(const float* v, std::size_t n) { return active().has_non_finite_f32(v, n); }

bool has_non_finite_f16(const std::uint16_t* v, std::size_t n) {
  return active().has_non_finite_f16(v, n);
}

const char* active_backend() { return active().name; }

void force_scalar(bool on) {
  g_active.store(on ? &kScalar : detect(), std::memory_order_relaxed);
}

}  // namespace hps::kernels
