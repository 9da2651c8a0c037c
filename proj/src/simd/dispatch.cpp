// Copyright 2026 The cyclolat Authors
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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "cyclolat/simd/kernels.hpp"

namespace cyclolat::simd {

#ifdef CYCLOLAT_HAVE_AVX2
const Kernels& avx2_kernels_impl();
#endif

const Kernels* avx2_kernels() {
#if defined(CYCLOLAT_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernels_impl() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const Kernels* initial_selection() {
  const char* env = std::getenv("CYCLOLAT_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
  if (const Kernels* k = avx2_kernels()) return k;
  return &scalar_kernels();
}

std::atomic<const Kernels*>& selection() {
  static std::atomic<const Kernels*> s{initial_selection()};
  return s;
}

}  // namespace

const Kernels& active() { return *selection().load(std::memory_order_acquire); }

bool select_backend(Backend b) {
  const Kernels* k = nullptr;
  switch (b) {
    case Backend::kScalar: k = &scalar_kernels(); break;
    case Backend::kAvx2: k = avx2_kernels(); break;
    case Backend::kAuto: k = avx2_kernels() ? avx2_kernels() : &scalar_kernels(); break;
  }
  if (k == nullptr) return false;
  selection().store(k, std::memory_order_release);
  return true;
}

}  // namespace cyclolat::simd
