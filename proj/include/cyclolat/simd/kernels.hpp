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

// Batched evaluation of small integer linear forms.
//
// Every inner loop of the hull and lattice-point code has the same shape:
// evaluate many forms  a_r . x  at one integer point x and compare each value
// with  scale * bound_r.  The forms are stored coordinate-major (all row
// coefficients of coordinate 0, then coordinate 1, ...), padded to a multiple
// of kLanes, so one coordinate is a contiguous int32 stream.
//
// A portable scalar reference is always built. An AVX2 variant is compiled
// into its own translation unit and selected at runtime when the CPU has it.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cyclolat::simd {

inline constexpr std::size_t kLanes = 8;

class LinearForms {
 public:
  LinearForms() = default;
  /// `coeffs` is row-major (rows x dim); `bounds` has one entry per row.
  LinearForms(std::size_t rows, std::size_t dim, std::span<const std::int64_t> coeffs,
              std::span<const std::int64_t> bounds);

  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }
  std::size_t stride() const { return stride_; }
  const std::int32_t* coord(std::size_t j) const { return coeffs_.data() + j * stride_; }
  const std::int32_t* bounds() const { return bounds_.data(); }

  /// True when evaluating at points with |x_j| <= max_abs_x and comparing
  /// against scale * bound stays inside int32.
  bool fits(std::int64_t max_abs_x, std::int64_t scale) const;

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::size_t stride_ = 0;
  std::int64_t max_abs_coeff_ = 0;
  std::int64_t max_abs_bound_ = 0;
  std::vector<std::int32_t> coeffs_;
  std::vector<std::int32_t> bounds_;
};

struct Classification {
  bool within = false;         // every row satisfies a_r.x <= scale*b_r
  std::uint64_t equal_mask = 0;  // rows with equality (valid only if within, rows <= 64)
};

struct Kernels {
  const char* name;
  /// out[r] = a_r . x for every row.
  void (*evaluate)(const LinearForms& f, const std::int32_t* x, std::int32_t* out);
  /// a_r . x <= scale * b_r for every row; exits at the first violation.
  bool (*all_within)(const LinearForms& f, const std::int32_t* x, std::int32_t scale);
  /// all_within plus the equality mask. Requires rows() <= 64.
  Classification (*classify)(const LinearForms& f, const std::int32_t* x, std::int32_t scale);
};

enum class Backend { kAuto, kScalar, kAvx2 };

const Kernels& scalar_kernels();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const Kernels* avx2_kernels();

/// Kernels used by the library. Defaults to the best available variant;
/// the environment variable CYCLOLAT_SIMD=scalar forces the reference path.
const Kernels& active();
/// Returns false (and leaves the selection unchanged) if unavailable.
bool select_backend(Backend b);

}  // namespace cyclolat::simd
