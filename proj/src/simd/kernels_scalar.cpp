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

#include <algorithm>
#include <stdexcept>

#include "cyclolat/simd/kernels.hpp"

namespace cyclolat::simd {

LinearForms::LinearForms(std::size_t rows, std::size_t dim, std::span<const std::int64_t> coeffs,
                         std::span<const std::int64_t> bounds)
    : rows_(rows), dim_(dim), stride_((rows + kLanes - 1) / kLanes * kLanes) {
  if (coeffs.size() != rows * dim || bounds.size() != rows) {
    throw std::invalid_argument("LinearForms: size mismatch");
  }
  coeffs_.assign(stride_ * dim_, 0);
  // Padding rows are 0 <= INT32_MAX and never equal, so they are inert.
  bounds_.assign(stride_, INT32_MAX);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < dim; ++j) {
      const std::int64_t c = coeffs[r * dim + j];
      if (c > INT32_MAX || c < -INT32_MAX) throw std::overflow_error("LinearForms: coefficient range");
      coeffs_[j * stride_ + r] = static_cast<std::int32_t>(c);
      max_abs_coeff_ = std::max(max_abs_coeff_, c < 0 ? -c : c);
    }
    const std::int64_t b = bounds[r];
    if (b > INT32_MAX / 2 || b < -INT32_MAX / 2) throw std::overflow_error("LinearForms: bound range");
    bounds_[r] = static_cast<std::int32_t>(b);
    max_abs_bound_ = std::max(max_abs_bound_, b < 0 ? -b : b);
  }
}

bool LinearForms::fits(std::int64_t max_abs_x, std::int64_t scale) const {
  const __int128 lim = INT32_MAX;
  const __int128 dot = static_cast<__int128>(max_abs_coeff_) * max_abs_x * static_cast<__int128>(dim_);
  const __int128 rhs = static_cast<__int128>(max_abs_bound_) * (scale < 0 ? -scale : scale);
  return dot < lim && rhs < lim;
}

namespace {

std::int32_t dot_row(const LinearForms& f, const std::int32_t* x, std::size_t r) {
  std::int32_t acc = 0;
  for (std::size_t j = 0; j < f.dim(); ++j) acc += f.coord(j)[r] * x[j];
  return acc;
}

void evaluate_scalar(const LinearForms& f, const std::int32_t* x, std::int32_t* out) {
  for (std::size_t r = 0; r < f.rows(); ++r) out[r] = dot_row(f, x, r);
}

bool all_within_scalar(const LinearForms& f, const std::int32_t* x, std::int32_t scale) {
  for (std::size_t r = 0; r < f.rows(); ++r)
    if (dot_row(f, x, r) > scale * f.bounds()[r]) return false;
  return true;
}

Classification classify_scalar(const LinearForms& f, const std::int32_t* x, std::int32_t scale) {
  Classification c;
  for (std::size_t r = 0; r < f.rows(); ++r) {
    const std::int32_t v = dot_row(f, x, r);
    const std::int32_t lim = scale * f.bounds()[r];
    if (v > lim) return {};
    if (v == lim) c.equal_mask |= std::uint64_t{1} << r;
  }
  c.within = true;
  return c;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", &evaluate_scalar, &all_within_scalar, &classify_scalar};
  return k;
}

}  // namespace cyclolat::simd
