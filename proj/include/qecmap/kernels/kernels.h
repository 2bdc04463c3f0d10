// Copyright 2026 The qecmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QECMAP_KERNELS_KERNELS_H
#define QECMAP_KERNELS_KERNELS_H

#include <cstddef>
#include <cstdint>
#include <span>

namespace qecmap::kernels {

/// Sparse polynomial in (x, y, z) in struct-of-arrays form. All spans have the
/// same length (one entry per term).
struct PolyTerms {
    std::span<const double> coef;
    std::span<const uint32_t> ex;
    std::span<const uint32_t> ey;
    std::span<const uint32_t> ez;

    size_t size() const {
        return coef.size();
    }
};

/// Weighted product sums: returns sum_p coef[p] * prod_{i<rows} table[idx[i*coef.size() + p]].
/// idx is row-major with one row per factor position.
using ProductSumFn = double (*)(
    std::span<const double> table, std::span<const int32_t> idx, std::span<const double> coef, size_t rows);

/// out[k] = sum_t coef[t] * x[k]^ex[t] * y[k]^ey[t] * z[k]^ez[t], terms
/// accumulated in order. Every point is evaluated independently.
using PolyEvalFn = void (*)(
    const PolyTerms &terms,
    std::span<const double> x,
    std::span<const double> y,
    std::span<const double> z,
    std::span<double> out);

struct KernelSet {
    const char *name;
    ProductSumFn product_sum;
    PolyEvalFn poly_eval;
};

/// Portable reference implementation.
const KernelSet &scalar();

/// AVX2 implementation, or nullptr when not compiled in or not supported by
/// the running CPU.
const KernelSet *avx2();

/// Best implementation for this CPU, chosen once on first use.
const KernelSet &active();

namespace detail {
double product_sum_scalar(
    std::span<const double> table, std::span<const int32_t> idx, std::span<const double> coef, size_t rows);
void poly_eval_scalar(
    const PolyTerms &terms,
    std::span<const double> x,
    std::span<const double> y,
    std::span<const double> z,
    std::span<double> out);
#ifdef QECMAP_HAVE_AVX2
double product_sum_avx2(
    std::span<const double> table, std::span<const int32_t> idx, std::span<const double> coef, size_t rows);
void poly_eval_avx2(
    const PolyTerms &terms,
    std::span<const double> x,
    std::span<const double> y,
    std::span<const double> z,
    std::span<double> out);
#endif
}  // namespace detail

}  // namespace qecmap::kernels

#endif
