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

// Compiled with -mavx2 and -ffp-contract=off; only reached after a runtime
// CPU check. No FMA, so poly_eval matches the scalar kernel bit for bit.

#include <immintrin.h>

#include "qecmap/kernels/kernels.h"

namespace qecmap::kernels::detail {

namespace {

inline __m256d ipow4(__m256d base, uint32_t e) {
    __m256d r = _mm256_set1_pd(1.0);
    while (e) {
        if (e & 1) {
            r = _mm256_mul_pd(r, base);
        }
        base = _mm256_mul_pd(base, base);
        e >>= 1;
    }
    return r;
}

}  // namespace

double product_sum_avx2(
    std::span<const double> table, std::span<const int32_t> idx, std::span<const double> coef, size_t rows) {
    const size_t count = coef.size();
    const size_t full = count & ~size_t{3};
    __m256d acc = _mm256_setzero_pd();
    for (size_t p = 0; p < full; p += 4) {
        __m256d prod = _mm256_loadu_pd(coef.data() + p);
        for (size_t i = 0; i < rows; i++) {
            __m128i ix = _mm_loadu_si128(reinterpret_cast<const __m128i *>(idx.data() + i * count + p));
            prod = _mm256_mul_pd(prod, _mm256_i32gather_pd(table.data(), ix, 8));
        }
        acc = _mm256_add_pd(acc, prod);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (size_t p = full; p < count; p++) {
        double prod = coef[p];
        for (size_t i = 0; i < rows; i++) {
            prod *= table[idx[i * count + p]];
        }
        total += prod;
    }
    return total;
}

void poly_eval_avx2(
    const PolyTerms &terms,
    std::span<const double> x,
    std::span<const double> y,
    std::span<const double> z,
    std::span<double> out) {
    const size_t count = out.size();
    const size_t full = count & ~size_t{3};
    for (size_t k = 0; k < full; k += 4) {
        __m256d vx = _mm256_loadu_pd(x.data() + k);
        __m256d vy = _mm256_loadu_pd(y.data() + k);
        __m256d vz = _mm256_loadu_pd(z.data() + k);
        __m256d acc = _mm256_setzero_pd();
        for (size_t t = 0; t < terms.size(); t++) {
            __m256d v = _mm256_set1_pd(terms.coef[t]);
            v = _mm256_mul_pd(v, ipow4(vx, terms.ex[t]));
            v = _mm256_mul_pd(v, ipow4(vy, terms.ey[t]));
            v = _mm256_mul_pd(v, ipow4(vz, terms.ez[t]));
            acc = _mm256_add_pd(acc, v);
        }
        _mm256_storeu_pd(out.data() + k, acc);
    }
    if (full < count) {
        poly_eval_scalar(terms, x.subspan(full), y.subspan(full), z.subspan(full), out.subspan(full));
    }
}

}  // namespace qecmap::kernels::detail
