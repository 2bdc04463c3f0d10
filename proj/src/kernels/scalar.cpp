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

#include "qecmap/kernels/kernels.h"

namespace qecmap::kernels::detail {

namespace {

// Square-and-multiply; the vector kernels replay exactly this sequence per lane.
inline double ipow(double base, uint32_t e) {
    double r = 1.0;
    while (e) {
        if (e & 1) {
            r *= base;
        }
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace

double product_sum_scalar(
    std::span<const double> table, std::span<const int32_t> idx, std::span<const double> coef, size_t rows) {
    const size_t count = coef.size();
    double acc = 0;
    for (size_t p = 0; p < count; p++) {
        double prod = coef[p];
        for (size_t i = 0; i < rows; i++) {
            prod *= table[idx[i * count + p]];
        }
        acc += prod;
    }
    return acc;
}

void poly_eval_scalar(
    const PolyTerms &terms,
    std::span<const double> x,
    std::span<const double> y,
    std::span<const double> z,
    std::span<double> out) {
    for (size_t k = 0; k < out.size(); k++) {
        double acc = 0;
        for (size_t t = 0; t < terms.size(); t++) {
            double v = terms.coef[t];
            v *= ipow(x[k], terms.ex[t]);
            v *= ipow(y[k], terms.ey[t]);
            v *= ipow(z[k], terms.ez[t]);
            acc += v;
        }
        out[k] = acc;
    }
}

}  // namespace qecmap::kernels::detail
