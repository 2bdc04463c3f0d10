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

namespace qecmap::kernels {

const KernelSet &scalar() {
    static const KernelSet k{"scalar", detail::product_sum_scalar, detail::poly_eval_scalar};
    return k;
}

const KernelSet *avx2() {
#if defined(QECMAP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const KernelSet k{"avx2", detail::product_sum_avx2, detail::poly_eval_avx2};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &k : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet &active() {
    static const KernelSet &chosen = avx2() ? *avx2() : scalar();
    return chosen;
}

}  // namespace qecmap::kernels
