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

#include "qecmap/dyadic.h"

#include <cmath>

namespace qecmap {

namespace {

[[noreturn]] void overflow() {
    throw std::overflow_error("dyadic coefficient exceeds 64-bit numerator range");
}

int64_t checked_shl(int64_t v, int shift) {
    if (shift < 0) {
        throw std::logic_error("negative shift");
    }
    if (v == 0 || shift == 0) {
        return v;
    }
    if (shift >= 63) {
        overflow();
    }
    int64_t limit = INT64_MAX >> shift;
    if (v > limit || v < -limit) {
        overflow();
    }
    return v * (int64_t{1} << shift);
}

}  // namespace

Dyadic::Dyadic(int64_t num, int log2den) : num_(num), log2den_(log2den) {
    if (num_ == 0) {
        log2den_ = 0;
        return;
    }
    if (log2den_ < 0) {
        num_ = checked_shl(num_, -log2den_);
        log2den_ = 0;
        return;
    }
    while (log2den_ > 0 && (num_ & 1) == 0) {
        num_ /= 2;
        log2den_--;
    }
}

double Dyadic::to_double() const {
    return std::ldexp(static_cast<double>(num_), -log2den_);
}

std::string Dyadic::str() const {
    if (log2den_ == 0) {
        return std::to_string(num_);
    }
    if (log2den_ < 63) {
        return std::to_string(num_) + "/" + std::to_string(int64_t{1} << log2den_);
    }
    return std::to_string(num_) + "/2^" + std::to_string(log2den_);
}

Dyadic Dyadic::operator-() const {
    if (num_ == INT64_MIN) {
        overflow();
    }
    Dyadic r;
    r.num_ = -num_;
    r.log2den_ = log2den_;
    return r;
}

Dyadic Dyadic::operator+(const Dyadic &other) const {
    int d = std::max(log2den_, other.log2den_);
    int64_t a = checked_shl(num_, d - log2den_);
    int64_t b = checked_shl(other.num_, d - other.log2den_);
    int64_t s;
    if (__builtin_add_overflow(a, b, &s)) {
        overflow();
    }
    return Dyadic(s, d);
}

Dyadic Dyadic::operator-(const Dyadic &other) const {
    return *this + (-other);
}

Dyadic Dyadic::operator*(const Dyadic &other) const {
    int64_t p;
    if (__builtin_mul_overflow(num_, other.num_, &p)) {
        overflow();
    }
    return Dyadic(p, log2den_ + other.log2den_);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic &other) const {
    Dyadic diff = *this - other;
    return diff.num_ <=> int64_t{0};
}

}  // namespace qecmap
