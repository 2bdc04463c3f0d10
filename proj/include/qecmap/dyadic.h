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

#ifndef QECMAP_DYADIC_H
#define QECMAP_DYADIC_H

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qecmap {

/// Exact rational num / 2^log2den.
///
/// Kept normalized: log2den >= 0, and num is odd whenever log2den > 0. Zero is
/// stored as 0/2^0. Arithmetic throws std::overflow_error instead of wrapping.
class Dyadic {
   public:
    constexpr Dyadic() = default;
    constexpr Dyadic(int64_t integer) : num_(integer) {
    }
    Dyadic(int64_t num, int log2den);

    int64_t num() const {
        return num_;
    }
    int log2den() const {
        return log2den_;
    }
    bool is_zero() const {
        return num_ == 0;
    }

    double to_double() const;
    /// "3/2", "-1/2", "7".
    std::string str() const;

    Dyadic operator-() const;
    Dyadic operator+(const Dyadic &other) const;
    Dyadic operator-(const Dyadic &other) const;
    Dyadic operator*(const Dyadic &other) const;
    Dyadic &operator+=(const Dyadic &other) {
        return *this = *this + other;
    }
    Dyadic &operator*=(const Dyadic &other) {
        return *this = *this * other;
    }

    bool operator==(const Dyadic &other) const = default;
    std::strong_ordering operator<=>(const Dyadic &other) const;

   private:
    int64_t num_ = 0;
    int log2den_ = 0;
};

}  // namespace qecmap

#endif
