// Copyright 2026 The phocs Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace phocs {

/// Element of Z[i, 1/sqrt2], stored as (c0 + c1 w + c2 w^2 + c3 w^3) / sqrt2^k with w = e^{i pi/4}.
/// Always canonical: k is minimal, so equality is coefficient equality.
class ExactScalar {
   public:
    ExactScalar() = default;
    ExactScalar(int64_t integer);  // NOLINT(google-explicit-constructor)

    static ExactScalar omega_power(int m);
    static ExactScalar i_power(int k) {
        return omega_power(2 * k);
    }
    static ExactScalar inv_sqrt2_power(int k);
    /// (a + b i) / sqrt2^k.
    static ExactScalar gaussian(int64_t a, int64_t b, int k);

    ExactScalar operator+(const ExactScalar &o) const;
    ExactScalar operator-(const ExactScalar &o) const;
    ExactScalar operator-() const;
    ExactScalar operator*(const ExactScalar &o) const;
    ExactScalar &operator+=(const ExactScalar &o) {
        return *this = *this + o;
    }
    ExactScalar &operator*=(const ExactScalar &o) {
        return *this = *this * o;
    }
    bool operator==(const ExactScalar &o) const = default;

    ExactScalar conj() const;
    /// |x|^2.
    ExactScalar norm2() const;
    ExactScalar times_omega(int m) const;
    ExactScalar times_sqrt2() const;
    ExactScalar div_sqrt2() const;
    bool is_zero() const noexcept {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    /// m with value == w^m, or -1 when not a power of w.
    int omega_log() const;

    const std::array<int64_t, 4> &coefficients() const noexcept {
        return c_;
    }
    int sqrt2_exponent() const noexcept {
        return k_;
    }
    std::string to_string() const;

   private:
    void canonicalize();
    std::array<int64_t, 4> c_{0, 0, 0, 0};
    int k_ = 0;
};

}  // namespace phocs
