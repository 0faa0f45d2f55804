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

#include "phocs/exact.hpp"

namespace phocs {

namespace {

using Coeffs = std::array<int64_t, 4>;

Coeffs mul_sqrt2(const Coeffs &c) {
    // sqrt2 = w - w^3.
    return {c[1] - c[3], c[0] + c[2], c[1] + c[3], c[2] - c[0]};
}

Coeffs rotate(const Coeffs &c, int m) {
    Coeffs r = c;
    m &= 7;
    for (int t = 0; t < m; ++t) {
        r = {-r[3], r[0], r[1], r[2]};
    }
    return r;
}

}  // namespace

ExactScalar::ExactScalar(int64_t integer) {
    c_[0] = integer;
}

ExactScalar ExactScalar::omega_power(int m) {
    ExactScalar r(1);
    r.c_ = rotate(r.c_, m);
    return r;
}

ExactScalar ExactScalar::inv_sqrt2_power(int k) {
    ExactScalar r(1);
    r.k_ = k;
    r.canonicalize();
    return r;
}

ExactScalar ExactScalar::gaussian(int64_t a, int64_t b, int k) {
    ExactScalar r;
    r.c_ = {a, 0, b, 0};
    r.k_ = k;
    r.canonicalize();
    return r;
}

void ExactScalar::canonicalize() {
    if (is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ > 0) {
        Coeffs y = mul_sqrt2(c_);
        if ((y[0] | y[1] | y[2] | y[3]) & 1) {
            break;
        }
        c_ = {y[0] / 2, y[1] / 2, y[2] / 2, y[3] / 2};
        --k_;
    }
}

ExactScalar ExactScalar::operator+(const ExactScalar &o) const {
    Coeffs a = c_;
    Coeffs b = o.c_;
    int k = k_;
    for (int t = k_; t < o.k_; ++t) {
        a = mul_sqrt2(a);
        k = o.k_;
    }
    for (int t = o.k_; t < k_; ++t) {
        b = mul_sqrt2(b);
    }
    ExactScalar r;
    for (int j = 0; j < 4; ++j) {
        r.c_[j] = a[j] + b[j];
    }
    r.k_ = k;
    r.canonicalize();
    return r;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    for (auto &v : r.c_) {
        v = -v;
    }
    return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar &o) const {
    return *this + (-o);
}

ExactScalar ExactScalar::operator*(const ExactScalar &o) const {
    std::array<int64_t, 7> prod{};
    for (int j = 0; j < 4; ++j) {
        if (c_[j] == 0) {
            continue;
        }
        for (int l = 0; l < 4; ++l) {
            prod[j + l] += c_[j] * o.c_[l];
        }
    }
    ExactScalar r;
    for (int j = 0; j < 4; ++j) {
        r.c_[j] = prod[j] - (j + 4 < 7 ? prod[j + 4] : 0);
    }
    r.k_ = k_ + o.k_;
    r.canonicalize();
    return r;
}

ExactScalar ExactScalar::conj() const {
    ExactScalar r;
    r.c_ = {c_[0], -c_[3], -c_[2], -c_[1]};
    r.k_ = k_;
    return r;
}

ExactScalar ExactScalar::norm2() const {
    return *this * conj();
}

ExactScalar ExactScalar::times_omega(int m) const {
    ExactScalar r = *this;
    r.c_ = rotate(c_, m);
    return r;
}

ExactScalar ExactScalar::times_sqrt2() const {
    ExactScalar r = *this;
    r.c_ = mul_sqrt2(c_);
    r.canonicalize();
    return r;
}

ExactScalar ExactScalar::div_sqrt2() const {
    ExactScalar r = *this;
    r.k_ += 1;
    r.canonicalize();
    return r;
}

int ExactScalar::omega_log() const {
    for (int m = 0; m < 8; ++m) {
        if (*this == omega_power(m)) {
            return m;
        }
    }
    return -1;
}

std::string ExactScalar::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string s;
    static const char *basis[4] = {"", "w", "w^2", "w^3"};
    for (int j = 0; j < 4; ++j) {
        if (c_[j] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += c_[j] > 0 ? " + " : " - ";
        } else if (c_[j] < 0) {
            s += "-";
        }
        int64_t mag = c_[j] < 0 ? -c_[j] : c_[j];
        if (j == 0 || mag != 1) {
            s += std::to_string(mag);
        }
        s += basis[j];
    }
    if (k_ > 0) {
        s = "(" + s + ")/sqrt2^" + std::to_string(k_);
    }
    return s;
}

}  // namespace phocs
