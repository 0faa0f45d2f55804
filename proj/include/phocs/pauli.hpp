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

#include <cstdint>
#include <string>
#include <string_view>

#include "phocs/f2.hpp"

namespace phocs {

/// i^s X^x Z^z on n qubits.
struct PauliOperator {
    uint8_t s = 0;
    BitVector x;
    BitVector z;

    PauliOperator() = default;
    explicit PauliOperator(size_t n) : x(n), z(n) {
    }
    PauliOperator(uint8_t phase, BitVector xs, BitVector zs);

    static PauliOperator identity(size_t n) {
        return PauliOperator(n);
    }
    /// Single-qubit factor 'X', 'Y' or 'Z' at qubit q (Y = i X Z).
    static PauliOperator single(size_t n, size_t q, char kind);
    /// Parses `-Y0*Y2`, `+iX1`, `+I`. Qubit indices must be < n.
    static PauliOperator parse(std::string_view text, size_t n);

    size_t num_qubits() const noexcept {
        return x.size();
    }
    bool is_identity() const noexcept {
        return x.is_zero() && z.is_zero();
    }
    bool is_hermitian() const;
    /// Qubits where the operator acts nontrivially.
    BitVector support() const;
    /// Factor at qubit q: 'I', 'X', 'Y' or 'Z'.
    char kind(size_t q) const;

    bool operator==(const PauliOperator &other) const = default;
    /// Canonical text, e.g. `-Y0*Y2`.
    std::string to_string() const;
};

PauliOperator mul(const PauliOperator &a, const PauliOperator &b);
bool comm(const PauliOperator &a, const PauliOperator &b);
/// Multiplies by i^k.
PauliOperator scaled(PauliOperator p, int k);
/// Adjoint: (i^s X^x Z^z)^dagger.
PauliOperator adjoint(const PauliOperator &p);

/// Lambda(p1, p2) = (I+p1)/2 + (I-p1)/2 p2.
struct ControlledPauli {
    PauliOperator p1;
    PauliOperator p2;
};

/// Lambda(p1,p2) q Lambda(p1,p2) = p1^[p2,q] q p2^[p1,q].
PauliOperator cpauli_conjugate(const ControlledPauli &g, const PauliOperator &q);

/// e^{sign * i pi/4 * p}.
struct PauliExponent {
    int sign = 1;
    PauliOperator p;
};

/// Writes a Hermitian Pauli p as (-1)^sigma times the product of its X/Y/Z factors.
int hermitian_sign_bit(const PauliOperator &p);

}  // namespace phocs
