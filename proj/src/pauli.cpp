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

#include "phocs/pauli.hpp"

#include <cctype>

#include "phocs/error.hpp"

namespace phocs {

PauliOperator::PauliOperator(uint8_t phase, BitVector xs, BitVector zs)
    : s(phase & 3), x(std::move(xs)), z(std::move(zs)) {
    if (x.size() != z.size()) {
        fail(ErrorCode::DimensionMismatch, "x and z parts differ in length");
    }
}

PauliOperator PauliOperator::single(size_t n, size_t q, char kind) {
    if (q >= n) {
        fail(ErrorCode::QubitOutOfRange, "qubit " + std::to_string(q) + " on " + std::to_string(n) + " qubits");
    }
    PauliOperator p(n);
    switch (kind) {
        case 'X':
            p.x.set(q, true);
            break;
        case 'Z':
            p.z.set(q, true);
            break;
        case 'Y':
            p.x.set(q, true);
            p.z.set(q, true);
            p.s = 1;
            break;
        case 'I':
            break;
        default:
            fail(ErrorCode::FormatError, std::string("unknown Pauli factor '") + kind + "'");
    }
    return p;
}

PauliOperator PauliOperator::parse(std::string_view text, size_t n) {
    size_t pos = 0;
    int phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') {
            phase = 2;
        }
        ++pos;
        if (pos < text.size() && text[pos] == 'i') {
            phase += 1;
            ++pos;
        }
    }
    PauliOperator result(n);
    if (text.substr(pos) == "I") {
        result.s = phase & 3;
        return result;
    }
    bool first = true;
    while (pos < text.size()) {
        if (!first) {
            if (text[pos] != '*') {
                fail(ErrorCode::FormatError, "expected '*' in Pauli string '" + std::string(text) + "'");
            }
            ++pos;
        }
        first = false;
        if (pos >= text.size()) {
            fail(ErrorCode::FormatError, "dangling '*' in Pauli string '" + std::string(text) + "'");
        }
        char kind = text[pos++];
        if (kind != 'X' && kind != 'Y' && kind != 'Z') {
            fail(ErrorCode::FormatError, "bad Pauli factor in '" + std::string(text) + "'");
        }
        size_t start = pos;
        size_t q = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            q = q * 10 + static_cast<size_t>(text[pos] - '0');
            ++pos;
        }
        if (start == pos) {
            fail(ErrorCode::FormatError, "missing qubit index in '" + std::string(text) + "'");
        }
        result = mul(result, single(n, q, kind));
    }
    if (first) {
        fail(ErrorCode::FormatError, "empty Pauli string");
    }
    result.s = (result.s + phase) & 3;
    return result;
}

bool PauliOperator::is_hermitian() const {
    return ((s + (dot(x, z) ? 1 : 0)) & 1) == 0;
}

BitVector PauliOperator::support() const {
    BitVector v = x;
    for (size_t q = 0; q < z.size(); ++q) {
        if (z.get(q)) {
            v.set(q, true);
        }
    }
    return v;
}

char PauliOperator::kind(size_t q) const {
    bool a = x.get(q);
    bool b = z.get(q);
    return a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
}

std::string PauliOperator::to_string() const {
    // X Z = -i Y, so each Y factor carries one power of i.
    int phase = (s - static_cast<int>((x & z).popcount())) & 3;
    static const char *prefix[4] = {"+", "+i", "-", "-i"};
    std::string out = prefix[phase];
    bool any = false;
    for (size_t q = 0; q < x.size(); ++q) {
        char k = kind(q);
        if (k == 'I') {
            continue;
        }
        if (any) {
            out += '*';
        }
        out += k;
        out += std::to_string(q);
        any = true;
    }
    if (!any) {
        out += 'I';
    }
    return out;
}

PauliOperator mul(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        fail(ErrorCode::DimensionMismatch, "product of Paulis on " + std::to_string(a.num_qubits()) + " and " +
                                               std::to_string(b.num_qubits()) + " qubits");
    }
    int phase = a.s + b.s + (dot(a.z, b.x) ? 2 : 0);
    return PauliOperator(static_cast<uint8_t>(phase & 3), a.x ^ b.x, a.z ^ b.z);
}

bool comm(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        fail(ErrorCode::DimensionMismatch, "commutator of Paulis on different qubit counts");
    }
    return dot(a.x, b.z) != dot(a.z, b.x);
}

PauliOperator scaled(PauliOperator p, int k) {
    p.s = static_cast<uint8_t>((p.s + k) & 3);
    return p;
}

PauliOperator adjoint(const PauliOperator &p) {
    // (X^x Z^z)^dagger = Z^z X^x = (-1)^<x,z> X^x Z^z.
    int phase = -static_cast<int>(p.s) + (dot(p.x, p.z) ? 2 : 0);
    return PauliOperator(static_cast<uint8_t>(phase & 3), p.x, p.z);
}

PauliOperator cpauli_conjugate(const ControlledPauli &g, const PauliOperator &q) {
    PauliOperator out = q;
    if (comm(g.p2, q)) {
        out = mul(g.p1, out);
    }
    if (comm(g.p1, q)) {
        out = mul(out, g.p2);
    }
    return out;
}

int hermitian_sign_bit(const PauliOperator &p) {
    if (!p.is_hermitian()) {
        fail(ErrorCode::NonHermitian, "operator " + p.to_string() + " is not Hermitian");
    }
    int phase = (p.s - static_cast<int>((p.x & p.z).popcount())) & 3;
    return phase == 2 ? 1 : 0;
}

}  // namespace phocs
