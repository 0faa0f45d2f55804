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

#include "phocs/dense.hpp"

#include <bit>

#include "phocs/error.hpp"

namespace phocs {

namespace {

uint64_t mask_of(const BitVector &v) {
    return v.to_uint64();
}

void check_qubit(const DenseState &st, size_t q) {
    if (q >= st.n) {
        fail(ErrorCode::QubitOutOfRange, "qubit " + std::to_string(q) + " on a " + std::to_string(st.n) + "-qubit state");
    }
}

void check_size(size_t n) {
    if (n > kDenseMaxQubits) {
        fail(ErrorCode::TooManyQubits, std::to_string(n) + " qubits exceeds the dense limit of " +
                                           std::to_string(kDenseMaxQubits));
    }
}

}  // namespace

DenseState::DenseState(size_t qubits) : n(qubits) {
    check_size(qubits);
    amp.assign(size_t{1} << qubits, ExactScalar(0));
    amp[0] = ExactScalar(1);
}

DenseState DenseState::basis(size_t qubits, uint64_t index) {
    DenseState st(qubits);
    st.amp[0] = ExactScalar(0);
    st.amp[index] = ExactScalar(1);
    return st;
}

ExactScalar DenseState::norm2() const {
    ExactScalar total(0);
    for (const auto &a : amp) {
        if (!a.is_zero()) {
            total += a.norm2();
        }
    }
    return total;
}

std::string DenseState::to_string() const {
    std::string out;
    for (size_t y = 0; y < amp.size(); ++y) {
        if (amp[y].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        std::string bits;
        for (size_t q = 0; q < n; ++q) {
            bits += ((y >> q) & 1) ? '1' : '0';
        }
        out += amp[y].to_string() + "|" + bits + ">";
    }
    return out.empty() ? "0" : out;
}

DenseMatrix::DenseMatrix(size_t qubits) : n(qubits), dim(size_t{1} << qubits) {
    check_size(qubits);
    a.assign(dim * dim, ExactScalar(0));
}

DenseMatrix DenseMatrix::identity(size_t qubits) {
    DenseMatrix m(qubits);
    for (size_t j = 0; j < m.dim; ++j) {
        m.at(j, j) = ExactScalar(1);
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &other) const {
    if (n != other.n) {
        fail(ErrorCode::DimensionMismatch, "dense product of mismatched sizes");
    }
    DenseMatrix r(n);
    for (size_t i = 0; i < dim; ++i) {
        for (size_t k = 0; k < dim; ++k) {
            const ExactScalar &x = at(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (size_t j = 0; j < dim; ++j) {
                const ExactScalar &y = other.at(k, j);
                if (!y.is_zero()) {
                    r.at(i, j) += x * y;
                }
            }
        }
    }
    return r;
}

DenseState DenseMatrix::operator*(const DenseState &v) const {
    if (n != v.n) {
        fail(ErrorCode::DimensionMismatch, "dense matrix-state product of mismatched sizes");
    }
    DenseState r(n);
    r.amp[0] = ExactScalar(0);
    for (size_t i = 0; i < dim; ++i) {
        for (size_t k = 0; k < dim; ++k) {
            if (!at(i, k).is_zero() && !v.amp[k].is_zero()) {
                r.amp[i] += at(i, k) * v.amp[k];
            }
        }
    }
    return r;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix r(n);
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < dim; ++j) {
            r.at(j, i) = at(i, j).conj();
        }
    }
    return r;
}

DenseMatrix DenseMatrix::scaled(const ExactScalar &k) const {
    DenseMatrix r = *this;
    for (auto &x : r.a) {
        x = x * k;
    }
    return r;
}

bool DenseMatrix::is_unitary() const {
    return adjoint() * (*this) == identity(n);
}

DenseState DenseMatrix::column(size_t c) const {
    DenseState st(n);
    for (size_t r = 0; r < dim; ++r) {
        st.amp[r] = at(r, c);
    }
    return st;
}

void apply_pauli(DenseState &st, const PauliOperator &p) {
    if (p.num_qubits() != st.n) {
        fail(ErrorCode::DimensionMismatch, "Pauli on " + std::to_string(p.num_qubits()) + " qubits applied to " +
                                               std::to_string(st.n) + "-qubit state");
    }
    uint64_t xm = mask_of(p.x);
    uint64_t zm = mask_of(p.z);
    std::vector<ExactScalar> out(st.amp.size());
    for (uint64_t y = 0; y < st.amp.size(); ++y) {
        int phase = 2 * p.s + ((std::popcount(zm & y) & 1) ? 4 : 0);
        out[y ^ xm] = st.amp[y].times_omega(phase);
    }
    st.amp = std::move(out);
}

void apply_exponent(DenseState &st, int sign, const PauliOperator &p) {
    if (!p.is_hermitian()) {
        fail(ErrorCode::NonHermitian, "exponent of non-Hermitian " + p.to_string());
    }
    DenseState moved = st;
    apply_pauli(moved, p);
    int rot = sign > 0 ? 2 : 6;
    for (size_t y = 0; y < st.amp.size(); ++y) {
        st.amp[y] = (st.amp[y] + moved.amp[y].times_omega(rot)).div_sqrt2();
    }
}

void apply_h(DenseState &st, size_t q) {
    check_qubit(st, q);
    uint64_t bit = uint64_t{1} << q;
    for (uint64_t y = 0; y < st.amp.size(); ++y) {
        if (y & bit) {
            continue;
        }
        ExactScalar a0 = st.amp[y];
        ExactScalar a1 = st.amp[y | bit];
        st.amp[y] = (a0 + a1).div_sqrt2();
        st.amp[y | bit] = (a0 - a1).div_sqrt2();
    }
}

void apply_htilde(DenseState &st, size_t q) {
    apply_h(st, q);
    for (auto &a : st.amp) {
        a = a.times_omega(1);
    }
}

void apply_s(DenseState &st, size_t q, bool dagger) {
    check_qubit(st, q);
    uint64_t bit = uint64_t{1} << q;
    for (uint64_t y = 0; y < st.amp.size(); ++y) {
        if (y & bit) {
            st.amp[y] = st.amp[y].times_omega(dagger ? 6 : 2);
        }
    }
}

void apply_cx(DenseState &st, size_t control, size_t target) {
    check_qubit(st, control);
    check_qubit(st, target);
    uint64_t c = uint64_t{1} << control;
    uint64_t t = uint64_t{1} << target;
    for (uint64_t y = 0; y < st.amp.size(); ++y) {
        if ((y & c) && !(y & t)) {
            std::swap(st.amp[y], st.amp[y | t]);
        }
    }
}

void apply_cz(DenseState &st, size_t a, size_t b) {
    check_qubit(st, a);
    check_qubit(st, b);
    uint64_t m = (uint64_t{1} << a) | (uint64_t{1} << b);
    for (uint64_t y = 0; y < st.amp.size(); ++y) {
        if ((y & m) == m) {
            st.amp[y] = -st.amp[y];
        }
    }
}

void apply_swap(DenseState &st, size_t a, size_t b) {
    check_qubit(st, a);
    check_qubit(st, b);
    uint64_t ba = uint64_t{1} << a;
    uint64_t bb = uint64_t{1} << b;
    for (uint64_t y = 0; y < st.amp.size(); ++y) {
        if ((y & ba) && !(y & bb)) {
            std::swap(st.amp[y], st.amp[(y ^ ba) | bb]);
        }
    }
}

void apply_named_gate(DenseState &st, const std::string &name, const std::vector<size_t> &qubits) {
    auto arity = [&](size_t k) {
        if (qubits.size() != k) {
            fail(ErrorCode::UnknownGate, name + " takes " + std::to_string(k) + " qubits");
        }
        for (size_t q : qubits) {
            check_qubit(st, q);
        }
        if (k == 2 && qubits[0] == qubits[1]) {
            fail(ErrorCode::QubitOutOfRange, name + " on a repeated qubit");
        }
    };
    if (name == "H") {
        arity(1);
        apply_h(st, qubits[0]);
    } else if (name == "HTILDE") {
        arity(1);
        apply_htilde(st, qubits[0]);
    } else if (name == "S" || name == "SDG") {
        arity(1);
        apply_s(st, qubits[0], name == "SDG");
    } else if (name == "X" || name == "Y" || name == "Z") {
        arity(1);
        apply_pauli(st, PauliOperator::single(st.n, qubits[0], name[0]));
    } else if (name == "CX") {
        arity(2);
        apply_cx(st, qubits[0], qubits[1]);
    } else if (name == "CZ") {
        arity(2);
        apply_cz(st, qubits[0], qubits[1]);
    } else if (name == "SWAP") {
        arity(2);
        apply_swap(st, qubits[0], qubits[1]);
    } else {
        fail(ErrorCode::UnknownGate, "unknown gate '" + name + "'");
    }
}

void apply_controlled_pauli(DenseState &st, const ControlledPauli &g) {
    // (I+P1)/2 psi + P2 (I-P1)/2 psi.
    DenseState plus = st;
    apply_projector(plus, g.p1, false);
    DenseState minus = st;
    apply_projector(minus, g.p1, true);
    apply_pauli(minus, g.p2);
    for (size_t y = 0; y < st.amp.size(); ++y) {
        st.amp[y] = plus.amp[y] + minus.amp[y];
    }
}

void apply_projector(DenseState &st, const PauliOperator &p, bool outcome) {
    DenseState moved = st;
    apply_pauli(moved, p);
    ExactScalar half = ExactScalar::inv_sqrt2_power(2);
    for (size_t y = 0; y < st.amp.size(); ++y) {
        ExactScalar sum = outcome ? st.amp[y] - moved.amp[y] : st.amp[y] + moved.amp[y];
        st.amp[y] = sum * half;
    }
}

DenseMatrix gate_matrix(const std::string &name, const std::vector<size_t> &qubits, size_t n) {
    return matrix_of(n, [&](DenseState &st) { apply_named_gate(st, name, qubits); });
}

DenseMatrix pauli_matrix(const PauliOperator &p) {
    return matrix_of(p.num_qubits(), [&](DenseState &st) { apply_pauli(st, p); });
}

DenseMatrix exponent_matrix(int sign, const PauliOperator &p) {
    return matrix_of(p.num_qubits(), [&](DenseState &st) { apply_exponent(st, sign, p); });
}

DenseMatrix controlled_pauli_matrix(const ControlledPauli &g) {
    return matrix_of(g.p1.num_qubits(), [&](DenseState &st) { apply_controlled_pauli(st, g); });
}

std::optional<std::pair<ExactScalar, PauliOperator>> as_scaled_pauli(const DenseMatrix &m) {
    size_t x = m.dim;
    for (size_t r = 0; r < m.dim; ++r) {
        if (!m.at(r, 0).is_zero()) {
            if (x != m.dim) {
                return std::nullopt;
            }
            x = r;
        }
    }
    if (x == m.dim) {
        return std::nullopt;
    }
    ExactScalar k = m.at(x, 0);
    PauliOperator p(m.n);
    p.x = BitVector::from_uint64(m.n, x);
    for (size_t q = 0; q < m.n; ++q) {
        size_t col = size_t{1} << q;
        const ExactScalar &v = m.at(x ^ col, col);
        if (v == -k) {
            p.z.set(q, true);
        } else if (!(v == k)) {
            return std::nullopt;
        }
    }
    if (!(pauli_matrix(p).scaled(k) == m)) {
        return std::nullopt;
    }
    return std::make_pair(k, p);
}

bool states_equal_exact(const DenseState &u, const DenseState &v) {
    if (u.n != v.n) {
        fail(ErrorCode::DimensionMismatch, "comparing states on " + std::to_string(u.n) + " and " +
                                               std::to_string(v.n) + " qubits");
    }
    return u.amp == v.amp;
}

namespace {

template <typename Vec>
std::optional<int> ratio_of(const Vec &u, const Vec &v) {
    if (u.size() != v.size()) {
        return std::nullopt;
    }
    for (int k = 0; k < 8; ++k) {
        bool ok = true;
        for (size_t j = 0; j < u.size() && ok; ++j) {
            ok = u[j] == v[j].times_omega(k);
        }
        if (ok) {
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<int> omega_ratio(const DenseState &u, const DenseState &v) {
    return ratio_of(u.amp, v.amp);
}

std::optional<int> omega_ratio(const DenseMatrix &u, const DenseMatrix &v) {
    return ratio_of(u.a, v.a);
}

DenseState tensor(const DenseState &a, const DenseState &b) {
    DenseState r(a.n + b.n);
    r.amp[0] = ExactScalar(0);
    for (size_t i = 0; i < a.amp.size(); ++i) {
        if (a.amp[i].is_zero()) {
            continue;
        }
        for (size_t j = 0; j < b.amp.size(); ++j) {
            r.amp[i | (j << a.n)] = a.amp[i] * b.amp[j];
        }
    }
    return r;
}

}  // namespace phocs
