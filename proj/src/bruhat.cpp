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

#include <array>

#include "phocs/error.hpp"
#include "phocs/phased_clifford.hpp"

namespace phocs {

namespace {

void set_pauli(PhasedBruhat &c, PauliOperator p) {
    c.add_phase(2 * p.s);
    p.s = 0;
    c.pauli = std::move(p);
}

void check_dims(const PhasedBruhat &c, const PauliOperator &p) {
    if (c.num_qubits() != p.num_qubits()) {
        fail(ErrorCode::DimensionMismatch, "Pauli on " + std::to_string(p.num_qubits()) +
                                               " qubits against a Clifford on " + std::to_string(c.num_qubits()));
    }
}

}  // namespace

PauliOperator hadamard_conjugate(PauliOperator p, const BitVector &mask) {
    for (size_t q : mask.ones()) {
        bool a = p.x.get(q);
        bool b = p.z.get(q);
        if (a && b) {
            p.s = static_cast<uint8_t>((p.s + 2) & 3);
        }
        p.x.set(q, b);
        p.z.set(q, a);
    }
    return p;
}

PhasedBruhat PhasedBruhat::identity(size_t n) {
    PhasedBruhat c;
    c.up = PhaseCssTableau(n);
    c.hset = BitVector(n);
    c.pauli = PauliOperator(n);
    c.vp = PhaseCssTableau(n);
    return c;
}

bool PhasedBruhat::operator==(const PhasedBruhat &other) const {
    return m == other.m && up == other.up && hset == other.hset && pauli == other.pauli && vp == other.vp;
}

void PhasedBruhat::apply(DenseState &st) const {
    vp.apply(st);
    apply_pauli(st, pauli);
    for (size_t q : hset.ones()) {
        apply_htilde(st, q);
    }
    up.apply(st);
    for (auto &a : st.amp) {
        a = a.times_omega(m);
    }
}

DenseMatrix PhasedBruhat::dense() const {
    return matrix_of(num_qubits(), [&](DenseState &st) { apply(st); });
}

PhasedBruhat insert_qubit(const PhasedBruhat &c, size_t pos) {
    if (pos > c.num_qubits()) {
        fail(ErrorCode::PositionOutOfRange, "position " + std::to_string(pos) + " on " +
                                                std::to_string(c.num_qubits()) + " qubits");
    }
    PhasedBruhat r = c;
    r.up = c.up.insert_qubit(pos);
    r.vp = c.vp.insert_qubit(pos);
    r.hset.insert(pos, false);
    r.pauli.x.insert(pos, false);
    r.pauli.z.insert(pos, false);
    return r;
}

PhasedBruhat permute_qubits(const PhasedBruhat &c, const std::vector<size_t> &order) {
    PhasedBruhat r;
    r.m = c.m;
    r.up = c.up.permuted(order);
    r.vp = c.vp.permuted(order);
    size_t n = order.size();
    r.hset = BitVector(n);
    r.pauli = PauliOperator(n);
    for (size_t k = 0; k < n; ++k) {
        r.hset.set(k, c.hset.get(order[k]));
        r.pauli.x.set(k, c.pauli.x.get(order[k]));
        r.pauli.z.set(k, c.pauli.z.get(order[k]));
    }
    return r;
}

PhasedBruhat tensor(const PhasedBruhat &a, const PhasedBruhat &b) {
    PhasedBruhat r;
    r.m = (a.m + b.m) & 7;
    r.up = a.up.direct_sum(b.up);
    r.vp = a.vp.direct_sum(b.vp);
    r.hset = a.hset.concat(b.hset);
    r.pauli = PauliOperator(0, a.pauli.x.concat(b.pauli.x), a.pauli.z.concat(b.pauli.z));
    return r;
}

PhasedBruhat left_mul_pauli(const PhasedBruhat &c, const PauliOperator &q) {
    check_dims(c, q);
    PauliOperator moved = hadamard_conjugate(c.up.conjugate_inverse(q), c.hset);
    PhasedBruhat r = c;
    set_pauli(r, mul(moved, c.pauli));
    return r;
}

PauliOperator preimage(const PhasedBruhat &c, const PauliOperator &p) {
    check_dims(c, p);
    PauliOperator t = hadamard_conjugate(c.up.conjugate_inverse(p), c.hset);
    if (comm(c.pauli, t)) {
        t = scaled(t, 2);
    }
    return c.vp.conjugate_inverse(t);
}

PauliOperator image(const PhasedBruhat &c, const PauliOperator &p) {
    check_dims(c, p);
    PauliOperator t = c.vp.conjugate(p);
    if (comm(c.pauli, t)) {
        t = scaled(t, 2);
    }
    return c.up.conjugate(hadamard_conjugate(t, c.hset));
}

ExactScalar basis_amplitude(const PhasedBruhat &c, const BitVector &b_in, const BitVector &b_out) {
    size_t n = c.num_qubits();
    if (b_in.size() != n || b_out.size() != n) {
        fail(ErrorCode::DimensionMismatch, "basis vectors do not match the Clifford size");
    }
    BitVector y = c.vp.f() * b_in;
    int w8 = c.m + 2 * c.vp.phase_at(b_in);
    if (dot(c.pauli.z, y)) {
        w8 += 4;
    }
    BitVector w = y ^ c.pauli.x;
    BitVector u = c.up.f_inverse() * b_out;
    w8 += 2 * c.up.phase_at(u);
    int hadamards = 0;
    for (size_t q = 0; q < n; ++q) {
        if (c.hset.get(q)) {
            ++hadamards;
            w8 += 1;
            if (u.get(q) && w.get(q)) {
                w8 += 4;
            }
        } else if (u.get(q) != w.get(q)) {
            return ExactScalar(0);
        }
    }
    return ExactScalar::omega_power(w8) * ExactScalar::inv_sqrt2_power(hadamards);
}

BitVector support_point(const PhasedBruhat &c, const BitVector &b) {
    return c.up.f() * ((c.vp.f() * b) ^ c.pauli.x);
}

bool states_equal(const BasisImageState &u, const BasisImageState &v) {
    size_t n = u.c.num_qubits();
    if (v.c.num_qubits() != n || u.b.size() != n || v.b.size() != n) {
        fail(ErrorCode::DimensionMismatch, "comparing states of different sizes");
    }
    for (size_t j = 0; j < n; ++j) {
        PauliOperator stab = image(u.c, PauliOperator::single(n, j, 'Z'));
        if (u.b.get(j)) {
            stab = scaled(stab, 2);
        }
        PauliOperator back = preimage(v.c, stab);
        if (!back.x.is_zero()) {
            return false;
        }
        int eig = back.s + (dot(back.z, v.b) ? 2 : 0);
        if ((eig & 3) != 0) {
            return false;
        }
    }
    BitVector y = support_point(u.c, u.b);
    return basis_amplitude(u.c, u.b, y) == basis_amplitude(v.c, v.b, y);
}

DenseState dense_state(const BasisImageState &st) {
    DenseState d = DenseState::basis(st.c.num_qubits(), st.b.to_uint64());
    st.c.apply(d);
    return d;
}

BitMatrix CssGate::matrix() const {
    return BitMatrix::identity(a.size()) + BitMatrix::outer(a, b);
}

ControlledPauli CssGate::as_controlled_pauli() const {
    size_t n = a.size();
    return ControlledPauli{PauliOperator(0, a, BitVector(n)), PauliOperator(0, BitVector(n), b)};
}

PauliOperator css_conjugate(const BitMatrix &g, const PauliOperator &p) {
    return PauliOperator(p.s, g * p.x, inverse_transpose(g) * p.z);
}

bool is_orbit_canonical(const PauliOperator &p) {
    if (!p.is_hermitian()) {
        return false;
    }
    BitVector sup = p.support();
    size_t w = sup.popcount();
    if (w <= 1) {
        return true;
    }
    if (w > 2) {
        return false;
    }
    for (size_t q : sup.ones()) {
        if (p.kind(q) != 'Y') {
            return false;
        }
    }
    return true;
}

CssOrbit css_orbit(const PauliOperator &p) {
    if (!p.is_hermitian()) {
        fail(ErrorCode::NonHermitian, "orbit of non-Hermitian " + p.to_string());
    }
    size_t n = p.num_qubits();
    const BitVector &x = p.x;
    const BitVector &z = p.z;
    auto e = [n](size_t j) { return BitVector::unit(n, j); };
    CssOrbit out;
    if (x.is_zero() && z.is_zero()) {
        // empty circuit
    } else if (x.is_zero()) {
        size_t j = z.first_one();
        out.circuit.push_back({e(j), z ^ e(j)});
    } else if (z.is_zero()) {
        size_t j = x.first_one();
        out.circuit.push_back({x ^ e(j), e(j)});
    } else {
        BitVector common = x & z;
        if (common.popcount() & 1) {
            size_t j = common.first_one();
            out.circuit.push_back({x ^ e(j), e(j)});
            out.circuit.push_back({e(j), z ^ e(j)});
        } else if (!common.is_zero()) {
            std::vector<size_t> idx = common.ones();
            size_t j = idx[0];
            size_t k = idx[1];
            out.circuit.push_back({x ^ e(j), e(j)});
            out.circuit.push_back({e(k), z ^ e(k)});
        } else {
            // Disjoint supports: no common index exists.
            size_t j = x.first_one();
            size_t k = z.first_one();
            out.circuit.push_back({x ^ e(j), e(j)});
            out.circuit.push_back({e(k), z ^ e(j) ^ e(k)});
        }
    }
    PauliOperator cur = p;
    for (const auto &g : out.circuit) {
        if (dot(g.a, g.b)) {
            fail(ErrorCode::DecompositionFailure, "orbit produced a non-CSS gate for " + p.to_string());
        }
        cur = css_conjugate(g.matrix(), cur);
    }
    if (!is_orbit_canonical(cur)) {
        fail(ErrorCode::DecompositionFailure, "orbit of " + p.to_string() + " ended at " + cur.to_string());
    }
    out.canonical = cur;
    return out;
}

namespace {

struct CanonicalPart {
    int sign_bit = 0;
    std::string label;
    std::vector<size_t> qubits;
};

CanonicalPart describe(const PauliOperator &p, size_t first_slot) {
    CanonicalPart part;
    part.sign_bit = hermitian_sign_bit(p);
    part.qubits = p.support().ones();
    if (part.qubits.empty()) {
        part.label = "I";
    } else if (part.qubits.size() == 1) {
        part.label = std::string(1, p.kind(part.qubits[0])) + std::to_string(first_slot);
    } else {
        part.label = "Y" + std::to_string(first_slot) + "*Y" + std::to_string(first_slot + 1);
    }
    return part;
}

BitMatrix gate_product(const std::vector<CssGate> &circuit, size_t n) {
    BitMatrix g = BitMatrix::identity(n);
    for (const auto &gate : circuit) {
        g = gate.matrix() * g;
    }
    return g;
}

/// Places a four-slot entry onto qubits; slot k goes to slots[k] (npos when unused).
PhasedBruhat embed(const PhasedBruhat &entry, const std::array<size_t, 4> &slots, size_t n) {
    const size_t npos = static_cast<size_t>(-1);
    for (size_t a = 0; a < 4; ++a) {
        if (slots[a] != npos) {
            continue;
        }
        bool trivial = !entry.hset.get(a) && !entry.pauli.x.get(a) && !entry.pauli.z.get(a);
        for (const PhaseCssTableau *t : {&entry.up, &entry.vp}) {
            trivial = trivial && t->d()[a] == 0;
            for (size_t b = 0; b < 4; ++b) {
                trivial = trivial && t->f().get(a, b) == (a == b) && t->f().get(b, a) == (a == b) &&
                          !t->e().get(a, b);
            }
        }
        if (!trivial) {
            fail(ErrorCode::DecompositionFailure, "table entry acts on an unused slot");
        }
    }
    auto place = [&](const PhaseCssTableau &t) {
        BitMatrix f = BitMatrix::identity(n);
        BitMatrix e(n, n);
        std::vector<uint8_t> d(n, 0);
        for (size_t a = 0; a < 4; ++a) {
            if (slots[a] == npos) {
                continue;
            }
            d[slots[a]] = t.d()[a];
            for (size_t b = 0; b < 4; ++b) {
                if (slots[b] == npos) {
                    continue;
                }
                f.set(slots[a], slots[b], t.f().get(a, b));
                e.set(slots[a], slots[b], t.e().get(a, b));
            }
        }
        return PhaseCssTableau::from_parts(f, std::move(d), e);
    };
    PhasedBruhat r = PhasedBruhat::identity(n);
    r.m = entry.m;
    r.up = place(entry.up);
    r.vp = place(entry.vp);
    for (size_t a = 0; a < 4; ++a) {
        if (slots[a] == npos) {
            continue;
        }
        r.hset.set(slots[a], entry.hset.get(a));
        r.pauli.x.set(slots[a], entry.pauli.x.get(a));
        r.pauli.z.set(slots[a], entry.pauli.z.get(a));
    }
    return r;
}

}  // namespace

PhasedBruhat left_mul_exponent(const PhasedBruhat &c, int sign, const PauliOperator &q) {
    check_dims(c, q);
    if (!q.is_hermitian()) {
        fail(ErrorCode::NonHermitian, "exponent of non-Hermitian " + q.to_string());
    }
    if (q.is_identity()) {
        fail(ErrorCode::IdentityExponent, "exponent of a multiple of the identity");
    }
    sign = sign < 0 ? -1 : 1;
    size_t n = c.num_qubits();
    PhasedBruhat r = c;
    if (q.x.is_zero()) {
        // e^{theta i pi/4 Z^z}|x> = w^theta i^{-theta <z,x>}|x>.
        int theta = q.s == 2 ? -sign : sign;
        r.add_phase(theta);
        uint8_t delta = static_cast<uint8_t>((4 - theta) & 3);
        std::vector<uint8_t> d(n, 0);
        for (size_t j : q.z.ones()) {
            d[j] = delta;
        }
        BitMatrix e = BitMatrix::outer(q.z, q.z);
        r.up = PhaseCssTableau::diagonal(std::move(d), e).compose(c.up);
        return r;
    }

    PauliOperator qt = c.up.conjugate_inverse(q);
    BitVector not_h = c.hset;
    for (size_t j = 0; j < n; ++j) {
        not_h.flip(j);
    }
    BitVector xi = qt.x & not_h;
    BitVector zi = qt.z & not_h;
    BitVector xh = qt.x & c.hset;
    BitVector zh = qt.z & c.hset;
    int wi = static_cast<int>((xi & zi).popcount());
    int wh = static_cast<int>((xh & zh).popcount());
    PauliOperator qi(static_cast<uint8_t>(wi & 3), xi, zi);
    PauliOperator qh(static_cast<uint8_t>(wh & 3), xh, zh);
    int lambda = (qt.s - wi - wh) & 3;
    if (lambda == 2) {
        sign = -sign;
    }

    CssOrbit oi = css_orbit(qi);
    CssOrbit oh = css_orbit(qh);
    CanonicalPart pi = describe(oi.canonical, 0);
    CanonicalPart ph = describe(oh.canonical, 2);
    if (pi.sign_bit ^ ph.sign_bit) {
        sign = -sign;
    }

    BitMatrix gi = gate_product(oi.circuit, n);
    BitMatrix gh = gate_product(oh.circuit, n);
    BitMatrix g = gi * gh;
    BitMatrix g_sharp = gi * inverse_transpose(gh);
    r.up = c.up.compose(PhaseCssTableau::css(inverse(g)));
    PauliOperator moved = css_conjugate(g_sharp, c.pauli);
    r.vp = PhaseCssTableau::css(g_sharp).compose(c.vp);

    const size_t npos = static_cast<size_t>(-1);
    std::array<size_t, 4> slots{npos, npos, npos, npos};
    for (size_t k = 0; k < pi.qubits.size(); ++k) {
        slots[k] = pi.qubits[k];
    }
    for (size_t k = 0; k < ph.qubits.size(); ++k) {
        slots[2 + k] = ph.qubits[k];
    }
    TableKey key{sign, pi.label, ph.label};
    PhasedBruhat local = embed(shared_table().lookup(key), slots, n);

    r.add_phase(local.m);
    r.up = r.up.compose(local.up);
    BitVector hset = c.hset;
    for (size_t q2 : ph.qubits) {
        hset.set(q2, false);
    }
    for (size_t q2 : local.hset.ones()) {
        hset.set(q2, true);
    }
    r.hset = hset;
    set_pauli(r, mul(local.pauli, local.vp.conjugate(moved)));
    r.vp = local.vp.compose(r.vp);
    return r;
}

PhasedBruhat left_mul_exponent(const PhasedBruhat &c, const PauliExponent &e) {
    return left_mul_exponent(c, e.sign, e.p);
}

PhasedBruhat apply_gate(const PhasedBruhat &c, const std::string &name, const std::vector<size_t> &qubits) {
    size_t n = c.num_qubits();
    auto arity = [&](size_t k) {
        if (qubits.size() != k) {
            fail(ErrorCode::UnknownGate, name + " takes " + std::to_string(k) + " qubits");
        }
        for (size_t q : qubits) {
            if (q >= n) {
                fail(ErrorCode::QubitOutOfRange, "qubit " + std::to_string(q) + " on " + std::to_string(n));
            }
        }
        if (k == 2 && qubits[0] == qubits[1]) {
            fail(ErrorCode::QubitOutOfRange, name + " on a repeated qubit");
        }
    };
    auto pauli = [&](size_t q, char kind) { return PauliOperator::single(n, q, kind); };
    PhasedBruhat r = c;
    if (name == "X" || name == "Y" || name == "Z") {
        arity(1);
        return left_mul_pauli(c, pauli(qubits[0], name[0]));
    }
    if (name == "S" || name == "SDG") {
        // S = w e^{-i pi/4 Z}.
        arity(1);
        bool dag = name == "SDG";
        r = left_mul_exponent(r, dag ? 1 : -1, pauli(qubits[0], 'Z'));
        r.add_phase(dag ? -1 : 1);
        return r;
    }
    if (name == "H" || name == "HTILDE") {
        // H = e^{-i pi/4 Y} Z.
        arity(1);
        r = left_mul_pauli(r, pauli(qubits[0], 'Z'));
        r = left_mul_exponent(r, -1, pauli(qubits[0], 'Y'));
        if (name == "HTILDE") {
            r.add_phase(1);
        }
        return r;
    }
    if (name == "CZ" || name == "CX") {
        // CZ = w e^{-i pi/4 Z_a} e^{-i pi/4 Z_b} e^{i pi/4 Z_a Z_b}; CX conjugates b by H.
        arity(2);
        char tk = name == "CZ" ? 'Z' : 'X';
        PauliOperator za = pauli(qubits[0], 'Z');
        PauliOperator tb = pauli(qubits[1], tk);
        r = left_mul_exponent(r, 1, mul(za, tb));
        r = left_mul_exponent(r, -1, tb);
        r = left_mul_exponent(r, -1, za);
        r.add_phase(1);
        return r;
    }
    if (name == "SWAP") {
        arity(2);
        r = apply_gate(r, "CX", {qubits[0], qubits[1]});
        r = apply_gate(r, "CX", {qubits[1], qubits[0]});
        return apply_gate(r, "CX", {qubits[0], qubits[1]});
    }
    fail(ErrorCode::UnknownGate, "unknown gate '" + name + "'");
}

}  // namespace phocs
