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

#include "phocs/simulator.hpp"

#include <algorithm>

#include "phocs/error.hpp"

namespace phocs {

namespace {

// w-exponent of a unit-modulus amplitude times sqrt2^k, where k is its sqrt2 exponent.
std::pair<int, int> polar(const ExactScalar &amp) {
    int k = amp.sqrt2_exponent();
    ExactScalar v = amp;
    for (int i = 0; i < k; ++i) {
        v = v.times_sqrt2();
    }
    int m = v.omega_log();
    if (m < 0) {
        fail(ErrorCode::DecompositionFailure, "amplitude " + amp.to_string() + " is not a scaled power of w");
    }
    return {m, k};
}

class Simulation {
   public:
    explicit Simulation(const Circuit &circ) : circ_(circ) {
        size_t na = circ.num_angles();
        g_.n_angle = na;
        g_.p = BitVector(na);
        g_.s = BitVector(na);
        g_.b = BitMatrix(na, na);
        g_.a = BitMatrix(0, na);
        g_.m = BitMatrix(0, na);
        g_.v0 = BitVector(0);
    }

    GeneralForm run() {
        for (const auto &ins : circ_.ops) {
            step(ins);
        }
        return finish();
    }

   private:
    size_t n() const {
        return g_.num_qubits();
    }

    size_t slot(size_t label) const {
        for (size_t k = 0; k < labels_.size(); ++k) {
            if (labels_[k] == static_cast<long>(label)) {
                return k;
            }
        }
        fail(ErrorCode::QubitOutOfRange, "qubit " + std::to_string(label) + " is not allocated");
    }

    PauliOperator local(const PauliOperator &p) const {
        PauliOperator q(n());
        q.s = p.s;
        for (size_t l : p.support().ones()) {
            size_t k = slot(l);
            q.x.set(k, p.x.get(l));
            q.z.set(k, p.z.get(l));
        }
        return q;
    }

    size_t add_random() {
        size_t k = g_.num_params();
        g_.p.push_back(false);
        g_.s.push_back(false);
        g_.b.insert_row(k);
        g_.b.insert_col(k);
        g_.a.insert_col(k);
        g_.m.insert_col(k);
        return k;
    }

    void add_outcome(const BitVector &row, bool v0, bool half) {
        g_.m.append_row(row);
        g_.v0.push_back(v0);
        g_.half.push_back(half);
    }

    // P^{k0 + <a,r>}
    void conditional_pauli(const PauliOperator &p, bool k0, const BitVector &a) {
        if (k0) {
            g_.c = left_mul_pauli(g_.c, p);
        }
        if (a.is_zero()) {
            return;
        }
        PauliOperator q = preimage(g_.c, p);
        BitMatrix a_old = g_.a;
        g_.b += BitMatrix::outer(a, a_old.left_mul(q.z));
        g_.a += BitMatrix::outer(q.x, a);
        if (q.s & 1) {
            g_.b += BitMatrix::outer(g_.p, a);
            g_.p ^= a;
        }
#ifndef PHOCS_FAULT_INJECTION
        if (q.s & 2) {
            g_.s ^= a;
        }
#endif
    }

    void measure_hint(const PauliOperator &p, const PauliOperator &hint) {
        if (!comm(p, hint)) {
            fail(ErrorCode::HintCommutes, "hint " + hint.to_string() + " commutes with " + p.to_string());
        }
        PauliOperator qh = preimage(g_.c, hint);
        if (!qh.x.is_zero()) {
            fail(ErrorCode::HintNotStabilizer, "hint " + hint.to_string() + " does not stabilize the state");
        }
        bool alpha0 = qh.s == 2;
        BitVector a = g_.a.left_mul(qh.z);
        g_.c = left_mul_exponent(g_.c, 1, scaled(mul(hint, p), 1));
        size_t k = add_random();
        a.push_back(false);
        add_outcome(BitVector::unit(k + 1, k), false, true);
        // (-1)^{alpha (rho + alpha)} with alpha = alpha0 + <a,r>
        if (alpha0) {
            g_.c.add_phase(4);
            g_.s.flip(k);
        }
        g_.s ^= a;
        g_.b += BitMatrix::outer(a, BitVector::unit(k + 1, k));
        BitVector ind = a;
        ind.set(k, true);
        conditional_pauli(hint, alpha0, ind);
    }

    void measure(const Instruction &ins) {
        PauliOperator p = local(ins.pauli);
        if (ins.hint) {
            measure_hint(p, local(*ins.hint));
            return;
        }
        PauliOperator q = preimage(g_.c, p);
        if (q.x.is_zero()) {
            add_outcome(g_.a.left_mul(q.z), q.s == 2, false);
            return;
        }
        size_t j = q.x.first_one();
        measure_hint(p, image(g_.c, PauliOperator::single(n(), j, 'Z')));
    }

    void alloc(size_t label) {
        for (size_t k = 0; k < labels_.size(); ++k) {
            if (labels_[k] < 0) {
                labels_[k] = static_cast<long>(label);
                return;
            }
        }
        size_t pos = n();
        g_.c = insert_qubit(g_.c, pos);
        g_.a.insert_row(pos);
        labels_.push_back(static_cast<long>(label));
    }

    void free(size_t label) {
        size_t k = slot(label);
        PauliOperator q = preimage(g_.c, PauliOperator::single(n(), k, 'Z'));
        if (!q.x.is_zero() || q.s == 2 || !g_.a.left_mul(q.z).is_zero()) {
            fail(ErrorCode::FreeOnNonZeroQubit, "qubit " + std::to_string(label) + " is not in |0> when freed");
        }
        labels_[k] = -1;
    }

    void step(const Instruction &ins) {
        switch (ins.kind) {
            case OpKind::Alloc: alloc(ins.qubits[0]); break;
            case OpKind::Free: free(ins.qubits[0]); break;
            case OpKind::Gate: {
                std::vector<size_t> qs;
                for (size_t l : ins.qubits) {
                    qs.push_back(slot(l));
                }
                g_.c = apply_gate(g_.c, ins.name, qs);
                break;
            }
            case OpKind::Exp: g_.c = left_mul_exponent(g_.c, ins.sign, local(ins.pauli)); break;
            case OpKind::Measure: measure(ins); break;
            case OpKind::Rand: {
                size_t k = add_random();
                add_outcome(BitVector::unit(k + 1, k), false, true);
                break;
            }
            case OpKind::Cond: {
                size_t nr = g_.num_params();
                BitVector a(nr);
                bool k0 = !ins.parity;
                for (size_t o : ins.outcomes) {
                    if (o >= g_.num_outcomes()) {
                        fail(ErrorCode::MalformedCondition, "condition on outcome " + std::to_string(o) +
                                                                " before it is produced");
                    }
                    a ^= g_.m.row(o);
                    k0 ^= g_.v0.get(o);
                }
                for (size_t t : ins.angles) {
                    a.flip(t);
                }
                // apply when parity == target, i.e. P^{parity + target + 1}
                conditional_pauli(local(ins.pauli), k0, a);
                break;
            }
            case OpKind::Rot: conditional_pauli(local(ins.pauli), false, BitVector::unit(g_.num_params(), ins.angle)); break;
        }
    }

    GeneralForm finish() {
        std::vector<size_t> order;
        std::vector<std::pair<long, size_t>> live;
        for (size_t k = 0; k < labels_.size(); ++k) {
            if (labels_[k] >= 0) {
                live.emplace_back(labels_[k], k);
            }
        }
        std::sort(live.begin(), live.end());
        for (const auto &item : live) {
            order.push_back(item.second);
        }
        size_t n_out = order.size();
        for (size_t k = 0; k < labels_.size(); ++k) {
            if (labels_[k] < 0) {
                order.push_back(k);
            }
        }
        g_.c = permute_qubits(g_.c, order);
        g_.a = g_.a.select_rows(order);
        if (n_out == n()) {
            return g_;
        }
        Separation sep;
        try {
            sep = separate_aux(g_, n_out);
        } catch (const Error &e) {
            if (e.code() == ErrorCode::ResidualEntanglement) {
                fail(ErrorCode::FreeOnEntangledQubit, e.what());
            }
            throw;
        }
        // The freed qubits hold beta(r)|0>; fold scalar * beta(r) into the output phase.
        const GeneralForm &aux = sep.aux;
        size_t n_aux = aux.num_qubits();
        auto log_w = [&](const BitVector &r) {
            BitVector in = aux.a * r;
            if (!support_point(aux.c, in).is_zero()) {
                fail(ErrorCode::FreeOnEntangledQubit, "freed qubits are not in |0>");
            }
            auto [m, k] = polar(sep.scalar * basis_amplitude(aux.c, in, BitVector(n_aux)));
            if (k != 0) {
                fail(ErrorCode::FreeOnEntangledQubit, "freed qubits are not in |0>");
            }
            return m;
        };
        GeneralForm out = sep.out;
        int base = log_w(BitVector(out.num_params()));
        PhaseFit fit = fit_phase(out.num_params(), [&](const BitVector &r) {
            int d = log_w(r) - base;
            if (d & 1) {
                fail(ErrorCode::FreeOnEntangledQubit, "freed qubits carry an odd relative phase");
            }
            return phase_exponent(sep.out, r) + d / 2;
        });
        out.p = fit.p;
        out.b = fit.b;
        out.s = fit.s;
        out.c.add_phase(base + 2 * fit.kappa);
        return out;
    }

    const Circuit &circ_;
    GeneralForm g_;
    std::vector<long> labels_;
};

std::vector<PauliOperator> restricted(const std::vector<PauliOperator> &rows, size_t begin, size_t end) {
    std::vector<PauliOperator> out;
    for (const auto &p : rows) {
        out.emplace_back(p.s, p.x.slice(begin, end), p.z.slice(begin, end));
    }
    return out;
}

// Rows of `gens` whose support avoids [begin, end), after elimination on those columns.
std::vector<PauliOperator> eliminate(std::vector<PauliOperator> rows, size_t begin, size_t end) {
    size_t done = 0;
    for (size_t col = begin; col < end; ++col) {
        for (int part = 0; part < 2; ++part) {
            auto bit = [&](const PauliOperator &p) { return part == 0 ? p.x.get(col) : p.z.get(col); };
            size_t piv = rows.size();
            for (size_t i = done; i < rows.size(); ++i) {
                if (bit(rows[i])) {
                    piv = i;
                    break;
                }
            }
            if (piv == rows.size()) {
                continue;
            }
            std::swap(rows[piv], rows[done]);
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i != done && bit(rows[i])) {
                    rows[i] = mul(rows[i], rows[done]);
                }
            }
            ++done;
        }
    }
    return {rows.begin() + static_cast<long>(done), rows.end()};
}

// A Clifford whose |0> is stabilized by every generator.
PhasedBruhat prepare(const std::vector<PauliOperator> &gens, size_t k) {
    PhasedBruhat c = PhasedBruhat::identity(k);
    for (size_t i = 0; i < gens.size(); ++i) {
        const PauliOperator &g = gens[i];
        bool moved = false;
        for (size_t j = 0; j < k && !moved; ++j) {
            PauliOperator h = image(c, PauliOperator::single(k, j, 'Z'));
            if (comm(h, g)) {
                c = left_mul_exponent(c, 1, scaled(mul(h, g), 1));
                moved = true;
            }
        }
        if (moved) {
            continue;
        }
        PauliOperator q = preimage(c, g);
        if (q.s == 0) {
            continue;
        }
        // Flip the sign of g while keeping the earlier generators.
        BitMatrix sys(i + 1, 2 * k);
        BitVector rhs(i + 1);
        for (size_t r = 0; r <= i; ++r) {
            for (size_t col = 0; col < k; ++col) {
                sys.set(r, col, gens[r].z.get(col));
                sys.set(r, k + col, gens[r].x.get(col));
            }
        }
        rhs.set(i, true);
        auto f = solve(sys, rhs);
        if (!f) {
            fail(ErrorCode::DecompositionFailure, "stabilizer generators are dependent");
        }
        c = left_mul_pauli(c, PauliOperator(0, f->slice(0, k), f->slice(k, 2 * k)));
    }
    for (const auto &g : gens) {
        PauliOperator q = preimage(c, g);
        if (!q.x.is_zero() || q.s != 0) {
            fail(ErrorCode::DecompositionFailure, "prepared state misses generator " + g.to_string());
        }
    }
    return c;
}

}  // namespace

GeneralForm simulate(const Circuit &c) {
    if (!c.inputs.empty()) {
        fail(ErrorCode::FormatError, "circuit has input qubits; close it first");
    }
    return Simulation(c).run();
}

MeasurementBranches measure_with_assertion(const BasisImageState &st, const PauliOperator &p,
                                           const PauliOperator &hint) {
    if (!comm(p, hint)) {
        fail(ErrorCode::HintCommutes, "hint " + hint.to_string() + " commutes with " + p.to_string());
    }
    PauliOperator qh = preimage(st.c, hint);
    if (!qh.x.is_zero()) {
        fail(ErrorCode::HintNotStabilizer, "hint " + hint.to_string() + " does not stabilize the state");
    }
    int b = (qh.s == 2) ^ dot(qh.z, st.b);
    PhasedBruhat rotated = left_mul_exponent(st.c, 1, scaled(mul(hint, p), 1));
    MeasurementBranches out;
    for (int r = 0; r < 2; ++r) {
        PhasedBruhat c = rotated;
        if ((r + b) & 1) {
            c = left_mul_pauli(c, hint);
        }
        if ((b * (r + b)) & 1) {
            c.add_phase(4);
        }
        out.branch[r] = BasisImageState{c, st.b};
    }
    return out;
}

Separation separate_aux(const GeneralForm &g, size_t n_out) {
    g.validate();
    size_t n = g.num_qubits();
    if (n_out > n) {
        fail(ErrorCode::DimensionMismatch, "output count exceeds the qubit count");
    }
    size_t n_aux = n - n_out;
    std::vector<PauliOperator> stab;
    for (size_t j = 0; j < n; ++j) {
        stab.push_back(image(g.c, PauliOperator::single(n, j, 'Z')));
    }
    std::vector<PauliOperator> out_gens = eliminate(stab, n_out, n);
    std::vector<PauliOperator> aux_gens = eliminate(stab, 0, n_out);
    if (out_gens.size() != n_out || aux_gens.size() != n_aux) {
        fail(ErrorCode::ResidualEntanglement,
             "state at r = 0 is entangled across the cut after qubit " + std::to_string(n_out));
    }
    PhasedBruhat c1 = prepare(restricted(out_gens, 0, n_out), n_out);
    PhasedBruhat c2 = prepare(restricted(aux_gens, n_out, n), n_aux);
    PhasedBruhat prod = tensor(c1, c2);

    BitVector zero(n);
    BitVector pt = support_point(g.c, zero);
    auto [m_full, k_full] = polar(basis_amplitude(g.c, zero, pt));
    auto [m_prod, k_prod] = polar(basis_amplitude(prod, zero, pt));
    if (k_full != k_prod) {
        fail(ErrorCode::DecompositionFailure, "product state has a different support size");
    }
    int kappa_w = m_full - m_prod;

    size_t nr = g.num_params();
    auto pull = [&](const BitVector &r) {
        PauliOperator pr = image(g.c, PauliOperator(0, g.a * r, BitVector(n)));
        return preimage(prod, pr);
    };
    BitMatrix a2(n, nr);
    for (size_t i = 0; i < nr; ++i) {
        a2.set_column(i, pull(BitVector::unit(nr, i)).x);
    }
    PhaseFit fit = fit_phase(nr, [&](const BitVector &r) { return phase_exponent(g, r) + pull(r).s; });

    Separation sep;
    sep.out = g;
    sep.out.c = c1;
    std::vector<size_t> rows_out;
    std::vector<size_t> rows_aux;
    for (size_t q = 0; q < n; ++q) {
        (q < n_out ? rows_out : rows_aux).push_back(q);
    }
    sep.out.a = a2.select_rows(rows_out);
    sep.out.p = fit.p;
    sep.out.b = fit.b;
    sep.out.s = fit.s;
    sep.aux = g;
    sep.aux.c = c2;
    sep.aux.a = a2.select_rows(rows_aux);
    sep.aux.p = BitVector(nr);
    sep.aux.s = BitVector(nr);
    sep.aux.b = BitMatrix(nr, nr);
    sep.scalar = ExactScalar::omega_power(kappa_w + 2 * fit.kappa);
    return sep;
}

}  // namespace phocs
