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

#include "phocs/oracle.hpp"

#include <algorithm>

#include "phocs/error.hpp"

namespace phocs {

namespace {

constexpr size_t kMaxEnumerationBits = 16;

DenseState insert_zero(const DenseState &st, size_t pos) {
    DenseState out(st.n + 1);
    uint64_t low = (uint64_t{1} << pos) - 1;
    for (uint64_t i = 0; i < st.amp.size(); ++i) {
        uint64_t j = (i & low) | ((i & ~low) << 1);
        out.amp[j] = st.amp[i];
    }
    return out;
}

DenseState remove_zero(const DenseState &st, size_t pos) {
    DenseState out(st.n - 1);
    uint64_t low = (uint64_t{1} << pos) - 1;
    for (uint64_t i = 0; i < st.amp.size(); ++i) {
        if ((i >> pos) & 1) {
            if (!st.amp[i].is_zero()) {
                fail(ErrorCode::FreeOnNonZeroQubit, "freed qubit is not in |0>");
            }
            continue;
        }
        uint64_t j = (i & low) | ((i >> 1) & ~low);
        out.amp[j] = st.amp[i];
    }
    return out;
}

class Runner {
   public:
    Runner(const Circuit &c, const BitVector &assignment) : c_(c), assign_(assignment) {
        if (!c.inputs.empty()) {
            fail(ErrorCode::FormatError, "circuit has input qubits; close it first");
        }
        if (assignment.size() != c.num_angles() + c.num_outcomes) {
            fail(ErrorCode::InvalidAssignment, "assignment has " + std::to_string(assignment.size()) +
                                                   " bits, expected " +
                                                   std::to_string(c.num_angles() + c.num_outcomes));
        }
        run_.state = DenseState(0);
        run_.outcomes = assignment.slice(c.num_angles(), assignment.size());
    }

    DenseRun run() {
        for (const auto &ins : c_.ops) {
            step(ins);
        }
        return run_;
    }

   private:
    size_t pos(size_t label) const {
        auto it = std::lower_bound(live_.begin(), live_.end(), label);
        if (it == live_.end() || *it != label) {
            fail(ErrorCode::QubitOutOfRange, "qubit " + std::to_string(label) + " is not allocated");
        }
        return static_cast<size_t>(it - live_.begin());
    }

    PauliOperator local(const PauliOperator &p) const {
        PauliOperator q(live_.size());
        q.s = p.s;
        for (size_t l : p.support().ones()) {
            size_t k = pos(l);
            q.x.set(k, p.x.get(l));
            q.z.set(k, p.z.get(l));
        }
        return q;
    }

    void branch(const PauliOperator &p, bool outcome) {
        DenseState projected = run_.state;
        apply_projector(projected, p, outcome);
        ExactScalar n2 = projected.norm2();
        if (n2.is_zero()) {
            fail(ErrorCode::InvalidAssignment, "outcome has probability 0");
        }
        if (n2 == ExactScalar(1)) {
            run_.state = projected;
            return;
        }
        if (!(n2.times_sqrt2().times_sqrt2() == ExactScalar(1))) {
            fail(ErrorCode::InvalidAssignment, "branch probability is neither 1 nor 1/2");
        }
        for (auto &a : projected.amp) {
            a = a.times_sqrt2();
        }
        run_.state = projected;
        ++run_.weight;
    }

    void step(const Instruction &ins) {
        switch (ins.kind) {
            case OpKind::Alloc: {
                size_t l = ins.qubits[0];
                auto it = std::lower_bound(live_.begin(), live_.end(), l);
                size_t k = static_cast<size_t>(it - live_.begin());
                live_.insert(it, l);
                if (live_.size() > kDenseMaxQubits) {
                    fail(ErrorCode::TooManyQubits, "dense execution is limited to " +
                                                       std::to_string(kDenseMaxQubits) + " qubits");
                }
                run_.state = insert_zero(run_.state, k);
                break;
            }
            case OpKind::Free: {
                size_t k = pos(ins.qubits[0]);
                run_.state = remove_zero(run_.state, k);
                live_.erase(live_.begin() + static_cast<long>(k));
                break;
            }
            case OpKind::Gate: {
                std::vector<size_t> qs;
                for (size_t l : ins.qubits) {
                    qs.push_back(pos(l));
                }
                apply_named_gate(run_.state, ins.name, qs);
                break;
            }
            case OpKind::Exp: apply_exponent(run_.state, ins.sign, local(ins.pauli)); break;
            case OpKind::Measure: branch(local(ins.pauli), run_.outcomes.get(next_outcome_++)); break;
            case OpKind::Rand:
                ++next_outcome_;
                ++run_.weight;
                break;
            case OpKind::Cond: {
                bool parity = false;
                for (size_t o : ins.outcomes) {
                    parity ^= run_.outcomes.get(o);
                }
                for (size_t a : ins.angles) {
                    parity ^= assign_.get(a);
                }
                if (parity == ins.parity) {
                    apply_pauli(run_.state, local(ins.pauli));
                }
                break;
            }
            case OpKind::Rot:
                if (assign_.get(ins.angle)) {
                    apply_pauli(run_.state, local(ins.pauli));
                }
                break;
        }
    }

    const Circuit &c_;
    const BitVector &assign_;
    std::vector<size_t> live_;
    size_t next_outcome_ = 0;
    DenseRun run_;
};

}  // namespace

DenseRun run_dense(const Circuit &c, const BitVector &assignment) {
    return Runner(c, assignment).run();
}

std::vector<DenseBranch> enumerate_dense(const Circuit &c) {
    size_t bits = c.num_angles() + c.num_outcomes;
    if (bits > kMaxEnumerationBits) {
        fail(ErrorCode::TooLarge, "too many angle and outcome bits to enumerate");
    }
    std::vector<DenseBranch> out;
    for (uint64_t v = 0; v < (uint64_t{1} << bits); ++v) {
        BitVector a = BitVector::from_uint64(bits, v);
        try {
            out.push_back(DenseBranch{a, run_dense(c, a)});
        } catch (const Error &e) {
            if (e.code() != ErrorCode::InvalidAssignment) {
                throw;
            }
        }
    }
    return out;
}

}  // namespace phocs
