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


// Runs the acceptance criteria with fixed seeds and prints one PASS/FAIL line each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phocs/circuit.hpp"
#include "phocs/dense.hpp"
#include "phocs/equivalence.hpp"
#include "phocs/error.hpp"
#include "phocs/general_form.hpp"
#include "phocs/phased_clifford.hpp"
#include "phocs/random_circuit.hpp"
#include "phocs/selfcheck.hpp"
#include "phocs/simulator.hpp"

using namespace phocs;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first failure only.
void fail(Outcome &o, const std::string &why) {
    if (o.pass) {
        o.detail = why;
    }
    o.pass = false;
}

BitMatrix random_invertible(std::mt19937_64 &rng, size_t n) {
    for (;;) {
        BitMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                m.set(i, j, rng() & 1);
            }
        }
        if (m.rank() == n) {
            return m;
        }
    }
}

Outcome simulation_exactness() {
    std::mt19937_64 rng(1001);
    RandomCircuitOptions opt;
    opt.max_qubits = 5;
    opt.max_instructions = 12;
    opt.max_measurements = 4;
    opt.max_conditions = 3;
    Outcome o;
    for (int i = 0; i < 500; ++i) {
        std::string text = random_circuit_text(rng, opt);
        auto bad = verify_simulation(lower_rotations(parse_circuit(text)));
        if (bad) {
            fail(o, "case " + std::to_string(i) + ": " + *bad + "\n" + text);
        }
    }
    o.detail = o.pass ? "500 circuits" : o.detail;
    return o;
}

Outcome measurement_update() {
    std::mt19937_64 rng(1002);
    Outcome o;
    for (int i = 0; i < 200; ++i) {
        auto bad = check_measurement_case(rng, 5);
        if (bad) {
            fail(o, "case " + std::to_string(i) + ": " + *bad);
        }
    }
    o.detail = o.pass ? "200 triples" : o.detail;
    return o;
}

// Builds c alongside a dense copy, then checks one more left multiplication.
Outcome left_multiplication() {
    std::mt19937_64 rng(1003);
    Outcome o;
    for (int i = 0; i < 1000; ++i) {
        size_t n = 1 + rng() % 4;
        PhasedBruhat c = PhasedBruhat::identity(n);
        DenseMatrix d = DenseMatrix::identity(n);
        size_t steps = rng() % 10;
        for (size_t k = 0; k < steps; ++k) {
            PauliOperator p = random_hermitian_pauli(rng, n);
            int sign = (rng() & 1) ? 1 : -1;
            c = left_mul_exponent(c, sign, p);
            d = exponent_matrix(sign, p) * d;
        }
        PauliOperator p = random_hermitian_pauli(rng, n);
        int sign = (rng() & 1) ? 1 : -1;
        if (!(left_mul_exponent(c, sign, p).dense() == exponent_matrix(sign, p) * d)) {
            fail(o, "n=" + std::to_string(n) + " case " + std::to_string(i) + " exponent " + p.to_string());
        }
    }
    const size_t n = 5;
    for (int i = 0; i < 200; ++i) {
        PhasedBruhat c = PhasedBruhat::identity(n);
        DenseMatrix d = DenseMatrix::identity(n);
        size_t steps = 1 + rng() % 6;
        for (size_t k = 0; k < steps; ++k) {
            PauliOperator p = random_hermitian_pauli(rng, n);
            int sign = (rng() & 1) ? 1 : -1;
            c = left_mul_exponent(c, sign, p);
            d = exponent_matrix(sign, p) * d;
        }
        for (int spot = 0; spot < 32; ++spot) {
            uint64_t in = rng() % d.dim, out = rng() % d.dim;
            ExactScalar got = basis_amplitude(c, BitVector::from_uint64(n, in), BitVector::from_uint64(n, out));
            if (!(got == d.at(out, in))) {
                fail(o, "n=5 case " + std::to_string(i) + " amplitude <" + std::to_string(out) + "|c|" +
                            std::to_string(in) + ">");
            }
        }
    }
    o.detail = o.pass ? "1000 dense cases on n<=4, 200x32 amplitudes on n=5" : o.detail;
    return o;
}

Outcome bruhat_table() {
    Outcome o;
    BruhatTable t = generate_table();
    if (t.size() != 48) {
        fail(o, std::to_string(t.size()) + " entries");
    }
    for (const std::string &key : verify_table(t)) {
        fail(o, "entry " + key + " fails dense check");
    }
    std::stringstream ss;
    write_table(ss, t);
    BruhatTable back = read_table(ss);
    if (!verify_table(back).empty() || back.size() != t.size()) {
        fail(o, "round-trip fails verification");
    }
    for (const auto &[key, entry] : t.entries) {
        auto it = back.entries.find(key);
        if (it == back.entries.end() || !(it->second.second == entry.second)) {
            fail(o, "round-trip changed " + key);
        }
    }
    o.detail = o.pass ? "48 entries" : o.detail;
    return o;
}

Outcome css_orbits() {
    Outcome o;
    size_t count = 0;
    for (size_t n = 1; n <= 3; ++n) {
        for (uint64_t v = 0; v < (uint64_t(1) << (2 * n)); ++v) {
            for (int sign = 0; sign < 2; ++sign) {
                PauliOperator p(n);
                for (size_t q = 0; q < n; ++q) {
                    p.x.set(q, (v >> (2 * q)) & 1);
                    p.z.set(q, (v >> (2 * q + 1)) & 1);
                }
                p.s = static_cast<uint8_t>(((p.x & p.z).popcount() + 2 * sign) & 3);
                if (auto bad = verify_orbit(p)) {
                    fail(o, *bad);
                }
                ++count;
            }
        }
    }
    std::mt19937_64 rng(1005);
    for (int i = 0; i < 500; ++i) {
        PauliOperator p = random_hermitian_pauli(rng, 1 + rng() % 5);
        if (auto bad = verify_orbit(p)) {
            fail(o, *bad);
        }
    }
    o.detail = o.pass ? std::to_string(count) + " exhaustive, 500 random" : o.detail;
    return o;
}

Outcome css_dual() {
    std::mt19937_64 rng(1006);
    Outcome o;
    for (int i = 0; i < 100; ++i) {
        size_t n = 1 + rng() % 4;
        BitMatrix a = random_invertible(rng, n);
        DenseMatrix h = DenseMatrix::identity(n);
        for (size_t q = 0; q < n; ++q) {
            h = gate_matrix("H", {q}, n) * h;
        }
        if (!(h * PhaseCssTableau::css(a).dense() * h == PhaseCssTableau::css(inverse_transpose(a)).dense())) {
            fail(o, "case " + std::to_string(i));
        }
    }
    o.detail = o.pass ? "100 matrices" : o.detail;
    return o;
}

Outcome aux_separation() {
    std::mt19937_64 rng(1007);
    Outcome o;
    for (int i = 0; i < 100; ++i) {
        size_t n_out = 1 + rng() % 3, n_aux = 1 + rng() % 2;
        std::string text = separable_circuit_text(rng, n_out, n_aux, false);
        if (auto bad = verify_separation(simulate(parse_circuit(text)), n_out)) {
            fail(o, *bad + "\n" + text);
        }
    }
    for (int i = 0; i < 20; ++i) {
        size_t n_out = 1 + rng() % 3, n_aux = 1 + rng() % 2;
        std::string text = separable_circuit_text(rng, n_out, n_aux, true);
        try {
            separate_aux(simulate(parse_circuit(text)), n_out);
            fail(o, "entangled cut separated\n" + text);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::ResidualEntanglement) {
                fail(o, std::string("entangled cut raised ") + e.what());
            }
        }
    }
    o.detail = o.pass ? "100 separable, 20 entangled" : o.detail;
    return o;
}

Outcome engine_vs_oracle() {
    std::mt19937_64 rng(1008);
    Outcome o;
    size_t flips = 0, others = 0, agree = 0;
    while (flips + others < 300) {
        CircuitPair pair = random_pair(rng, 3, 2);
        bool flip = pair.kind == PairKind::PhaseFlip;
        // keep at least 60 phase-flip pairs among the 300
        if (flip ? flips >= 60 : others >= 240) {
            continue;
        }
        (flip ? flips : others)++;
        Circuit c1 = parse_circuit(pair.first), c2 = parse_circuit(pair.second);
        Verdict fast = check_circuits(c1, c2).verdict;
        Verdict slow = oracle_check(c1, c2).verdict;
        if ((fast == Verdict::Equivalent) != (slow == Verdict::Equivalent)) {
            fail(o, std::string(pair_kind_name(pair.kind)) + " pair disagrees with oracle\n" + pair.first + "vs\n" +
                        pair.second);
            continue;
        }
        if (flip && fast != Verdict::NotEquivalent) {
            fail(o, "phase-flip pair judged equivalent\n" + pair.first + "vs\n" + pair.second);
            continue;
        }
        ++agree;
    }
    o.detail = std::to_string(agree) + "/300 agree, " + std::to_string(flips) + " phase-flip pairs" +
               (o.pass ? "" : ": " + o.detail);
    return o;
}

Outcome named_pairs() {
    const std::string teleport =
        "qubits 1\ninputs 0\nALLOC\nALLOC\nH 1\nCX 1 2\nCX 0 1\nH 0\nM Z0\nM Z1\n"
        "COND X2 IF 1 == 1\nCOND Z2 IF 0 == 1\nCOND X0 IF 0 == 1\nFREE 0\nCOND X1 IF 1 == 1\nFREE 1\n";
    struct Named {
        const char *name;
        std::string a, b;
        Verdict want;
    };
    std::vector<Named> pairs = {
        {"rotation through control", "qubits 2\ninputs 0 1\nROT t Z0\nCX 0 1\n",
         "qubits 2\ninputs 0 1\nCX 0 1\nROT t Z0\n", Verdict::Equivalent},
        {"rotation moved to target", "qubits 2\ninputs 0 1\nROT t Z0\nCX 0 1\n",
         "qubits 2\ninputs 0 1\nCX 0 1\nROT t Z1\n", Verdict::NotEquivalent},
        {"Z^a vs X Z^a X", "qubits 1\nROT a Z0\n", "qubits 1\nX 0\nROT a Z0\nX 0\n", Verdict::NotEquivalent},
        {"teleportation", teleport, "qubits 1\ninputs 0\nRAND\nRAND\n", Verdict::Equivalent},
    };
    Outcome o;
    for (const Named &p : pairs) {
        Circuit c1 = parse_circuit(p.a), c2 = parse_circuit(p.b);
        EquivalenceReport rep = check_circuits(c1, c2);
        if (rep.verdict != p.want) {
            fail(o, std::string(p.name) + ": got " + verdict_name(rep.verdict));
        }
        if (oracle_check(c1, c2).verdict != p.want) {
            fail(o, std::string(p.name) + ": oracle disagrees");
        }
        if (std::string(p.name) == "Z^a vs X Z^a X" &&
            (!rep.witness || rep.witness->r.size() != 1 || !rep.witness->r.get(0))) {
            fail(o, "witness is not a=1");
        }
    }
    o.detail = o.pass ? "4 pairs" : o.detail;
    return o;
}

Outcome test_point_completeness() {
    std::mt19937_64 rng(1010);
    Outcome o;
    size_t equal = 0;
    for (int i = 0; i < 200; ++i) {
        size_t na = rng() % 3, nrand = rng() % 7;
        GeneralForm g1 = canonicalize(random_general_form(rng, 1 + rng() % 3, na, nrand, nrand + rng() % 2));
        GeneralForm g2 = canonicalize(rephased_copy(rng, g1, rng() % 2));
        bool fast = general_forms_equal(g1, g2).verdict == Verdict::Equivalent;
        if (fast != forms_equal_exhaustive(g1, g2)) {
            fail(o, "case " + std::to_string(i) + " with n_r=" + std::to_string(g1.num_params()));
        }
        equal += fast;
    }
    o.detail = o.pass ? "200 pairs, " + std::to_string(equal) + " equal" : o.detail;
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"simulation exactness", simulation_exactness},
        {"measurement update", measurement_update},
        {"exponent left multiplication", left_multiplication},
        {"decomposition table", bruhat_table},
        {"CSS orbit", css_orbits},
        {"CSS dual identity", css_dual},
        {"auxiliary separation", aux_separation},
        {"engine vs oracle", engine_vs_oracle},
        {"named regression pairs", named_pairs},
        {"test-point completeness", test_point_completeness},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            fail(o, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
