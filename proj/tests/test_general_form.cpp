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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "phocs/dense.hpp"
#include "phocs/equivalence.hpp"
#include "phocs/error.hpp"
#include "phocs/general_form.hpp"
#include "phocs/selfcheck.hpp"
#include "phocs/simulator.hpp"

using namespace phocs;

namespace {

BitVector bits(const char *s) {
    return BitVector::from_string(s);
}

GeneralForm phase_only(size_t nr, const char *p, const char *s, std::vector<std::string> b) {
    GeneralForm g;
    g.half.assign(nr, true);
    g.a = BitMatrix(0, nr);
    g.m = BitMatrix::identity(nr);
    g.v0 = BitVector(nr);
    g.p = bits(p);
    g.s = bits(s);
    g.b = b.empty() ? BitMatrix(nr, nr) : BitMatrix::from_rows(b, nr);
    g.validate();
    return g;
}

std::vector<std::string> family(const GeneralForm &g) {
    std::vector<std::string> out;
    size_t nr = g.num_params();
    for (uint64_t v = 0; v < (uint64_t(1) << nr); ++v) {
        BitVector r = BitVector::from_uint64(nr, v);
        BitVector angles = r.slice(0, g.n_angle);
        out.push_back(angles.to_string() + "|" + outcome_at(g, r).to_string() + "|" +
                      dense_state(state_at(g, r)).to_string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(PhaseAt, Examples) {
    EXPECT_EQ(phase_at(phase_only(1, "0", "0", {}), bits("1")), ExactScalar(1));
    EXPECT_EQ(phase_at(phase_only(1, "1", "1", {}), bits("1")), ExactScalar::i_power(3));
    EXPECT_EQ(phase_at(phase_only(2, "00", "00", {"01", "00"}), bits("11")), ExactScalar(-1));
    EXPECT_THROW(phase_at(phase_only(1, "0", "0", {}), bits("11")), Error);
}

TEST(StateAt, Examples) {
    GeneralForm empty;
    EXPECT_EQ(dense_state(state_at(empty, BitVector(0))), DenseState());

    GeneralForm hm = simulate(parse_circuit("qubits 1\nH 0\nM Z0\n"));
    EXPECT_EQ(dense_state(state_at(hm, bits("1"))), DenseState::basis(1, 1));

    GeneralForm cy = simulate(parse_circuit("qubits 1\nH 0\nM Z0\nCOND Y0 IF 0 == 1\n"));
    DenseState expect(1);
    expect.amp[0] = ExactScalar::i_power(3);
    EXPECT_EQ(dense_state(state_at(cy, bits("1"))), expect);
}

TEST(OutcomeAt, Examples) {
    GeneralForm g;
    g.half = {false, false};
    g.m = BitMatrix(2, 0);
    g.v0 = bits("10");
    EXPECT_EQ(outcome_at(g, BitVector(0)), bits("10"));

    GeneralForm h = simulate(parse_circuit("qubits 1\nH 0\nM Z0\n"));
    EXPECT_EQ(h.m, BitMatrix::from_rows({"1"}, 1));
    EXPECT_EQ(outcome_at(h, bits("1")), bits("1"));

    GeneralForm two = simulate(parse_circuit("qubits 1\nH 0\nM Z0\nX 0\nM Z0\n"));
    EXPECT_EQ(two.m, BitMatrix::from_rows({"1", "1"}, 1));
    EXPECT_EQ(two.v0, bits("01"));
    EXPECT_EQ(outcome_at(two, bits("1")), bits("10"));
}

TEST(Canonicalize, CanonicalFormsUnchanged) {
    GeneralForm two = simulate(parse_circuit("qubits 1\nH 0\nM Z0\nX 0\nM Z0\n"));
    ASSERT_TRUE(is_canonical(two));
    GeneralForm c = canonicalize(two);
    EXPECT_EQ(c.m, two.m);
    EXPECT_EQ(c.v0, two.v0);
    EXPECT_TRUE(canonicalize(c) == c);
}

TEST(Canonicalize, ShiftsPivotOutcome) {
    GeneralForm g = simulate(parse_circuit("qubits 1\nH 0\nX 0\nM -Z0\n"));
    GeneralForm c = canonicalize(g);
    EXPECT_TRUE(is_canonical(c));
    EXPECT_FALSE(c.v0.get(0));
    EXPECT_EQ(family(g), family(c));
}

TEST(Canonicalize, PreservesFamilyOfRandomForms) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 1 + rng() % 3, na = rng() % 3, nrand = rng() % 5;
        GeneralForm g = random_general_form(rng, n, na, nrand, nrand + rng() % 3);
        GeneralForm c = canonicalize(g);
        c.validate();
        ASSERT_TRUE(is_canonical(c));
        ASSERT_EQ(c.n_angle, g.n_angle);
        ASSERT_EQ(c.half, g.half);
        ASSERT_EQ(family(g), family(c));
        ASSERT_TRUE(canonicalize(c) == c);
    }
}

TEST(Substitute, PhaseCarryRules) {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 200; ++trial) {
        size_t nrand = 1 + rng() % 5;
        GeneralForm g = random_general_form(rng, 1 + rng() % 3, 0, nrand, nrand);
        size_t nr = g.num_params();
        BitMatrix t(nr, nr);
        do {
            for (size_t i = 0; i < nr; ++i) {
                for (size_t j = 0; j < nr; ++j) {
                    t.set(i, j, rng() & 1);
                }
            }
        } while (t.rank() != nr);
        BitVector off = BitVector::from_uint64(nr, rng() % (uint64_t(1) << nr));
        GeneralForm h = substitute(g, t, off);
        for (uint64_t v = 0; v < (uint64_t(1) << nr); ++v) {
            BitVector r = BitVector::from_uint64(nr, v);
            BitVector orig = t * r ^ off;
            ASSERT_EQ(outcome_at(h, r), outcome_at(g, orig));
            ASSERT_TRUE(states_equal_exact(dense_state(state_at(h, r)), dense_state(state_at(g, orig))));
        }
    }
}

TEST(FitPhase, RecoversQuadraticForms) {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 200; ++trial) {
        size_t nr = rng() % 7;
        GeneralForm g = random_general_form(rng, 1, 0, nr, nr);
        int kappa = static_cast<int>(rng() % 4);
        auto f = [&](const BitVector &r) { return kappa + phase_exponent(g, r); };
        PhaseFit fit = fit_phase(nr, f);
        GeneralForm h = g;
        h.p = fit.p;
        h.b = fit.b;
        h.s = fit.s;
        for (size_t i = 0; i < nr; ++i) {
            for (size_t j = 0; j <= i; ++j) {
                ASSERT_FALSE(fit.b.get(i, j));
            }
        }
        for (uint64_t v = 0; v < (uint64_t(1) << nr); ++v) {
            BitVector r = BitVector::from_uint64(nr, v);
            ASSERT_EQ(((fit.kappa + phase_exponent(h, r) - f(r)) % 4 + 4) % 4, 0);
        }
    }
}

TEST(Dump, RoundTrip) {
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 100; ++trial) {
        GeneralForm g = random_general_form(rng, rng() % 4, rng() % 2, rng() % 3, rng() % 4);
        std::string text = dump(g);
        std::istringstream in(text);
        GeneralForm back = read_general_form(in);
        ASSERT_TRUE(back == g);
        ASSERT_EQ(dump(back), text);
    }
    std::istringstream bad("phocs-general-form v1\nn 1\n");
    EXPECT_THROW(read_general_form(bad), Error);
}

TEST(Dump, HMeasureFields) {
    std::string text = dump(simulate(parse_circuit("qubits 1\nH 0\nM Z0\n")));
    EXPECT_NE(text.find("\nq h\n"), std::string::npos);
    EXPECT_NE(text.find("\nM 1\n"), std::string::npos);
}

TEST(TestPoints, CompleteForRandomPairs) {
    std::mt19937_64 rng(65);
    int equal = 0, differ = 0;
    for (int trial = 0; trial < 150; ++trial) {
        size_t nrand = rng() % 6, na = rng() % 3;
        GeneralForm g1 = canonicalize(random_general_form(rng, 1 + rng() % 3, na, nrand, nrand + rng() % 2));
        GeneralForm g2 = canonicalize(rephased_copy(rng, g1, rng() % 2));
        bool fast = general_forms_equal(g1, g2).verdict == Verdict::Equivalent;
        ASSERT_EQ(fast, forms_equal_exhaustive(g1, g2));
        (fast ? equal : differ)++;
    }
    EXPECT_GT(equal, 30);
    EXPECT_GT(differ, 30);
}
