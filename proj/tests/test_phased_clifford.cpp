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

#include <random>
#include <sstream>

#include "phocs/dense.hpp"
#include "phocs/error.hpp"
#include "phocs/phased_clifford.hpp"
#include "phocs/selfcheck.hpp"

using namespace phocs;

namespace {

PauliOperator P(const char *text, size_t n) {
    return PauliOperator::parse(text, n);
}

PhasedBruhat gate(const char *name, std::vector<size_t> qubits, size_t n) {
    return apply_gate(PhasedBruhat::identity(n), name, qubits);
}

ExactScalar w(int k) {
    return ExactScalar::omega_power(k);
}

DenseMatrix hadamard_all(size_t n) {
    DenseMatrix h = DenseMatrix::identity(n);
    for (size_t q = 0; q < n; ++q) {
        h = gate_matrix("H", {q}, n) * h;
    }
    return h;
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

}  // namespace

TEST(PhasedBruhat, Identity) {
    EXPECT_EQ(PhasedBruhat::identity(0).dense().a, std::vector<ExactScalar>{ExactScalar(1)});
    EXPECT_EQ(PhasedBruhat::identity(1).dense(), DenseMatrix::identity(1));
    EXPECT_EQ(PhasedBruhat::identity(2).dense(), DenseMatrix::identity(2));
}

TEST(PhasedBruhat, InsertQubit) {
    EXPECT_EQ(insert_qubit(PhasedBruhat::identity(1), 1).dense(), DenseMatrix::identity(2));
    EXPECT_EQ(insert_qubit(gate("HTILDE", {0}, 1), 0).dense(), gate_matrix("HTILDE", {1}, 2));
    EXPECT_EQ(insert_qubit(gate("S", {0}, 1), 1).dense(), gate_matrix("S", {0}, 2));
    EXPECT_THROW(insert_qubit(PhasedBruhat::identity(1), 3), Error);
}

TEST(PhasedBruhat, LeftMulPauliExamples) {
    PhasedBruhat z = left_mul_pauli(PhasedBruhat::identity(1), P("Z0", 1));
    EXPECT_EQ(z.pauli, P("Z0", 1));
    EXPECT_EQ(z.m, 0);
    PhasedBruhat h = gate("HTILDE", {0}, 1);
    EXPECT_EQ(left_mul_pauli(h, P("Y0", 1)).dense(), pauli_matrix(P("Y0", 1)) * h.dense());
    EXPECT_EQ(left_mul_pauli(PhasedBruhat::identity(2), P("X0*X1", 2)).pauli, P("X0*X1", 2));
}

TEST(PhasedBruhat, LeftMulPauliRandom) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 1 + rng() % 4;
        PhasedBruhat c = random_clifford(rng, n, 6);
        PauliOperator q = random_hermitian_pauli(rng, n);
        q.s = (q.s + (rng() & 1)) & 3;
        ASSERT_EQ(left_mul_pauli(c, q).dense(), pauli_matrix(q) * c.dense());
    }
}

TEST(LeftMulExponent, Examples) {
    PhasedBruhat a = left_mul_exponent(PhasedBruhat::identity(1), 1, P("Z0", 1));
    EXPECT_EQ(a.m, 1);
    EXPECT_EQ(a.up.dense(), gate_matrix("SDG", {0}, 1));
    EXPECT_EQ(a.dense(), exponent_matrix(1, P("Z0", 1)));

    PhasedBruhat h = gate("HTILDE", {0}, 1);
    PhasedBruhat b = left_mul_exponent(h, 1, P("Y0", 1));
    EXPECT_EQ(b.dense(), exponent_matrix(1, P("Y0", 1)) * h.dense());
    EXPECT_EQ(b.dense(), pauli_matrix(P("Z0", 1)).scaled(w(1)));

    PhasedBruhat c = left_mul_exponent(PhasedBruhat::identity(2), 1, P("Z0*Z1", 2));
    EXPECT_TRUE(c.hset.is_zero());
    DenseMatrix cx = gate_matrix("CX", {0, 1}, 2);
    EXPECT_EQ(c.dense(), cx * exponent_matrix(1, P("Z1", 2)) * cx);

    EXPECT_THROW(left_mul_exponent(PhasedBruhat::identity(1), 1, P("+I", 1)), Error);
    EXPECT_THROW(left_mul_exponent(PhasedBruhat::identity(1), 1, P("Z0", 2)), Error);
}

TEST(LeftMulExponent, RandomDense) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = 1 + rng() % 4;
        PhasedBruhat c = PhasedBruhat::identity(n);
        DenseMatrix d = DenseMatrix::identity(n);
        for (int step = 0; step < 12; ++step) {
            PauliOperator p = random_hermitian_pauli(rng, n);
            int sign = (rng() & 1) ? 1 : -1;
            c = left_mul_exponent(c, sign, p);
            d = exponent_matrix(sign, p) * d;
            ASSERT_EQ(c.dense(), d) << "n=" << n << " step " << step << " " << p.to_string();
        }
    }
}

TEST(Gates, RandomSequencesMatchDense) {
    std::mt19937_64 rng(43);
    const char *g1[] = {"H", "HTILDE", "S", "SDG", "X", "Y", "Z"};
    const char *g2[] = {"CX", "CZ", "SWAP"};
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 1 + rng() % 4;
        PhasedBruhat c = PhasedBruhat::identity(n);
        DenseMatrix d = DenseMatrix::identity(n);
        for (int step = 0; step < 10; ++step) {
            std::string name;
            std::vector<size_t> qs;
            if (n >= 2 && rng() % 2) {
                size_t a = rng() % n, b;
                do {
                    b = rng() % n;
                } while (b == a);
                name = g2[rng() % 3];
                qs = {a, b};
            } else {
                name = g1[rng() % 7];
                qs = {rng() % n};
            }
            c = apply_gate(c, name, qs);
            d = gate_matrix(name, qs, n) * d;
            ASSERT_EQ(c.dense(), d) << name;
        }
    }
}

TEST(Conjugation, Examples) {
    EXPECT_EQ(preimage(PhasedBruhat::identity(1), P("Z0", 1)), P("Z0", 1));
    PhasedBruhat h = gate("HTILDE", {0}, 1);
    EXPECT_EQ(preimage(h, P("Z0", 1)), P("X0", 1));
    EXPECT_EQ(preimage(h, P("Y0", 1)), P("-Y0", 1));
    EXPECT_EQ(image(PhasedBruhat::identity(1), P("X0", 1)), P("X0", 1));
    PhasedBruhat ey = left_mul_exponent(PhasedBruhat::identity(1), 1, P("Y0", 1));
    EXPECT_EQ(image(ey, P("Z0", 1)), P("-X0", 1));
    EXPECT_EQ(image(gate("S", {0}, 1), P("X0", 1)), P("Y0", 1));
}

TEST(Conjugation, RandomDenseAndRoundTrip) {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 1 + rng() % 4;
        PhasedBruhat c = random_clifford(rng, n, 10);
        DenseMatrix d = c.dense(), dd = d.adjoint();
        PauliOperator p = random_hermitian_pauli(rng, n);
        p.s = (p.s + (rng() & 3)) & 3;
        ASSERT_EQ(pauli_matrix(image(c, p)), d * pauli_matrix(p) * dd);
        ASSERT_EQ(pauli_matrix(preimage(c, p)), dd * pauli_matrix(p) * d);
        ASSERT_EQ(image(c, preimage(c, p)), p);
    }
}

TEST(BasisAmplitude, Examples) {
    BitVector zero = BitVector::from_string("0"), one = BitVector::from_string("1");
    EXPECT_EQ(basis_amplitude(PhasedBruhat::identity(1), zero, zero), ExactScalar(1));
    EXPECT_EQ(basis_amplitude(gate("HTILDE", {0}, 1), zero, zero), w(1) * ExactScalar::inv_sqrt2_power(1));
    EXPECT_EQ(basis_amplitude(gate("S", {0}, 1), one, one), ExactScalar::i_power(1));
}

TEST(BasisAmplitude, MatchesDenseAndIsNormalized) {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = 1 + rng() % 3;
        PhasedBruhat c = random_clifford(rng, n, 10);
        DenseMatrix d = c.dense();
        for (uint64_t i = 0; i < d.dim; ++i) {
            BitVector bi = BitVector::from_uint64(n, i);
            ExactScalar total(0);
            for (uint64_t o = 0; o < d.dim; ++o) {
                ExactScalar amp = basis_amplitude(c, bi, BitVector::from_uint64(n, o));
                ASSERT_EQ(amp, d.at(o, i));
                total += amp.norm2();
            }
            ASSERT_EQ(total, ExactScalar(1));
            ASSERT_FALSE(d.at(support_point(c, bi).to_uint64(), i).is_zero());
        }
    }
}

TEST(StatesEqual, Examples) {
    BitVector zero = BitVector::from_string("0"), one = BitVector::from_string("1");
    BasisImageState id0{PhasedBruhat::identity(1), zero};
    EXPECT_TRUE(states_equal(id0, id0));
    PhasedBruhat h = gate("HTILDE", {0}, 1);
    EXPECT_TRUE(states_equal({left_mul_pauli(h, P("Z0", 1)), zero}, {h, one}));
    PhasedBruhat minus_x = left_mul_pauli(PhasedBruhat::identity(1), P("X0", 1));
    minus_x.add_phase(4);
    EXPECT_FALSE(states_equal(id0, {minus_x, zero}));
}

TEST(StatesEqual, AgreesWithDense) {
    std::mt19937_64 rng(46);
    int up_to_phase = 0;
    for (int trial = 0; trial < 500; ++trial) {
        size_t n = 1 + rng() % 4;
        BasisImageState u{random_clifford(rng, n, 8), BitVector::from_uint64(n, rng() % (1u << n))};
        BasisImageState v;
        switch (trial % 3) {
            case 0:
                v = {random_clifford(rng, n, 8), BitVector::from_uint64(n, rng() % (1u << n))};
                break;
            case 1: {
                // same vector, different representation
                PauliOperator p = random_hermitian_pauli(rng, n);
                PhasedBruhat c = left_mul_exponent(left_mul_exponent(u.c, 1, p), -1, p);
                v = {c, u.b};
                break;
            }
            default:
                v = u;
                v.c.add_phase(1 + static_cast<int>(rng() % 7));
                ++up_to_phase;
                break;
        }
        ASSERT_EQ(states_equal(u, v), states_equal_exact(dense_state(u), dense_state(v)));
    }
    EXPECT_GT(up_to_phase, 100);
}

TEST(CssOrbit, Examples) {
    CssOrbit a = css_orbit(P("Z0*Z1", 2));
    EXPECT_EQ(a.circuit.size(), 1u);
    EXPECT_EQ(a.canonical, P("Z0", 2));
    CssOrbit b = css_orbit(P("X0*X1*X2", 3));
    EXPECT_EQ(b.circuit.size(), 1u);
    EXPECT_EQ(b.canonical, P("X0", 3));
    CssOrbit c = css_orbit(P("X0*Z1", 2));
    EXPECT_EQ(c.circuit.size(), 2u);
    EXPECT_TRUE(c.canonical == P("Y0*Y1", 2) || c.canonical == P("-Y0*Y1", 2));
    EXPECT_THROW(css_orbit(P("+iZ0", 1)), Error);
}

TEST(CssOrbit, ExhaustiveUpToThreeQubits) {
    for (size_t n = 1; n <= 3; ++n) {
        for (uint64_t v = 0; v < (uint64_t(1) << (2 * n)); ++v) {
            for (int sign = 0; sign < 2; ++sign) {
                PauliOperator p(n);
                for (size_t q = 0; q < n; ++q) {
                    p.x.set(q, (v >> (2 * q)) & 1);
                    p.z.set(q, (v >> (2 * q + 1)) & 1);
                }
                p.s = static_cast<uint8_t>(((p.x & p.z).popcount() + 2 * sign) & 3);
                auto bad = verify_orbit(p);
                ASSERT_FALSE(bad.has_value()) << *bad;
            }
        }
    }
}

TEST(BruhatTable, GeneratedEntriesVerify) {
    BruhatTable t = generate_table();
    EXPECT_EQ(t.size(), 48u);
    EXPECT_TRUE(verify_table(t).empty());
    std::stringstream ss;
    write_table(ss, t);
    BruhatTable back = read_table(ss);
    EXPECT_EQ(back.size(), 48u);
    for (const auto &[name, entry] : t.entries) {
        EXPECT_TRUE(back.lookup(entry.first) == entry.second) << name;
    }
    EXPECT_TRUE(verify_table(back).empty());
}

TEST(BruhatTable, Entries) {
    const BruhatTable &t = shared_table();
    TableKey k1{1, "I", "Z2"};
    EXPECT_EQ(t.lookup(k1).dense(), exponent_matrix(1, P("Z2", 4)) * gate_matrix("HTILDE", {2}, 4));
    TableKey k2{-1, "Z0", "I"};
    const PhasedBruhat &e = t.lookup(k2);
    EXPECT_EQ(e.m, 7);
    EXPECT_EQ(e.up.dense(), gate_matrix("S", {0}, 4));
    EXPECT_EQ(e.dense(), exponent_matrix(-1, P("Z0", 4)));
}

TEST(BruhatTable, CorruptedFileFailsVerification) {
    std::stringstream ss;
    write_table(ss, shared_table());
    std::string text = ss.str();
    size_t pos = text.find("\nm ");
    ASSERT_NE(pos, std::string::npos);
    text[pos + 3] = text[pos + 3] == '0' ? '1' : '0';
    std::istringstream in(text);
    std::vector<std::string> bad = verify_table(read_table(in));
    EXPECT_EQ(bad.size(), 1u);
}

TEST(BruhatDecompose, Examples) {
    EXPECT_TRUE(bruhat_decompose_small(DenseMatrix::identity(2)) == PhasedBruhat::identity(2));
    PhasedBruhat h = bruhat_decompose_small(gate_matrix("HTILDE", {0}, 1));
    EXPECT_EQ(h.m, 0);
    EXPECT_EQ(h.hset.to_string(), "1");
    EXPECT_TRUE(h.up.is_identity() && h.vp.is_identity() && h.pauli.is_identity());
    DenseMatrix u = gate_matrix("S", {0}, 1) * gate_matrix("HTILDE", {0}, 1) * gate_matrix("X", {0}, 1);
    EXPECT_EQ(bruhat_decompose_small(u).dense(), u);
    DenseMatrix t = DenseMatrix::identity(1);
    t.at(1, 1) = w(1);
    EXPECT_THROW(bruhat_decompose_small(t), Error);
}

TEST(BruhatDecompose, RandomCliffords) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = 1 + rng() % 3;
        DenseMatrix d = random_clifford(rng, n, 10).dense();
        ASSERT_EQ(bruhat_decompose_small(d).dense(), d);
    }
}

TEST(Exponents, Examples) {
    ExponentDecomposition id = decompose_into_exponents(PhasedBruhat::identity(2));
    EXPECT_TRUE(id.seq.empty());
    EXPECT_TRUE(id.residual.is_identity());
    ExponentDecomposition s = decompose_into_exponents(gate("S", {0}, 1));
    ASSERT_EQ(s.seq.size(), 1u);
    EXPECT_EQ(s.seq[0].sign * (s.seq[0].p.s == 2 ? -1 : 1), -1);
    EXPECT_TRUE(omega_ratio(dense_product(s, 1), gate_matrix("S", {0}, 1)).has_value());
    PhasedBruhat cx_form = PhasedBruhat::identity(2);
    cx_form.up = PhaseCssTableau::css(BitMatrix::from_rows({"10", "11"}, 2));
    ASSERT_EQ(cx_form.dense(), gate_matrix("CX", {0, 1}, 2));
    ExponentDecomposition cx = decompose_into_exponents(cx_form);
    EXPECT_LE(cx.seq.size(), 3u);
    EXPECT_TRUE(omega_ratio(dense_product(cx, 2), gate_matrix("CX", {0, 1}, 2)).has_value());
}

TEST(Exponents, RandomUpToPhase) {
    std::mt19937_64 rng(48);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 1 + rng() % 4;
        PhasedBruhat c = random_clifford(rng, n, 15);
        ExponentDecomposition d = decompose_into_exponents(c);
        ASSERT_LE(d.seq.size(), 10 * n * n + 4 * n);
        ASSERT_TRUE(omega_ratio(dense_product(d, n), c.dense()).has_value());
    }
}

TEST(CssDual, HadamardConjugationTransposesInverse) {
    std::mt19937_64 rng(49);
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = 1 + rng() % 4;
        BitMatrix a = random_invertible(rng, n);
        DenseMatrix h = hadamard_all(n);
        ASSERT_EQ(h * PhaseCssTableau::css(a).dense() * h, PhaseCssTableau::css(inverse_transpose(a)).dense());
    }
}

TEST(PhaseCssTableau, FixesZeroState) {
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = 1 + rng() % 4;
        std::vector<uint8_t> d(n);
        BitMatrix e(n, n);
        for (size_t i = 0; i < n; ++i) {
            d[i] = rng() & 3;
            for (size_t j = i + 1; j < n; ++j) {
                bool b = rng() & 1;
                e.set(i, j, b);
                e.set(j, i, b);
            }
        }
        PhaseCssTableau t = PhaseCssTableau::from_parts(random_invertible(rng, n), d, e);
        ASSERT_EQ(t.dense().column(0), DenseState(n));
        ASSERT_TRUE(t.dense().is_unitary());
        PhaseCssTableau back = PhaseCssTableau::from_images(t.xi(), t.eta(), t.gamma());
        ASSERT_TRUE(back == t);
        ASSERT_EQ(t.compose(t.adjoint()).dense(), DenseMatrix::identity(n));
    }
}
