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

#include <map>
#include <random>

#include "phocs/circuit.hpp"
#include "phocs/dense.hpp"
#include "phocs/error.hpp"
#include "phocs/oracle.hpp"
#include "phocs/random_circuit.hpp"

using namespace phocs;

namespace {

ErrorCode parse_error(const char *text) {
    try {
        parse_circuit(text);
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "parsed\n" << text;
    return ErrorCode::FormatError;
}

std::string parse_message(const char *text) {
    try {
        parse_circuit(text);
    } catch (const Error &e) {
        return e.what();
    }
    return "";
}

std::vector<OpKind> kinds(const Circuit &c) {
    std::vector<OpKind> out;
    for (const Instruction &i : c.ops) {
        out.push_back(i.kind);
    }
    return out;
}

std::string random_gates(std::mt19937_64 &rng, size_t n, size_t count) {
    static const char *one[] = {"H", "S", "SDG", "X", "Y", "Z", "HTILDE"};
    static const char *two[] = {"CX", "CZ", "SWAP"};
    std::string text;
    for (size_t i = 0; i < count; ++i) {
        if (n >= 2 && rng() % 2) {
            size_t a = rng() % n, b;
            do {
                b = rng() % n;
            } while (b == a);
            text += std::string(two[rng() % 3]) + " " + std::to_string(a) + " " + std::to_string(b) + "\n";
        } else {
            text += std::string(one[rng() % 7]) + " " + std::to_string(rng() % n) + "\n";
        }
    }
    return text;
}

}  // namespace

TEST(Parse, Examples) {
    Circuit a = parse_circuit("qubits 1\nH 0\nM Z0\n");
    EXPECT_EQ(kinds(a), (std::vector<OpKind>{OpKind::Alloc, OpKind::Gate, OpKind::Measure}));
    EXPECT_EQ(a.num_outcomes, 1u);

    Circuit b = parse_circuit("qubits 1\nM Z0\nCOND X0 IF 0 == 1\n");
    ASSERT_EQ(b.ops.back().kind, OpKind::Cond);
    EXPECT_EQ(b.ops.back().outcomes, std::vector<size_t>{0});
    EXPECT_TRUE(b.ops.back().parity);

    EXPECT_EQ(parse_error("qubits 1\nCOND X0 IF 1 == 1\nM Z0\n"), ErrorCode::ForwardOutcomeReference);
}

TEST(Parse, Diagnostics) {
    EXPECT_EQ(parse_error(""), ErrorCode::SyntaxError);
    EXPECT_EQ(parse_error("qubits 1\nFOO 0\n"), ErrorCode::SyntaxError);
    EXPECT_EQ(parse_error("qubits 1\nH 1\n"), ErrorCode::UndeclaredQubit);
    EXPECT_EQ(parse_error("qubits 1\nFREE 0\nH 0\n"), ErrorCode::UndeclaredQubit);
    EXPECT_EQ(parse_error("qubits 1\nROT t Z0\nROT t X0\n"), ErrorCode::DuplicateRotationLabel);
    EXPECT_EQ(parse_error("qubits 1\nEXP + I\n"), ErrorCode::SyntaxError);
    EXPECT_EQ(parse_error("qubits 1\nM +iZ0\n"), ErrorCode::SyntaxError);
    EXPECT_EQ(parse_error("qubits 1\nCOND X0 IF @t == 1\n"), ErrorCode::SyntaxError);
    EXPECT_EQ(parse_error("qubits 2\nCX 0 0\n"), ErrorCode::SyntaxError);
    EXPECT_NE(parse_message("qubits 1\nH 0\nM  Q0\n").find("line 3, column 4"), std::string::npos);
}

TEST(Parse, CommentsAndAlloc) {
    Circuit c = parse_circuit("# setup\nqubits 1\n\nALLOC  # label 1\nCX 0 1\nFREE 0\nALLOC\n");
    EXPECT_EQ(c.num_labels, 3u);
    EXPECT_EQ(c.output_labels(), (std::vector<size_t>{1, 2}));
}

TEST(Print, RoundTrip) {
    std::mt19937_64 rng(81);
    RandomCircuitOptions opt;
    opt.max_rotations = 2;
    for (int trial = 0; trial < 300; ++trial) {
        std::string text = random_circuit_text(rng, opt);
        Circuit c = parse_circuit(text);
        std::string printed = print_circuit(c);
        Circuit back = parse_circuit(printed);
        ASSERT_EQ(print_circuit(back), printed) << text;
        ASSERT_EQ(printed, text);
        std::string lowered = print_circuit(lower_rotations(c));
        ASSERT_EQ(print_circuit(parse_circuit(lowered)), lowered);
    }
}

TEST(LowerRotations, Shape) {
    Circuit c = lower_rotations(parse_circuit("qubits 1\nROT t Z0\n"));
    EXPECT_FALSE(c.has_rotations());
    EXPECT_EQ(c.angles, std::vector<std::string>{"t"});
    ASSERT_EQ(c.ops.back().kind, OpKind::Cond);
    EXPECT_EQ(c.ops.back().angles, std::vector<size_t>{0});
    EXPECT_TRUE(c.ops.back().outcomes.empty());
    Circuit plain = parse_circuit("qubits 1\nH 0\n");
    EXPECT_EQ(print_circuit(lower_rotations(plain)), print_circuit(plain));
}

TEST(LowerRotations, PreservesDenseSemantics) {
    std::mt19937_64 rng(82);
    RandomCircuitOptions opt;
    opt.max_rotations = 3;
    for (int trial = 0; trial < 150; ++trial) {
        Circuit c = parse_circuit(random_circuit_text(rng, opt));
        Circuit lowered = lower_rotations(c);
        std::vector<DenseBranch> a = enumerate_dense(c), b = enumerate_dense(lowered);
        ASSERT_EQ(a.size(), b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            ASSERT_EQ(a[i].assignment, b[i].assignment);
            ASSERT_EQ(a[i].run.state, b[i].run.state);
            ASSERT_EQ(a[i].run.outcomes, b[i].run.outcomes);
            ASSERT_EQ(a[i].run.weight, b[i].run.weight);
        }
    }
}

TEST(ChoiClosure, Examples) {
    ExactScalar h = ExactScalar::inv_sqrt2_power(1);
    Circuit id = choi_closure(parse_circuit("qubits 1\ninputs 0\n"));
    EXPECT_TRUE(id.inputs.empty());
    DenseState bell(2);
    bell.amp = {h, 0, 0, h};
    EXPECT_EQ(run_dense(id, BitVector(0)).state, bell);

    Circuit plain = parse_circuit("qubits 1\nH 0\n");
    EXPECT_EQ(print_circuit(choi_closure(plain)), print_circuit(plain));

    Circuit z = choi_closure(parse_circuit("qubits 1\ninputs 0\nZ 0\n"));
    DenseState zbell(2);
    zbell.amp = {h, 0, 0, -h};
    EXPECT_EQ(run_dense(z, BitVector(0)).state, zbell);
}

TEST(ChoiClosure, DistinguishesUnitaries) {
    std::mt19937_64 rng(83);
    int equal = 0;
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 1 + rng() % 2;
        std::string header = "qubits " + std::to_string(n) + "\ninputs" + (n == 2 ? " 0 1" : " 0") + "\n";
        std::string g1 = random_gates(rng, n, 1 + rng() % 3), g2 = random_gates(rng, n, 1 + rng() % 3);
        if (trial % 4 == 0) {
            g2 = g1;
        }
        DenseMatrix u1 = DenseMatrix::identity(n), u2 = DenseMatrix::identity(n);
        for (auto [text, u] : {std::pair{&g1, &u1}, std::pair{&g2, &u2}}) {
            Circuit c = parse_circuit("qubits " + std::to_string(n) + "\n" + *text);
            for (const Instruction &ins : c.ops) {
                if (ins.kind == OpKind::Gate) {
                    *u = gate_matrix(ins.name, ins.qubits, n) * *u;
                }
            }
        }
        DenseState s1 = run_dense(choi_closure(parse_circuit(header + g1)), BitVector(0)).state;
        DenseState s2 = run_dense(choi_closure(parse_circuit(header + g2)), BitVector(0)).state;
        ASSERT_EQ(s1 == s2, u1 == u2) << g1 << "vs\n" << g2;
        equal += s1 == s2;
    }
    EXPECT_GT(equal, 40);
}
