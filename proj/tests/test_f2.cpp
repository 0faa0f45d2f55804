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

#include "phocs/error.hpp"
#include "phocs/f2.hpp"

using namespace phocs;

namespace {

BitMatrix rows(std::initializer_list<const char *> r) {
    std::vector<std::string> v(r.begin(), r.end());
    return BitMatrix::from_rows(v, v.empty() ? 0 : v[0].size());
}

BitMatrix random_matrix(std::mt19937_64 &rng, size_t r, size_t c) {
    BitMatrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < c; ++j) {
            m.set(i, j, rng() & 1);
        }
    }
    return m;
}

BitVector random_vector(std::mt19937_64 &rng, size_t n) {
    BitVector v(n);
    for (size_t i = 0; i < n; ++i) {
        v.set(i, rng() & 1);
    }
    return v;
}

BitMatrix random_invertible(std::mt19937_64 &rng, size_t n) {
    for (;;) {
        BitMatrix m = random_matrix(rng, n, n);
        if (m.rank() == n) {
            return m;
        }
    }
}

}  // namespace

TEST(BitVector, StringRoundTrip) {
    BitVector v = BitVector::from_string("10110");
    EXPECT_EQ(v.size(), 5u);
    EXPECT_TRUE(v.get(0));
    EXPECT_FALSE(v.get(1));
    EXPECT_EQ(v.to_string(), "10110");
    EXPECT_EQ(v.popcount(), 3u);
}

TEST(BitVector, WideVectorsKeepTailClear) {
    BitVector v(130);
    for (size_t i = 0; i < 130; ++i) {
        v.set(i, true);
    }
    EXPECT_EQ(v.popcount(), 130u);
    EXPECT_EQ(v.ones().size(), 130u);
    BitVector w = v.slice(1, 129);
    EXPECT_EQ(w.popcount(), 128u);
    w.push_back(false);
    EXPECT_EQ(w.size(), 129u);
    EXPECT_EQ(w.popcount(), 128u);
}

TEST(ColumnReduction, AlreadyReduced) {
    ColumnReduction cr = rref_with_transform(rows({"10", "01"}));
    EXPECT_EQ(cr.reduced, rows({"10", "01"}));
    EXPECT_EQ(cr.transform, BitMatrix::identity(2));
    EXPECT_EQ(cr.profile, (std::vector<size_t>{0, 1}));
}

TEST(ColumnReduction, UpperTriangular) {
    BitMatrix m = rows({"11", "01"});
    ColumnReduction cr = rref_with_transform(m);
    EXPECT_EQ(cr.reduced, rows({"10", "01"}));
    EXPECT_EQ(cr.transform, rows({"11", "01"}));
    EXPECT_EQ(m * cr.transform, cr.reduced);
}

TEST(ColumnReduction, ZeroMatrix) {
    ColumnReduction cr = rref_with_transform(BitMatrix(2, 2));
    EXPECT_TRUE(cr.reduced.is_zero());
    EXPECT_TRUE(cr.profile.empty());
    EXPECT_EQ(cr.transform, BitMatrix::identity(2));
}

TEST(ColumnReduction, RandomMatricesSatisfyContract) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        size_t r = rng() % 9, c = rng() % 9;
        BitMatrix m = random_matrix(rng, r, c);
        ColumnReduction cr = rref_with_transform(m);
        ASSERT_EQ(m * cr.transform, cr.reduced);
        ASSERT_EQ(cr.transform * inverse(cr.transform), BitMatrix::identity(c));
        ASSERT_TRUE(is_reduced_column_echelon(cr.reduced));
        ASSERT_EQ(cr.profile.size(), m.rank());
        for (size_t k = 1; k < cr.profile.size(); ++k) {
            ASSERT_LT(cr.profile[k - 1], cr.profile[k]);
        }
    }
}

TEST(Inverse, Examples) {
    EXPECT_EQ(inverse(BitMatrix::identity(3)), BitMatrix::identity(3));
    EXPECT_EQ(inverse(rows({"11", "01"})), rows({"11", "01"}));
    try {
        inverse(rows({"11", "11"}));
        FAIL() << "expected SingularMatrix";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
    }
}

TEST(Inverse, TransposeExamples) {
    EXPECT_EQ(inverse_transpose(BitMatrix::identity(2)), BitMatrix::identity(2));
    EXPECT_EQ(inverse_transpose(rows({"11", "01"})), rows({"10", "11"}));
    EXPECT_EQ(inverse_transpose(rows({"01", "10"})), rows({"01", "10"}));
}

TEST(Inverse, RandomInvolution) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = 1 + rng() % 10;
        BitMatrix a = random_invertible(rng, n);
        ASSERT_EQ(inverse(inverse(a)), a);
        ASSERT_EQ(inverse_transpose(a), inverse(a.transpose()));
        ASSERT_EQ(a * inverse(a), BitMatrix::identity(n));
    }
}

TEST(InnerProduct, Bilinear) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        size_t n = 1 + rng() % 150;
        BitVector u = random_vector(rng, n), v = random_vector(rng, n), w = random_vector(rng, n);
        ASSERT_EQ(dot(u ^ v, w), dot(u, w) != dot(v, w));
    }
}

TEST(Solve, FindsSolutionsAndNullspace) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        BitMatrix a = random_matrix(rng, r, c);
        BitVector x = random_vector(rng, c);
        BitVector b = a * x;
        auto y = solve(a, b);
        ASSERT_TRUE(y.has_value());
        ASSERT_EQ(a * *y, b);
        std::vector<BitVector> ns = nullspace(a);
        ASSERT_EQ(ns.size(), c - a.rank());
        for (const BitVector &k : ns) {
            ASSERT_TRUE((a * k).is_zero());
        }
    }
    EXPECT_FALSE(solve(rows({"10", "10"}), BitVector::from_string("01")).has_value());
}
