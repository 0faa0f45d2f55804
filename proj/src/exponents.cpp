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

#include <variant>

#include "phocs/phased_clifford.hpp"

namespace phocs {

namespace {

using Item = std::variant<PauliExponent, PauliOperator>;

PauliOperator zz(size_t n, size_t a, char ka, size_t b, char kb) {
    return mul(PauliOperator::single(n, a, ka), PauliOperator::single(n, b, kb));
}

// Row operations (control, target) whose product, in application order, is |x> -> |F x>.
std::vector<std::pair<size_t, size_t>> cx_circuit(BitMatrix f) {
    size_t n = f.rows();
    std::vector<std::pair<size_t, size_t>> ops;
    auto add = [&](size_t c, size_t t) {
        f.row(t) ^= f.row(c);
        ops.emplace_back(c, t);
    };
    for (size_t j = 0; j < n; ++j) {
        if (!f.get(j, j)) {
            for (size_t r = j + 1; r < n; ++r) {
                if (f.get(r, j)) {
                    add(r, j);
                    break;
                }
            }
        }
        for (size_t i = 0; i < n; ++i) {
            if (i != j && f.get(i, j)) {
                add(j, i);
            }
        }
    }
    return {ops.rbegin(), ops.rend()};
}

void push_tableau(std::vector<Item> &items, const PhaseCssTableau &t) {
    size_t n = t.num_qubits();
    for (size_t j = 0; j < n; ++j) {
        switch (t.d()[j]) {
            case 1: items.emplace_back(PauliExponent{-1, PauliOperator::single(n, j, 'Z')}); break;
            case 2: items.emplace_back(PauliOperator::single(n, j, 'Z')); break;
            case 3: items.emplace_back(PauliExponent{1, PauliOperator::single(n, j, 'Z')}); break;
            default: break;
        }
        for (size_t k = j + 1; k < n; ++k) {
            if (t.e().get(j, k)) {
                items.emplace_back(PauliExponent{-1, PauliOperator::single(n, j, 'Z')});
                items.emplace_back(PauliExponent{-1, PauliOperator::single(n, k, 'Z')});
                items.emplace_back(PauliExponent{1, zz(n, j, 'Z', k, 'Z')});
            }
        }
    }
    for (auto [c, tq] : cx_circuit(t.f())) {
        items.emplace_back(PauliExponent{-1, PauliOperator::single(n, c, 'Z')});
        items.emplace_back(PauliExponent{-1, PauliOperator::single(n, tq, 'X')});
        items.emplace_back(PauliExponent{1, zz(n, c, 'Z', tq, 'X')});
    }
}

}  // namespace

ExponentDecomposition decompose_into_exponents(const PhasedBruhat &c) {
    size_t n = c.num_qubits();
    std::vector<Item> items;
    push_tableau(items, c.vp);
    items.emplace_back(c.pauli);
    for (size_t j : c.hset.ones()) {
        items.emplace_back(PauliOperator::single(n, j, 'Z'));
        items.emplace_back(PauliExponent{-1, PauliOperator::single(n, j, 'Y')});
    }
    push_tableau(items, c.up);

    ExponentDecomposition out;
    out.residual = PauliOperator(n);
    for (const Item &item : items) {
        if (const auto *q = std::get_if<PauliOperator>(&item)) {
            out.residual = mul(*q, out.residual);
        } else {
            PauliExponent e = std::get<PauliExponent>(item);
            if (comm(out.residual, e.p)) {
                e.sign = -e.sign;
            }
            out.seq.push_back(e);
        }
    }
    return out;
}

DenseMatrix dense_product(const ExponentDecomposition &d, size_t n) {
    DenseMatrix m = DenseMatrix::identity(n);
    for (const auto &e : d.seq) {
        m = exponent_matrix(e.sign, e.p) * m;
    }
    PauliOperator r = d.residual;
    if (r.num_qubits() == 0) {
        r = PauliOperator(n);
    }
    return pauli_matrix(r) * m;
}

}  // namespace phocs
