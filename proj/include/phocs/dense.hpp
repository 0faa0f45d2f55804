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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phocs/exact.hpp"
#include "phocs/pauli.hpp"

namespace phocs {

constexpr size_t kDenseMaxQubits = 8;

/// State vector; bit q of a basis index is qubit q.
struct DenseState {
    size_t n = 0;
    std::vector<ExactScalar> amp;

    DenseState() : amp(1, ExactScalar(1)) {
    }
    /// |0...0> on n qubits.
    explicit DenseState(size_t qubits);
    static DenseState basis(size_t qubits, uint64_t index);
    bool operator==(const DenseState &other) const = default;
    ExactScalar norm2() const;
    std::string to_string() const;
};

/// Square matrix on n qubits, row-major, entry (row, col) = <row|M|col>.
struct DenseMatrix {
    size_t n = 0;
    size_t dim = 1;
    std::vector<ExactScalar> a;

    DenseMatrix() : a(1, ExactScalar(0)) {
    }
    explicit DenseMatrix(size_t qubits);
    static DenseMatrix identity(size_t qubits);
    const ExactScalar &at(size_t r, size_t c) const {
        return a[r * dim + c];
    }
    ExactScalar &at(size_t r, size_t c) {
        return a[r * dim + c];
    }
    bool operator==(const DenseMatrix &other) const = default;
    DenseMatrix operator*(const DenseMatrix &other) const;
    DenseState operator*(const DenseState &v) const;
    DenseMatrix adjoint() const;
    DenseMatrix scaled(const ExactScalar &k) const;
    bool is_unitary() const;
    DenseState column(size_t c) const;
};

// In-place state updates. Qubit indices are 0-based.
void apply_pauli(DenseState &st, const PauliOperator &p);
/// e^{sign i pi/4 p} for Hermitian p.
void apply_exponent(DenseState &st, int sign, const PauliOperator &p);
void apply_h(DenseState &st, size_t q);
void apply_htilde(DenseState &st, size_t q);
void apply_s(DenseState &st, size_t q, bool dagger);
void apply_cx(DenseState &st, size_t control, size_t target);
void apply_cz(DenseState &st, size_t a, size_t b);
void apply_swap(DenseState &st, size_t a, size_t b);
/// Named gate: H, S, SDG, X, Y, Z, CX, CZ, SWAP, HTILDE.
void apply_named_gate(DenseState &st, const std::string &name, const std::vector<size_t> &qubits);
void apply_controlled_pauli(DenseState &st, const ControlledPauli &g);
/// Projects onto the (-1)^outcome eigenspace of p without normalizing: (I + (-1)^o p)/2.
void apply_projector(DenseState &st, const PauliOperator &p, bool outcome);

/// Builds the matrix whose columns are `op` applied to basis states.
template <typename Op>
DenseMatrix matrix_of(size_t n, Op op) {
    DenseMatrix m(n);
    for (size_t c = 0; c < m.dim; ++c) {
        DenseState st = DenseState::basis(n, c);
        op(st);
        for (size_t r = 0; r < m.dim; ++r) {
            m.at(r, c) = st.amp[r];
        }
    }
    return m;
}

DenseMatrix gate_matrix(const std::string &name, const std::vector<size_t> &qubits, size_t n);
DenseMatrix pauli_matrix(const PauliOperator &p);
DenseMatrix exponent_matrix(int sign, const PauliOperator &p);
DenseMatrix controlled_pauli_matrix(const ControlledPauli &g);

/// If m = k * P for a Pauli P (returned with s = 0), gives (k, P).
std::optional<std::pair<ExactScalar, PauliOperator>> as_scaled_pauli(const DenseMatrix &m);

/// Exact amplitude-wise comparison.
bool states_equal_exact(const DenseState &u, const DenseState &v);
/// Smallest k with u == w^k v, if any.
std::optional<int> omega_ratio(const DenseState &u, const DenseState &v);
std::optional<int> omega_ratio(const DenseMatrix &u, const DenseMatrix &v);
/// Tensor product with `a` on the low qubits.
DenseState tensor(const DenseState &a, const DenseState &b);

}  // namespace phocs
