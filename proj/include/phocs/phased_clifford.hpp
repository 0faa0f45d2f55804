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

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "phocs/dense.hpp"
#include "phocs/exact.hpp"
#include "phocs/f2.hpp"
#include "phocs/pauli.hpp"

namespace phocs {

/// Phase-CSS unitary U|x> = i^{q(x)} |F x> with
/// q(x) = sum_j d_j x_j + 2 sum_{j<k} E_jk x_j x_k (mod 4). Fixes |0...0> exactly.
///
/// Serialized through its X-images: xi = F, eta = F^{-T} G, gamma = d, where G is the
/// symmetric matrix with diagonal d mod 2 and off-diagonal E.
class PhaseCssTableau {
   public:
    PhaseCssTableau() = default;
    explicit PhaseCssTableau(size_t n);
    /// Permutation unitary |x> -> |F x>.
    static PhaseCssTableau css(const BitMatrix &f);
    /// Diagonal unitary i^{q(x)}; off-diagonal part of `e` is used, must be symmetric.
    static PhaseCssTableau diagonal(std::vector<uint8_t> d, const BitMatrix &e);
    static PhaseCssTableau from_parts(const BitMatrix &f, std::vector<uint8_t> d, const BitMatrix &e);
    static PhaseCssTableau from_images(const BitMatrix &xi, const BitMatrix &eta, const std::vector<uint8_t> &gamma);

    size_t num_qubits() const noexcept {
        return f_.rows();
    }
    const BitMatrix &f() const noexcept {
        return f_;
    }
    const BitMatrix &f_inverse() const noexcept {
        return finv_;
    }
    const std::vector<uint8_t> &d() const noexcept {
        return d_;
    }
    /// Symmetric, zero diagonal.
    const BitMatrix &e() const noexcept {
        return e_;
    }
    BitMatrix gamma_hat() const;
    const BitMatrix &xi() const noexcept {
        return f_;
    }
    BitMatrix eta() const;
    const std::vector<uint8_t> &gamma() const noexcept {
        return d_;
    }

    /// q(x) in Z4.
    int phase_at(const BitVector &x) const;
    /// U p U^dagger.
    PauliOperator conjugate(const PauliOperator &p) const;
    /// U^dagger p U.
    PauliOperator conjugate_inverse(const PauliOperator &p) const;
    /// this * right.
    PhaseCssTableau compose(const PhaseCssTableau &right) const;
    PhaseCssTableau adjoint() const;
    PhaseCssTableau insert_qubit(size_t pos) const;
    /// New qubit k is old qubit order[k].
    PhaseCssTableau permuted(const std::vector<size_t> &order) const;
    PhaseCssTableau direct_sum(const PhaseCssTableau &other) const;
    bool is_identity() const;
    bool operator==(const PhaseCssTableau &other) const;

    void apply(DenseState &st) const;
    DenseMatrix dense() const;

   private:
    void refresh();
    BitMatrix f_;
    BitMatrix finv_;
    std::vector<uint8_t> d_;
    BitMatrix e_;
};

/// w^m U_P (h~ on hset) P V_P with w = e^{i pi/4}, h~ = w H. The Pauli is stored with s = 0.
struct PhasedBruhat {
    int m = 0;
    PhaseCssTableau up;
    BitVector hset;
    PauliOperator pauli;
    PhaseCssTableau vp;

    PhasedBruhat() = default;
    static PhasedBruhat identity(size_t n);
    size_t num_qubits() const noexcept {
        return hset.size();
    }
    /// Adds k to m (mod 8).
    void add_phase(int k) {
        m = ((m + k) % 8 + 8) % 8;
    }
    bool operator==(const PhasedBruhat &other) const;
    void apply(DenseState &st) const;
    DenseMatrix dense() const;
};

/// The state c|b>.
struct BasisImageState {
    PhasedBruhat c;
    BitVector b;
};

PhasedBruhat insert_qubit(const PhasedBruhat &c, size_t pos);
PhasedBruhat permute_qubits(const PhasedBruhat &c, const std::vector<size_t> &order);
/// a on the low qubits, b on the high qubits.
PhasedBruhat tensor(const PhasedBruhat &a, const PhasedBruhat &b);

PhasedBruhat left_mul_pauli(const PhasedBruhat &c, const PauliOperator &q);
PhasedBruhat left_mul_exponent(const PhasedBruhat &c, const PauliExponent &e);
PhasedBruhat left_mul_exponent(const PhasedBruhat &c, int sign, const PauliOperator &q);
/// Left-multiplies by a named gate (H, S, SDG, X, Y, Z, CX, CZ, SWAP, HTILDE).
PhasedBruhat apply_gate(const PhasedBruhat &c, const std::string &name, const std::vector<size_t> &qubits);

/// H p H on the qubits set in `mask`.
PauliOperator hadamard_conjugate(PauliOperator p, const BitVector &mask);
/// c^dagger p c.
PauliOperator preimage(const PhasedBruhat &c, const PauliOperator &p);
/// c p c^dagger.
PauliOperator image(const PhasedBruhat &c, const PauliOperator &p);
/// <b_out| c |b_in>.
ExactScalar basis_amplitude(const PhasedBruhat &c, const BitVector &b_in, const BitVector &b_out);
/// A basis vector with nonzero amplitude in c|b>.
BitVector support_point(const PhasedBruhat &c, const BitVector &b);
bool states_equal(const BasisImageState &u, const BasisImageState &v);
DenseState dense_state(const BasisImageState &st);

/// Lambda(X^a, Z^b) with <a,b> = 0: the permutation |y> -> |y + a <b,y>>.
struct CssGate {
    BitVector a;
    BitVector b;
    BitMatrix matrix() const;
    ControlledPauli as_controlled_pauli() const;
};

struct CssOrbit {
    /// Application order: circuit[0] acts first.
    std::vector<CssGate> circuit;
    PauliOperator canonical;
};

CssOrbit css_orbit(const PauliOperator &p);
/// True if p is one of +-I, +-X_j, +-Y_j, +-Z_j, +-Y_j Y_k.
bool is_orbit_canonical(const PauliOperator &p);
/// i^s X^{g x} Z^{g^{-T} z}: conjugation by the permutation unitary of g.
PauliOperator css_conjugate(const BitMatrix &g, const PauliOperator &p);

struct TableKey {
    int sign = 1;
    /// One of I, X0, Y0, Z0, Y0*Y1.
    std::string qi;
    /// One of I, X2, Y2, Z2, Y2*Y3.
    std::string qh;
    std::string to_string() const;
    bool operator<(const TableKey &o) const {
        return to_string() < o.to_string();
    }
};

/// Decompositions of e^{sign i pi/4 Q'} times h~ on Q'_H's support, on four slots.
struct BruhatTable {
    std::map<std::string, std::pair<TableKey, PhasedBruhat>> entries;
    const PhasedBruhat &lookup(const TableKey &key) const;
    size_t size() const {
        return entries.size();
    }
};

std::vector<TableKey> table_keys();
/// Dense target of a key on four slots.
DenseMatrix table_target(const TableKey &key);
BruhatTable generate_table();
/// Process-wide table, generated on first use.
const BruhatTable &shared_table();
void write_table(std::ostream &out, const BruhatTable &table);
BruhatTable read_table(std::istream &in);
/// Keys whose entries fail dense verification, plus missing or extra keys.
std::vector<std::string> verify_table(const BruhatTable &table);

PhasedBruhat bruhat_decompose_small(const DenseMatrix &u);

struct ExponentDecomposition {
    std::vector<PauliExponent> seq;
    PauliOperator residual;
};
/// residual * seq[k-1] * ... * seq[0] equals c up to a power of w; seq[0] acts first.
ExponentDecomposition decompose_into_exponents(const PhasedBruhat &c);
DenseMatrix dense_product(const ExponentDecomposition &d, size_t n);

void write_bruhat(std::ostream &out, const PhasedBruhat &c, const std::string &prefix);
/// Reads the fields written by write_bruhat from a name -> value map.
PhasedBruhat read_bruhat(size_t n, const std::map<std::string, std::string> &fields, const std::string &prefix);

}  // namespace phocs
