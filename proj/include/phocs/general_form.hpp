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

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "phocs/f2.hpp"
#include "phocs/phased_clifford.hpp"

namespace phocs {

/// Family of states i^{<p,r>} (-1)^{<Br+s,r>} c|A r> with outcomes v0 + M r.
///
/// The first n_angle coordinates of r are angle bits; the others are random
/// bits, one per outcome with q_k = 1/2.
struct GeneralForm {
    /// half[k] is true when outcome k is uniformly random (q_k = 1/2).
    std::vector<bool> half;
    PhasedBruhat c;
    BitMatrix a;
    BitMatrix b;
    BitMatrix m;
    BitVector v0;
    BitVector p;
    BitVector s;
    size_t n_angle = 0;

    /// Empty circuit on zero qubits.
    GeneralForm();

    size_t num_qubits() const noexcept {
        return c.num_qubits();
    }
    size_t num_outcomes() const noexcept {
        return half.size();
    }
    size_t num_params() const noexcept {
        return p.size();
    }
    size_t num_random() const noexcept {
        return p.size() - n_angle;
    }

    /// Throws DimensionMismatch when the fields disagree.
    void validate() const;
    bool operator==(const GeneralForm &other) const;
};

/// Exponent of i in the phase at r (mod 4).
int phase_exponent(const GeneralForm &g, const BitVector &r);
ExactScalar phase_at(const GeneralForm &g, const BitVector &r);
BasisImageState state_at(const GeneralForm &g, const BitVector &r);
BitVector outcome_at(const GeneralForm &g, const BitVector &r);

/// Linear part of the outcome map restricted to the random coordinates.
BitMatrix random_block(const GeneralForm &g);
bool is_canonical(const GeneralForm &g);
GeneralForm canonicalize(const GeneralForm &g);

struct PhaseFit {
    /// Constant term as a power of i.
    int kappa = 0;
    BitVector p;
    BitMatrix b;
    BitVector s;
};

/// Fits f(r) = kappa + <p,r>_2 + 2(<Br+s,r>) (mod 4) with B strictly upper
/// triangular, from f at 0, e_i and e_i + e_j. f must have that shape.
PhaseFit fit_phase(size_t nr, const std::function<int(const BitVector &)> &f);

/// Reparametrizes by r = G r' + t. Fails unless G is invertible.
GeneralForm substitute(const GeneralForm &g, const BitMatrix &gmat, const BitVector &t);

void write_general_form(std::ostream &out, const GeneralForm &g);
GeneralForm read_general_form(std::istream &in);
std::string dump(const GeneralForm &g);

}  // namespace phocs
