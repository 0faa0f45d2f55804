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
#include <random>
#include <string>
#include <vector>

#include "phocs/circuit.hpp"
#include "phocs/general_form.hpp"
#include "phocs/phased_clifford.hpp"

namespace phocs {

/// Hermitian, not a multiple of the identity. Needs n > 0.
PauliOperator random_hermitian_pauli(std::mt19937_64 &rng, size_t n);

/// Product of `steps` random Pauli exponents and Paulis applied to the identity.
PhasedBruhat random_clifford(std::mt19937_64 &rng, size_t n, size_t steps);

/// Compares simulate() with run_dense over every parameter vector. Empty when they agree.
std::optional<std::string> verify_simulation(const Circuit &c);

/// Checks css_orbit(p) by dense conjugation and the shape constraints.
std::optional<std::string> verify_orbit(const PauliOperator &p);

/// Random form whose random block of M has full column rank.
GeneralForm random_general_form(std::mt19937_64 &rng, size_t n, size_t n_angle, size_t n_random, size_t n_outcomes);

/// Pointwise comparison over every r: outcomes, q and dense states.
bool forms_equal_exhaustive(const GeneralForm &g1, const GeneralForm &g2);

/// A form denoting the same family as g with c replaced by c D for a random
/// diagonal phase-CSS D; with `perturb`, one phase bit is then flipped.
GeneralForm rephased_copy(std::mt19937_64 &rng, const GeneralForm &g, bool perturb);

/// Measures a random Pauli on a random state with a valid hint and compares both
/// branches with (I +- P)/sqrt2 applied densely.
std::optional<std::string> check_measurement_case(std::mt19937_64 &rng, size_t max_qubits);

/// Circuit on n_out outputs plus n_aux auxiliaries that are entangled and then
/// disentangled again, so the auxiliaries end in |0>. With `entangle`, one
/// auxiliary is left in a Bell pair with an output.
std::string separable_circuit_text(std::mt19937_64 &rng, size_t n_out, size_t n_aux, bool entangle);

/// Checks scalar * (out (x) aux) against g for every r.
std::optional<std::string> verify_separation(const GeneralForm &g, size_t n_out);

enum class PairKind { PauliFrame, HintRemoval, Reorder, Mutation, PhaseFlip };
const char *pair_kind_name(PairKind k);

struct CircuitPair {
    std::string first;
    std::string second;
    PairKind kind = PairKind::PauliFrame;
};

/// A random circuit and a rewritten or mutated copy.
CircuitPair random_pair(std::mt19937_64 &rng, size_t max_qubits, size_t max_rotations);

struct SuiteResult {
    std::string name;
    size_t cases = 0;
    size_t failures = 0;
    std::string reproducer;
};

/// Randomized oracle-agreement suites. Case i of a suite depends only on the seed and i.
std::vector<SuiteResult> run_selfcheck(uint64_t seed, size_t iters, size_t jobs);

}  // namespace phocs
