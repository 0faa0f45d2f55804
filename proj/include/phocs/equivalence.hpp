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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phocs/circuit.hpp"
#include "phocs/general_form.hpp"

namespace phocs {

struct OutcomeRule {
    /// Circuit-1 index receiving the parity of the circuit-2 sources.
    size_t target = 0;
    std::vector<size_t> sources;
    bool flip = false;
};

struct Correspondence {
    /// (circuit-1 label, circuit-2 label). Empty: match by name, else by position.
    std::vector<std::pair<std::string, std::string>> angles;
    /// Empty: identity.
    std::vector<OutcomeRule> outcomes;
};

Correspondence parse_correspondence(const std::string &text);

enum class Verdict { Equivalent, NotEquivalent, StructureMismatch };
const char *verdict_name(Verdict v);

struct Witness {
    BitVector r;
    BitVector outcomes;
    std::string what;
    std::optional<BitVector> basis;
    std::optional<ExactScalar> amp1;
    std::optional<ExactScalar> amp2;
};

struct EquivalenceReport {
    Verdict verdict = Verdict::Equivalent;
    std::optional<Witness> witness;
    std::optional<GeneralForm> form1;
    std::optional<GeneralForm> form2;
    /// Set when the families differ by exactly w^k.
    std::optional<int> constant_phase;
};

/// Both forms canonical, same qubit and angle counts.
EquivalenceReport general_forms_equal(const GeneralForm &g1, const GeneralForm &g2);

/// Angle permutation (circuit-2 coordinate k goes to perm[k]) plus outcome map v1 = L v2 + f.
struct ResolvedCorrespondence {
    std::vector<size_t> angle_perm;
    BitMatrix outcome_map;
    BitVector flips;
    bool identity_outcomes = true;
};

ResolvedCorrespondence resolve(const Correspondence &corr, const Circuit &c1, const Circuit &c2);

/// Expresses g2 in circuit-1 angle order and outcome indexing.
GeneralForm apply_correspondence(const GeneralForm &g2, const ResolvedCorrespondence &rc);

EquivalenceReport check_circuits(const Circuit &c1, const Circuit &c2, const Correspondence &corr = {});

/// Brute-force verdict over all angle and outcome assignments.
EquivalenceReport oracle_check(const Circuit &c1, const Circuit &c2, const Correspondence &corr = {});

}  // namespace phocs
