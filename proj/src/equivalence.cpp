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

#include "phocs/equivalence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "phocs/error.hpp"
#include "phocs/oracle.hpp"
#include "phocs/simulator.hpp"

namespace phocs {

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Equivalent: return "Equivalent";
        case Verdict::NotEquivalent: return "NotEquivalent";
        case Verdict::StructureMismatch: return "StructureMismatch";
    }
    return "?";
}

Correspondence parse_correspondence(const std::string &text) {
    Correspondence corr;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    bool identity = false;
    auto bad = [&](const std::string &msg) { fail(ErrorCode::FormatError, "line " + std::to_string(lineno) + ": " + msg); };
    auto index = [&](const std::string &s) -> size_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
            bad("expected an outcome index, got '" + s + "'");
        }
        return std::stoul(s);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) {
            toks.push_back(t);
        }
        if (toks.empty()) {
            continue;
        }
        if (toks[0] == "angle" && toks.size() == 3) {
            corr.angles.emplace_back(toks[1], toks[2]);
        } else if (toks[0] == "outcomes" && toks.size() == 2 && toks[1] == "identity") {
            identity = true;
        } else if (toks[0] == "outcome" && (toks.size() == 4 || toks.size() == 5) && toks[2] == "->") {
            OutcomeRule rule;
            std::string src = toks[1];
            size_t start = 0;
            while (true) {
                size_t caret = src.find('^', start);
                rule.sources.push_back(index(src.substr(start, caret == std::string::npos ? std::string::npos : caret - start)));
                if (caret == std::string::npos) {
                    break;
                }
                start = caret + 1;
            }
            rule.target = index(toks[3]);
            if (toks.size() == 5) {
                if (toks[4] != "flip") {
                    bad("expected 'flip', got '" + toks[4] + "'");
                }
                rule.flip = true;
            }
            corr.outcomes.push_back(rule);
        } else {
            bad("unrecognized line '" + line + "'");
        }
    }
    if (identity && !corr.outcomes.empty()) {
        fail(ErrorCode::FormatError, "'outcomes identity' conflicts with explicit outcome lines");
    }
    return corr;
}

ResolvedCorrespondence resolve(const Correspondence &corr, const Circuit &c1, const Circuit &c2) {
    size_t na = c1.num_angles();
    if (na != c2.num_angles()) {
        fail(ErrorCode::RotationCountMismatch, "circuits have " + std::to_string(na) + " and " +
                                                   std::to_string(c2.num_angles()) + " rotation labels");
    }
    ResolvedCorrespondence rc;
    rc.angle_perm.resize(na);
    if (corr.angles.empty()) {
        std::set<std::string> s1(c1.angles.begin(), c1.angles.end());
        std::set<std::string> s2(c2.angles.begin(), c2.angles.end());
        for (size_t k = 0; k < na; ++k) {
            if (s1 == s2) {
                rc.angle_perm[k] = static_cast<size_t>(
                    std::find(c1.angles.begin(), c1.angles.end(), c2.angles[k]) - c1.angles.begin());
            } else {
                rc.angle_perm[k] = k;
            }
        }
    } else {
        std::vector<bool> used1(na, false);
        std::vector<bool> used2(na, false);
        for (const auto &[l1, l2] : corr.angles) {
            auto i1 = std::find(c1.angles.begin(), c1.angles.end(), l1);
            auto i2 = std::find(c2.angles.begin(), c2.angles.end(), l2);
            if (i1 == c1.angles.end() || i2 == c2.angles.end()) {
                fail(ErrorCode::FormatError, "unknown rotation label in 'angle " + l1 + " " + l2 + "'");
            }
            size_t k1 = static_cast<size_t>(i1 - c1.angles.begin());
            size_t k2 = static_cast<size_t>(i2 - c2.angles.begin());
            if (used1[k1] || used2[k2]) {
                fail(ErrorCode::FormatError, "angle map is not a bijection at '" + l1 + " " + l2 + "'");
            }
            used1[k1] = used2[k2] = true;
            rc.angle_perm[k2] = k1;
        }
        if (corr.angles.size() != na) {
            fail(ErrorCode::FormatError, "angle map does not cover every rotation label");
        }
    }
    size_t m1 = c1.num_outcomes;
    size_t m2 = c2.num_outcomes;
    rc.flips = BitVector(m1);
    if (corr.outcomes.empty()) {
        rc.outcome_map = BitMatrix(m1, m2);
        for (size_t i = 0; i < std::min(m1, m2); ++i) {
            rc.outcome_map.set(i, i, true);
        }
        return rc;
    }
    rc.identity_outcomes = false;
    if (m1 != m2) {
        fail(ErrorCode::FormatError, "an outcome map needs equal outcome counts, got " + std::to_string(m1) +
                                         " and " + std::to_string(m2));
    }
    rc.outcome_map = BitMatrix(m1, m2);
    std::vector<bool> seen(m1, false);
    for (const auto &rule : corr.outcomes) {
        if (rule.target >= m1 || seen[rule.target]) {
            fail(ErrorCode::FormatError, "outcome target " + std::to_string(rule.target) + " is invalid or repeated");
        }
        seen[rule.target] = true;
        for (size_t s : rule.sources) {
            if (s >= m2) {
                fail(ErrorCode::FormatError, "outcome source " + std::to_string(s) + " is out of range");
            }
            rc.outcome_map.flip(rule.target, s);
        }
        rc.flips.set(rule.target, rule.flip);
    }
    if (rc.outcome_map.rank() != m1) {
        fail(ErrorCode::FormatError, "outcome map is not invertible");
    }
    return rc;
}

namespace {

// q_j = 1/2 exactly when the random part of row j is independent of earlier rows.
std::vector<bool> recompute_half(const GeneralForm &g) {
    BitMatrix rb = random_block(g);
    std::vector<BitVector> basis;
    std::vector<size_t> pivots;
    std::vector<bool> half;
    for (size_t j = 0; j < rb.rows(); ++j) {
        BitVector v = rb.row(j);
        for (size_t i = 0; i < basis.size(); ++i) {
            if (v.get(pivots[i])) {
                v ^= basis[i];
            }
        }
        bool independent = !v.is_zero();
        if (independent) {
            pivots.push_back(v.first_one());
            basis.push_back(v);
        }
        half.push_back(independent);
    }
    return half;
}

std::vector<BitVector> test_points(size_t nr) {
    std::vector<BitVector> pts{BitVector(nr)};
    for (size_t i = 0; i < nr; ++i) {
        pts.push_back(BitVector::unit(nr, i));
    }
    for (size_t i = 0; i < nr; ++i) {
        for (size_t j = i + 1; j < nr; ++j) {
            BitVector r = BitVector::unit(nr, i);
            r.set(j, true);
            pts.push_back(r);
        }
    }
    return pts;
}

bool same_state_at(const GeneralForm &g1, const GeneralForm &g2, const BitVector &r) {
    return states_equal(state_at(g1, r), state_at(g2, r));
}

Witness state_witness(const GeneralForm &g1, const GeneralForm &g2, BitVector r) {
    for (size_t i = 0; i < r.size(); ++i) {
        if (r.get(i)) {
            r.set(i, false);
            if (same_state_at(g1, g2, r)) {
                r.set(i, true);
            }
        }
    }
    Witness w;
    w.r = r;
    w.outcomes = outcome_at(g1, r);
    w.what = "states differ";
    BasisImageState s1 = state_at(g1, r);
    BasisImageState s2 = state_at(g2, r);
    for (const BasisImageState *s : {&s1, &s2}) {
        BitVector b = support_point(s->c, s->b);
        ExactScalar a1 = basis_amplitude(s1.c, s1.b, b);
        ExactScalar a2 = basis_amplitude(s2.c, s2.b, b);
        if (!(a1 == a2)) {
            w.basis = b;
            w.amp1 = a1;
            w.amp2 = a2;
            return w;
        }
    }
    w.what = "states differ in stabilizer group";
    return w;
}

}  // namespace

GeneralForm apply_correspondence(const GeneralForm &g2, const ResolvedCorrespondence &rc) {
    size_t nr = g2.num_params();
    GeneralForm g = g2;
    bool moved = false;
    BitMatrix perm = BitMatrix::identity(nr);
    for (size_t k = 0; k < rc.angle_perm.size(); ++k) {
        perm.set(k, k, false);
    }
    for (size_t k = 0; k < rc.angle_perm.size(); ++k) {
        perm.set(k, rc.angle_perm[k], true);
        moved |= rc.angle_perm[k] != k;
    }
    if (moved) {
        g = substitute(g, perm, BitVector(nr));
    }
    if (!rc.identity_outcomes) {
        g.m = rc.outcome_map * g.m;
        g.v0 = rc.outcome_map * g.v0 ^ rc.flips;
        g.half = recompute_half(g);
    }
    g.validate();
    return g;
}

EquivalenceReport general_forms_equal(const GeneralForm &g1, const GeneralForm &g2) {
    g1.validate();
    g2.validate();
    if (g1.num_qubits() != g2.num_qubits() || g1.n_angle != g2.n_angle) {
        fail(ErrorCode::DimensionMismatch, "forms differ in qubit or angle count");
    }
    if (!is_canonical(g1) || !is_canonical(g2)) {
        fail(ErrorCode::NotCanonical, "general_forms_equal needs canonical forms");
    }
    EquivalenceReport rep;
    rep.form1 = g1;
    rep.form2 = g2;
    if (g1.half != g2.half || !(g1.m == g2.m) || !(g1.v0 == g2.v0)) {
        rep.verdict = Verdict::StructureMismatch;
        Witness w;
        w.r = BitVector(g1.num_params());
        if (g1.half != g2.half) {
            size_t j = 0;
            while (j < std::min(g1.half.size(), g2.half.size()) && g1.half[j] == g2.half[j]) {
                ++j;
            }
            w.what = j < std::min(g1.half.size(), g2.half.size())
                         ? "probability of outcome " + std::to_string(j) + " differs"
                         : "outcome counts differ";
        } else {
            for (const BitVector &r : test_points(g1.num_params())) {
                if (!(outcome_at(g1, r) == outcome_at(g2, r))) {
                    w.r = r;
                    break;
                }
            }
            w.outcomes = outcome_at(g1, w.r);
            w.what = "outcome vectors differ: " + outcome_at(g1, w.r).to_string() + " vs " +
                     outcome_at(g2, w.r).to_string();
        }
        rep.witness = w;
        return rep;
    }
    auto pts = test_points(g1.num_params());
    for (const BitVector &r : pts) {
        if (!same_state_at(g1, g2, r)) {
            rep.verdict = Verdict::NotEquivalent;
            rep.witness = state_witness(g1, g2, r);
            break;
        }
    }
    if (rep.verdict == Verdict::NotEquivalent) {
        for (int k = 1; k < 8; ++k) {
            GeneralForm shifted = g2;
            shifted.c.add_phase(k);
            bool all = std::all_of(pts.begin(), pts.end(),
                                   [&](const BitVector &r) { return same_state_at(g1, shifted, r); });
            if (all) {
                rep.constant_phase = k;
                break;
            }
        }
    }
    return rep;
}

namespace {

struct Closed {
    Circuit c1;
    Circuit c2;
    ResolvedCorrespondence rc;
};

Closed close_pair(const Circuit &c1, const Circuit &c2, const Correspondence &corr) {
    if (c1.inputs.size() != c2.inputs.size()) {
        fail(ErrorCode::OutputArityMismatch, "circuits have " + std::to_string(c1.inputs.size()) + " and " +
                                                 std::to_string(c2.inputs.size()) + " input qubits");
    }
    Closed out{choi_closure(c1), choi_closure(c2), {}};
    size_t o1 = out.c1.output_labels().size();
    size_t o2 = out.c2.output_labels().size();
    if (o1 != o2) {
        fail(ErrorCode::OutputArityMismatch,
             "circuits have " + std::to_string(o1) + " and " + std::to_string(o2) + " output qubits");
    }
    out.rc = resolve(corr, out.c1, out.c2);
    return out;
}

}  // namespace

EquivalenceReport check_circuits(const Circuit &c1, const Circuit &c2, const Correspondence &corr) {
    Closed cl = close_pair(c1, c2, corr);
    GeneralForm g1 = simulate(lower_rotations(cl.c1));
    GeneralForm g2 = simulate(lower_rotations(cl.c2));
    if (cl.rc.identity_outcomes && g1.num_outcomes() != g2.num_outcomes()) {
        EquivalenceReport rep;
        rep.verdict = Verdict::StructureMismatch;
        rep.witness = Witness{BitVector(0), BitVector(0), "outcome counts differ: " + std::to_string(g1.num_outcomes()) +
                                                             " vs " + std::to_string(g2.num_outcomes()), {}, {}, {}};
        rep.form1 = canonicalize(g1);
        rep.form2 = canonicalize(g2);
        return rep;
    }
    g2 = apply_correspondence(g2, cl.rc);
    return general_forms_equal(canonicalize(g1), canonicalize(g2));
}

EquivalenceReport oracle_check(const Circuit &c1, const Circuit &c2, const Correspondence &corr) {
    Closed cl = close_pair(c1, c2, corr);
    EquivalenceReport rep;
    if (cl.rc.identity_outcomes && cl.c1.num_outcomes != cl.c2.num_outcomes) {
        rep.verdict = Verdict::NotEquivalent;
        rep.witness = Witness{BitVector(0), BitVector(0), "outcome counts differ", {}, {}, {}};
        return rep;
    }
    auto run = [](const Circuit &c) {
        try {
            return enumerate_dense(c);
        } catch (const Error &e) {
            if (e.code() == ErrorCode::TooManyQubits || e.code() == ErrorCode::TooLarge) {
                fail(ErrorCode::TooLarge, e.what());
            }
            throw;
        }
    };
    size_t na = cl.c1.num_angles();
    std::map<std::string, DenseRun> map1;
    std::map<std::string, DenseRun> map2;
    for (auto &b : run(cl.c1)) {
        map1.emplace(b.assignment.to_string(), b.run);
    }
    for (auto &b : run(cl.c2)) {
        BitVector a(na);
        for (size_t k = 0; k < na; ++k) {
            a.set(cl.rc.angle_perm[k], b.assignment.get(k));
        }
        BitVector v = cl.rc.outcome_map * b.run.outcomes ^ cl.rc.flips;
        map2.emplace(a.concat(v).to_string(), b.run);
    }
    std::set<std::string> keys;
    for (const auto &kv : map1) {
        keys.insert(kv.first);
    }
    for (const auto &kv : map2) {
        keys.insert(kv.first);
    }
    for (const std::string &key : keys) {
        BitVector bits = BitVector::from_string(key);
        Witness w;
        w.r = bits.slice(0, na);
        w.outcomes = bits.slice(na, bits.size());
        auto i1 = map1.find(key);
        auto i2 = map2.find(key);
        if (i1 == map1.end() || i2 == map2.end()) {
            w.what = std::string("outcome vector reachable only in circuit ") + (i1 == map1.end() ? "2" : "1");
        } else if (i1->second.weight != i2->second.weight) {
            w.what = "branch probabilities differ";
        } else if (!(i1->second.state == i2->second.state)) {
            w.what = "states differ";
            const auto &a1 = i1->second.state.amp;
            const auto &a2 = i2->second.state.amp;
            for (size_t i = 0; i < a1.size(); ++i) {
                if (!(a1[i] == a2[i])) {
                    w.basis = BitVector::from_uint64(i1->second.state.n, i);
                    w.amp1 = a1[i];
                    w.amp2 = a2[i];
                    break;
                }
            }
        } else {
            continue;
        }
        rep.verdict = Verdict::NotEquivalent;
        rep.witness = w;
        return rep;
    }
    return rep;
}

}  // namespace phocs
