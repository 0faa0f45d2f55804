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

#include "phocs/selfcheck.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "phocs/dense.hpp"
#include "phocs/equivalence.hpp"
#include "phocs/error.hpp"
#include "phocs/oracle.hpp"
#include "phocs/random_circuit.hpp"
#include "phocs/simulator.hpp"

namespace phocs {

namespace {

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::string join_lines(const std::vector<std::string> &lines, size_t count) {
    std::string out;
    for (size_t i = 0; i < count && i < lines.size(); ++i) {
        out += lines[i];
        out += '\n';
    }
    return out;
}

std::vector<size_t> live_after(const std::vector<std::string> &lines, size_t count) {
    return parse_circuit(join_lines(lines, count)).output_labels();
}

std::optional<size_t> pick_live_position(const std::vector<std::string> &lines, std::mt19937_64 &rng) {
    std::vector<size_t> spots;
    for (size_t i = 1; i <= lines.size(); ++i) {
        if (!live_after(lines, i).empty()) {
            spots.push_back(i);
        }
    }
    if (spots.empty()) {
        return std::nullopt;
    }
    return spots[rng() % spots.size()];
}

bool is_single_gate(const std::string &line, std::string &qubit) {
    std::istringstream in(line);
    std::string name, q, extra;
    if (!(in >> name >> q) || (in >> extra)) {
        return false;
    }
    static const char *names[] = {"H", "HTILDE", "S", "SDG", "X", "Y", "Z"};
    for (const char *n : names) {
        if (name == n) {
            qubit = q;
            return true;
        }
    }
    return false;
}

}  // namespace

PauliOperator random_hermitian_pauli(std::mt19937_64 &rng, size_t n) {
    PauliOperator p(n);
    do {
        for (size_t q = 0; q < n; ++q) {
            p.x.set(q, rng() & 1);
            p.z.set(q, rng() & 1);
        }
    } while (p.is_identity());
    p.s = static_cast<int>(((p.x & p.z).popcount() + 2 * (rng() & 1)) & 3);
    return p;
}

PhasedBruhat random_clifford(std::mt19937_64 &rng, size_t n, size_t steps) {
    PhasedBruhat c = PhasedBruhat::identity(n);
    for (size_t i = 0; n > 0 && i < steps; ++i) {
        if (rng() % 4 == 0) {
            c = left_mul_pauli(c, random_hermitian_pauli(rng, n));
        } else {
            c = left_mul_exponent(c, (rng() & 1) ? 1 : -1, random_hermitian_pauli(rng, n));
        }
    }
    return c;
}

std::optional<std::string> verify_simulation(const Circuit &c) {
    GeneralForm g = simulate(c);
    g.validate();
    std::vector<DenseBranch> branches = enumerate_dense(c);
    std::map<uint64_t, const DenseBranch *> by_assignment;
    for (const DenseBranch &b : branches) {
        by_assignment[b.assignment.to_uint64()] = &b;
    }
    size_t nr = g.num_params();
    if (branches.size() != (size_t(1) << nr)) {
        return "branch count " + std::to_string(branches.size()) + " but 2^" + std::to_string(nr) + " parameters";
    }
    size_t weight = static_cast<size_t>(std::count(g.half.begin(), g.half.end(), true));
    for (uint64_t v = 0; v < (uint64_t(1) << nr); ++v) {
        BitVector r = BitVector::from_uint64(nr, v);
        BitVector assignment = r.slice(0, g.n_angle).concat(outcome_at(g, r));
        auto it = by_assignment.find(assignment.to_uint64());
        if (it == by_assignment.end()) {
            return "no dense branch for outcomes " + assignment.to_string();
        }
        DenseState s = dense_state(state_at(g, r));
        if (!(s == it->second->run.state)) {
            return "state mismatch at r=" + r.to_string() + ": " + s.to_string() + " vs " +
                   it->second->run.state.to_string();
        }
        if (it->second->run.weight != weight) {
            return "probability mismatch at r=" + r.to_string();
        }
    }
    return std::nullopt;
}

std::optional<std::string> verify_orbit(const PauliOperator &p) {
    CssOrbit orbit = css_orbit(p);
    if (orbit.circuit.size() > 2) {
        return "orbit circuit of length " + std::to_string(orbit.circuit.size());
    }
    size_t n = p.num_qubits();
    DenseMatrix u = DenseMatrix::identity(n);
    for (const CssGate &g : orbit.circuit) {
        if ((g.a & g.b).popcount() % 2 != 0) {
            return "gate violates <a,b> = 0";
        }
        u = controlled_pauli_matrix(g.as_controlled_pauli()) * u;
    }
    if (!is_orbit_canonical(orbit.canonical)) {
        return "non-canonical result " + orbit.canonical.to_string();
    }
    if (!(u * pauli_matrix(p) * u.adjoint() == pauli_matrix(orbit.canonical))) {
        return "dense conjugation of " + p.to_string() + " is not " + orbit.canonical.to_string();
    }
    return std::nullopt;
}

GeneralForm random_general_form(std::mt19937_64 &rng, size_t n, size_t n_angle, size_t n_random,
                                size_t n_outcomes) {
    size_t nr = n_angle + n_random;
    n_outcomes = std::max(n_outcomes, n_random);
    auto bits = [&](size_t rows, size_t cols) {
        BitMatrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i) {
            for (size_t j = 0; j < cols; ++j) {
                m.set(i, j, rng() & 1);
            }
        }
        return m;
    };
    auto vec = [&](size_t len) { return bits(1, len).row(0); };
    GeneralForm g;
    g.n_angle = n_angle;
    g.c = random_clifford(rng, n, 2 * n + 2);
    g.a = bits(n, nr);
    g.b = bits(nr, nr);
    g.p = nr ? vec(nr) : BitVector(0);
    g.s = nr ? vec(nr) : BitVector(0);
    g.v0 = n_outcomes ? vec(n_outcomes) : BitVector(0);
    for (;;) {
        g.m = bits(n_outcomes, nr);
        std::vector<size_t> rand_cols;
        for (size_t j = n_angle; j < nr; ++j) {
            rand_cols.push_back(j);
        }
        if (g.m.select_cols(rand_cols).rank() == n_random) {
            break;
        }
    }
    g.half.assign(n_outcomes, false);
    std::vector<size_t> idx(n_outcomes);
    for (size_t k = 0; k < n_outcomes; ++k) {
        idx[k] = k;
    }
    std::shuffle(idx.begin(), idx.end(), rng);
    for (size_t k = 0; k < n_random; ++k) {
        g.half[idx[k]] = true;
    }
    g.validate();
    return g;
}

bool forms_equal_exhaustive(const GeneralForm &g1, const GeneralForm &g2) {
    if (g1.half != g2.half || g1.num_params() != g2.num_params() || g1.num_qubits() != g2.num_qubits()) {
        return false;
    }
    size_t nr = g1.num_params();
    for (uint64_t v = 0; v < (uint64_t(1) << nr); ++v) {
        BitVector r = BitVector::from_uint64(nr, v);
        if (!(outcome_at(g1, r) == outcome_at(g2, r))) {
            return false;
        }
        if (!states_equal_exact(dense_state(state_at(g1, r)), dense_state(state_at(g2, r)))) {
            return false;
        }
    }
    return true;
}

GeneralForm rephased_copy(std::mt19937_64 &rng, const GeneralForm &g, bool perturb) {
    size_t n = g.num_qubits(), nr = g.num_params();
    std::vector<uint8_t> d(n);
    BitMatrix e(n, n);
    for (size_t i = 0; i < n; ++i) {
        d[i] = rng() & 3;
        for (size_t j = i + 1; j < n; ++j) {
            bool bit = rng() & 1;
            e.set(i, j, bit);
            e.set(j, i, bit);
        }
    }
    PhaseCssTableau diag = PhaseCssTableau::diagonal(d, e);
    GeneralForm out = g;
    out.c.vp = out.c.vp.compose(diag);
    // i^{f(r) - q_D(A r)} c D |A r> = i^{f(r)} c |A r>
    PhaseFit fit = fit_phase(nr, [&](const BitVector &r) { return phase_exponent(g, r) - diag.phase_at(g.a * r); });
    out.c.add_phase(2 * fit.kappa);
    out.p = fit.p;
    out.b = fit.b;
    out.s = fit.s;
    if (perturb) {
        switch (nr == 0 ? 3 : rng() % 4) {
            case 0: out.p.flip(rng() % nr); break;
            case 1: out.s.flip(rng() % nr); break;
            case 2: out.b.flip(rng() % nr, rng() % nr); break;
            default: out.c.add_phase(1 + static_cast<int>(rng() % 7)); break;
        }
    }
    return out;
}

std::optional<std::string> check_measurement_case(std::mt19937_64 &rng, size_t max_qubits) {
    size_t n = 1 + rng() % max_qubits;
    BasisImageState st{random_clifford(rng, n, 3 * n), BitVector::from_uint64(n, rng() % (uint64_t(1) << n))};
    PauliOperator p;
    std::vector<PauliOperator> hints;
    while (hints.empty()) {
        p = random_hermitian_pauli(rng, n);
        for (size_t j = 0; j < n; ++j) {
            PauliOperator h = image(st.c, PauliOperator::single(n, j, 'Z'));
            if (st.b.get(j)) {
                h = scaled(h, 2);
            }
            if (comm(h, p)) {
                hints.push_back(h);
            }
        }
    }
    PauliOperator hint = hints[rng() % hints.size()];
    if (rng() & 1) {
        hint = scaled(hint, 2);  // stabilizes up to sign
    }
    MeasurementBranches mb = measure_with_assertion(st, p, hint);
    DenseState psi = dense_state(st);
    DenseMatrix proj = pauli_matrix(p);
    for (int r = 0; r < 2; ++r) {
        DenseMatrix op = DenseMatrix::identity(n);
        for (size_t i = 0; i < op.a.size(); ++i) {
            op.a[i] = op.a[i] + (r ? -proj.a[i] : proj.a[i]);
        }
        DenseState expect = op.scaled(ExactScalar::inv_sqrt2_power(1)) * psi;
        DenseState got = dense_state(mb.branch[r]);
        if (!(got == expect)) {
            return "branch " + std::to_string(r) + " of " + p.to_string() + " with hint " + hint.to_string() + ": " +
                   got.to_string() + " vs " + expect.to_string();
        }
        if (!(got.norm2() == ExactScalar(1))) {
            return "branch " + std::to_string(r) + " is not normalized";
        }
        DenseState projected = psi;
        apply_projector(projected, p, r != 0);
        if (!(projected.norm2() == ExactScalar::inv_sqrt2_power(2))) {
            return "branch " + std::to_string(r) + " weight is " + projected.norm2().to_string();
        }
    }
    return std::nullopt;
}

std::string separable_circuit_text(std::mt19937_64 &rng, size_t n_out, size_t n_aux, bool entangle) {
    static const char *one[] = {"H", "S", "SDG", "X", "Y", "Z"};
    static const char *two[] = {"CX", "CZ", "SWAP"};
    size_t total = n_out + n_aux;
    std::vector<size_t> outs;
    for (size_t q = 0; q < n_out; ++q) {
        outs.push_back(q);
    }
    auto gates = [&](size_t width, size_t count) {
        std::vector<std::string> seq;
        for (size_t i = 0; i < count; ++i) {
            if (width >= 2 && rng() % 2) {
                size_t a = rng() % width, b;
                do {
                    b = rng() % width;
                } while (b == a);
                seq.push_back(std::string(two[rng() % 3]) + " " + std::to_string(a) + " " + std::to_string(b));
            } else {
                seq.push_back(std::string(one[rng() % 6]) + " " + std::to_string(rng() % width));
            }
        }
        return seq;
    };
    std::string text = "qubits " + std::to_string(n_out) + "\n";
    size_t outcomes = 0;
    for (const std::string &g : gates(n_out, 3)) {
        text += g + "\n";
    }
    for (size_t k = 0, m = 1 + rng() % 3; k < m; ++k) {
        if (outcomes > 0 && rng() % 3 == 0) {
            text += "COND " + random_pauli_text(rng, outs) + " IF " + std::to_string(rng() % outcomes) + " == 1\n";
            continue;
        }
        text += rng() % 2 ? "RAND\n" : "M " + random_pauli_text(rng, outs) + "\n";
        ++outcomes;
    }
    for (size_t k = 0; k < n_aux; ++k) {
        text += "ALLOC\n";
    }
    std::vector<std::string> mix = gates(total, 2 * total);
    for (const std::string &g : mix) {
        text += g + "\n";
    }
    // A conditional Pauli on the outputs keeps the family r-dependent in between.
    text += "COND " + random_pauli_text(rng, outs) + " IF " + std::to_string(rng() % outcomes) + " == 1\n";
    for (auto it = mix.rbegin(); it != mix.rend(); ++it) {
        std::string g = *it;
        if (g.rfind("SDG ", 0) == 0) {
            g = "S " + g.substr(4);
        } else if (g.rfind("S ", 0) == 0) {
            g = "SDG " + g.substr(2);
        }
        text += g + "\n";
    }
    if (entangle) {
        size_t o = rng() % n_out, a = n_out + rng() % n_aux;
        std::string so = std::to_string(o), sa = std::to_string(a);
        text += "M Z" + so + "\nH " + sa + "\nCX " + sa + " " + so + "\n";
    }
    return text;
}

std::optional<std::string> verify_separation(const GeneralForm &g, size_t n_out) {
    Separation sep = separate_aux(g, n_out);
    if (sep.out.num_qubits() != n_out || sep.aux.num_qubits() != g.num_qubits() - n_out) {
        return std::string("split sizes");
    }
    size_t nr = g.num_params();
    for (uint64_t v = 0; v < (uint64_t(1) << nr); ++v) {
        BitVector r = BitVector::from_uint64(nr, v);
        DenseState joined = tensor(dense_state(state_at(sep.out, r)), dense_state(state_at(sep.aux, r)));
        for (ExactScalar &x : joined.amp) {
            x = x * sep.scalar;
        }
        if (!(joined == dense_state(state_at(g, r)))) {
            return "reconstruction differs at r=" + r.to_string();
        }
    }
    return std::nullopt;
}

const char *pair_kind_name(PairKind k) {
    switch (k) {
        case PairKind::PauliFrame: return "pauli-frame";
        case PairKind::HintRemoval: return "hint-removal";
        case PairKind::Reorder: return "reorder";
        case PairKind::Mutation: return "mutation";
        case PairKind::PhaseFlip: return "phase-flip";
    }
    return "?";
}

CircuitPair random_pair(std::mt19937_64 &rng, size_t max_qubits, size_t max_rotations) {
    RandomCircuitOptions opt;
    opt.max_qubits = max_qubits;
    opt.max_instructions = 10;
    opt.max_rotations = max_rotations;
    CircuitPair pair;
    pair.first = random_circuit_text(rng, opt);
    std::vector<std::string> lines = split_lines(pair.first);
    pair.kind = static_cast<PairKind>(rng() % 5);

    if (pair.kind == PairKind::HintRemoval) {
        bool any = false;
        for (std::string &line : lines) {
            size_t pos = line.find(" HINT ");
            if (pos != std::string::npos) {
                line.resize(pos);
                any = true;
            }
        }
        if (!any) {
            pair.kind = PairKind::PauliFrame;
        }
    }
    if (pair.kind == PairKind::Reorder) {
        std::vector<size_t> spots;
        for (size_t i = 1; i + 1 < lines.size(); ++i) {
            std::string qa, qb;
            if (is_single_gate(lines[i], qa) && is_single_gate(lines[i + 1], qb) && qa != qb) {
                spots.push_back(i);
            }
        }
        if (spots.empty()) {
            pair.kind = PairKind::PauliFrame;
        } else {
            size_t i = spots[rng() % spots.size()];
            std::swap(lines[i], lines[i + 1]);
        }
    }
    std::optional<size_t> pos;
    if (pair.kind == PairKind::PauliFrame || pair.kind == PairKind::Mutation) {
        pos = pick_live_position(lines, rng);
        if (!pos) {
            pair.kind = PairKind::PhaseFlip;
        }
    }
    // Insertions can break a reset or hint idiom; retry at other positions.
    for (int attempt = 0; pos && attempt < 16; ++attempt) {
        std::vector<size_t> live = live_after(lines, *pos);
        std::vector<std::string> added;
        std::string q = std::to_string(live[rng() % live.size()]);
        if (pair.kind == PairKind::PauliFrame) {
            static const char *frames[][2] = {{"X", "X"}, {"Y", "Y"}, {"Z", "Z"}, {"S", "SDG"}, {"H", "H"}};
            const auto &f = frames[rng() % 5];
            added = {std::string(f[0]) + " " + q, std::string(f[1]) + " " + q};
        } else {
            switch (rng() % 4) {
                case 0: added = {"H " + q}; break;
                case 1: added = {"S " + q}; break;
                case 2: added = {std::string(rng() % 2 ? "X " : "Z ") + q}; break;
                default: added = {"EXP + " + random_pauli_text(rng, live)}; break;
            }
        }
        std::vector<std::string> candidate = lines;
        candidate.insert(candidate.begin() + static_cast<long>(*pos), added.begin(), added.end());
        try {
            simulate(lower_rotations(parse_circuit(join_lines(candidate, candidate.size()))));
        } catch (const Error &) {
            pos = pick_live_position(lines, rng);
            continue;
        }
        lines = std::move(candidate);
        break;
    }
    if (pair.kind == PairKind::PhaseFlip) {
        Circuit c = parse_circuit(pair.first);
        if (c.num_angles() > 0 && rng() % 2) {
            lines.push_back("COND -I IF @" + c.angles[rng() % c.angles.size()] + " == 1");
        } else {
            pair.first += "RAND\n";
            lines.push_back("RAND");
            lines.push_back("COND -I IF " + std::to_string(c.num_outcomes) + " == 1");
        }
    }
    pair.second = join_lines(lines, lines.size());
    return pair;
}

namespace {

using CaseFn = std::function<std::optional<std::string>(std::mt19937_64 &, std::string &)>;

std::optional<std::string> guarded(const CaseFn &fn, std::mt19937_64 &rng, std::string &input) {
    try {
        return fn(rng, input);
    } catch (const std::exception &e) {
        return std::string("exception: ") + e.what();
    }
}

SuiteResult run_suite(const std::string &name, uint64_t seed, uint64_t suite_id, size_t iters, size_t jobs,
                      const CaseFn &fn) {
    SuiteResult result;
    result.name = name;
    result.cases = iters;
    std::atomic<size_t> next{0};
    std::mutex mu;
    size_t first_bad = iters;
    std::string first_message;
    std::string first_input;
    auto worker = [&] {
        for (size_t i = next++; i < iters; i = next++) {
            std::seed_seq seq{seed, suite_id, static_cast<uint64_t>(i)};
            std::mt19937_64 rng(seq);
            std::string input;
            std::optional<std::string> msg = guarded(fn, rng, input);
            if (msg) {
                std::lock_guard<std::mutex> lock(mu);
                ++result.failures;
                if (i < first_bad) {
                    first_bad = i;
                    first_message = *msg;
                    first_input = input;
                }
            }
        }
    };
    size_t n_threads = std::max<size_t>(1, std::min(jobs, iters));
    std::vector<std::thread> threads;
    for (size_t t = 1; t < n_threads; ++t) {
        threads.emplace_back(worker);
    }
    worker();
    for (std::thread &t : threads) {
        t.join();
    }
    if (result.failures > 0) {
        result.reproducer = "suite " + name + " seed " + std::to_string(seed) + " case " + std::to_string(first_bad) +
                            ": " + first_message;
        if (!first_input.empty()) {
            result.reproducer += "\n" + first_input;
        }
    }
    return result;
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(uint64_t seed, size_t iters, size_t jobs) {
    std::vector<SuiteResult> out;
    out.push_back(run_suite("simulate", seed, 1, iters, jobs, [](std::mt19937_64 &rng, std::string &input) {
        RandomCircuitOptions opt;
        opt.max_rotations = 2;
        input = random_circuit_text(rng, opt);
        return verify_simulation(lower_rotations(parse_circuit(input)));
    }));
    out.push_back(run_suite("exponent", seed, 2, iters, jobs,
                            [](std::mt19937_64 &rng, std::string &input) -> std::optional<std::string> {
                                size_t n = 1 + rng() % 4;
                                PhasedBruhat c = random_clifford(rng, n, 8);
                                PauliOperator p = random_hermitian_pauli(rng, n);
                                int sign = (rng() & 1) ? 1 : -1;
                                input = "exponent " + std::string(sign > 0 ? "+ " : "- ") + p.to_string();
                                if (!(left_mul_exponent(c, sign, p).dense() == exponent_matrix(sign, p) * c.dense())) {
                                    return std::string("dense mismatch");
                                }
                                return std::nullopt;
                            }));
    out.push_back(run_suite("orbit", seed, 3, iters, jobs, [](std::mt19937_64 &rng, std::string &input) {
        PauliOperator p = random_hermitian_pauli(rng, 1 + rng() % 5);
        input = p.to_string();
        return verify_orbit(p);
    }));
    out.push_back(run_suite("equivalence", seed, 4, iters, jobs,
                            [](std::mt19937_64 &rng, std::string &input) -> std::optional<std::string> {
                                CircuitPair pair = random_pair(rng, 3, 2);
                                input = pair.first + "--- " + pair_kind_name(pair.kind) + "\n" + pair.second;
                                Circuit c1 = parse_circuit(pair.first);
                                Circuit c2 = parse_circuit(pair.second);
                                Verdict fast = check_circuits(c1, c2).verdict;
                                Verdict slow = oracle_check(c1, c2).verdict;
                                if ((fast == Verdict::Equivalent) != (slow == Verdict::Equivalent)) {
                                    return std::string("verdict ") + verdict_name(fast) + ", oracle " +
                                           verdict_name(slow);
                                }
                                if (pair.kind == PairKind::PhaseFlip && fast == Verdict::Equivalent) {
                                    return std::string("phase flip judged equivalent");
                                }
                                return std::nullopt;
                            }));
    return out;
}

}  // namespace phocs
