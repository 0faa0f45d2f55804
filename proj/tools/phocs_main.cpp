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

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "phocs/equivalence.hpp"
#include "phocs/error.hpp"
#include "phocs/general_form.hpp"
#include "phocs/phased_clifford.hpp"
#include "phocs/selfcheck.hpp"
#include "phocs/simulator.hpp"

namespace {

using namespace phocs;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kDiffers = 1, kInput = 2, kInternal = 3 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw InputError("cannot write " + path);
    }
}

Circuit load_circuit(const std::string &path) {
    std::string text = read_file(path);
    try {
        return parse_circuit(text);
    } catch (const Error &e) {
        throw InputError(path + ": " + e.what());
    }
}

bool is_internal(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch:
        case ErrorCode::SingularMatrix:
        case ErrorCode::NotClifford:
        case ErrorCode::DecompositionFailure:
        case ErrorCode::PositionOutOfRange:
        case ErrorCode::NotCanonical:
            return true;
        default:
            return false;
    }
}

std::string digest(const GeneralForm &g) {
    // FNV-1a over the dump text
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : dump(g)) {
        h = (h ^ ch) * 0x100000001b3ULL;
    }
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << h;
    return ss.str();
}

int cmd_simulate(const std::string &file, const std::string &dump_path, bool canonical, bool as_json) {
    Circuit c = load_circuit(file);
    GeneralForm g = simulate(lower_rotations(c));
    if (canonical) {
        g = canonicalize(g);
    }
    std::string text = dump(g);
    if (!dump_path.empty()) {
        write_file(dump_path, text);
    }
    if (as_json) {
        json j;
        j["qubits"] = g.num_qubits();
        j["outcomes"] = g.num_outcomes();
        j["parameters"] = g.num_params();
        j["angles"] = c.angles;
        j["canonical"] = canonical;
        j["digest"] = digest(g);
        j["form"] = text;
        std::cout << j.dump(2) << "\n";
    } else if (dump_path.empty()) {
        std::cout << text;
    }
    return kOk;
}

json witness_json(const Witness &w, const std::vector<std::string> &angles) {
    json j;
    j["r"] = w.r.to_string();
    json a = json::object();
    for (size_t i = 0; i < angles.size() && i < w.r.size(); ++i) {
        a[angles[i]] = w.r.get(i) ? 1 : 0;
    }
    j["angles"] = a;
    j["outcomes"] = w.outcomes.to_string();
    j["what"] = w.what;
    if (w.basis) {
        j["basis"] = w.basis->to_string();
    }
    if (w.amp1) {
        j["amplitude1"] = w.amp1->to_string();
    }
    if (w.amp2) {
        j["amplitude2"] = w.amp2->to_string();
    }
    return j;
}

void print_witness(const Witness &w, const std::vector<std::string> &angles) {
    std::cout << "witness:";
    for (size_t i = 0; i < angles.size() && i < w.r.size(); ++i) {
        std::cout << " " << angles[i] << "=" << (w.r.get(i) ? 1 : 0);
    }
    std::cout << " r=" << (w.r.size() ? w.r.to_string() : "-") << "\n";
    std::cout << "outcomes: " << (w.outcomes.size() ? w.outcomes.to_string() : "-") << "\n";
    std::cout << "differs: " << w.what << "\n";
    if (w.basis) {
        std::cout << "basis: " << w.basis->to_string() << "\n";
    }
    if (w.amp1 && w.amp2) {
        std::cout << "amplitudes: " << w.amp1->to_string() << " vs " << w.amp2->to_string() << "\n";
    }
}

int cmd_check(const std::string &f1, const std::string &f2, const std::string &map_path, bool oracle,
              bool phase_diag, bool as_json) {
    Circuit c1 = load_circuit(f1);
    Circuit c2 = load_circuit(f2);
    Correspondence corr;
    if (!map_path.empty()) {
        try {
            corr = parse_correspondence(read_file(map_path));
        } catch (const Error &e) {
            throw InputError(map_path + ": " + e.what());
        }
    }
    EquivalenceReport rep = check_circuits(c1, c2, corr);
    std::optional<Verdict> slow;
    if (oracle) {
        slow = oracle_check(c1, c2, corr).verdict;
    }
    bool agree = !slow || ((*slow == Verdict::Equivalent) == (rep.verdict == Verdict::Equivalent));

    if (as_json) {
        json j;
        j["verdict"] = verdict_name(rep.verdict);
        j["witness"] = rep.witness ? witness_json(*rep.witness, c1.angles) : json(nullptr);
        j["digest1"] = rep.form1 ? json(digest(*rep.form1)) : json(nullptr);
        j["digest2"] = rep.form2 ? json(digest(*rep.form2)) : json(nullptr);
        if (phase_diag) {
            j["constant_phase"] = rep.constant_phase ? json(*rep.constant_phase) : json(nullptr);
        }
        if (slow) {
            j["oracle"] = verdict_name(*slow);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << verdict_name(rep.verdict) << "\n";
        if (rep.witness) {
            print_witness(*rep.witness, c1.angles);
        }
        if (phase_diag && rep.verdict != Verdict::Equivalent) {
            if (rep.constant_phase) {
                std::cout << "equal up to constant phase w^" << *rep.constant_phase << "\n";
            } else {
                std::cout << "not equal up to a constant phase\n";
            }
        }
        if (slow) {
            std::cout << "oracle: " << verdict_name(*slow) << "\n";
        }
    }
    if (!agree) {
        std::cerr << "error: oracle disagrees with the equivalence engine\n";
        return kInternal;
    }
    return rep.verdict == Verdict::Equivalent ? kOk : kDiffers;
}

int cmd_table(const std::string &action, const std::string &path) {
    if (action == "generate") {
        BruhatTable t = generate_table();
        std::vector<std::string> bad = verify_table(t);
        for (const std::string &b : bad) {
            std::cerr << "bad entry: " << b << "\n";
        }
        if (!bad.empty()) {
            return kInternal;
        }
        std::ostringstream out;
        write_table(out, t);
        write_file(path, out.str());
        std::cout << t.size() << " entries written to " << path << "\n";
        return kOk;
    }
    std::istringstream in(read_file(path));
    BruhatTable t;
    try {
        t = read_table(in);
    } catch (const Error &e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return kDiffers;
    }
    std::vector<std::string> bad = verify_table(t);
    for (const std::string &b : bad) {
        std::cout << "FAIL " << b << "\n";
    }
    std::cout << t.size() << " entries, " << bad.size() << " failing\n";
    return bad.empty() ? kOk : kDiffers;
}

int cmd_selfcheck(uint64_t seed, size_t iters, size_t jobs, bool as_json) {
    std::vector<SuiteResult> suites = run_selfcheck(seed, iters, jobs);
    bool ok = true;
    json j = json::array();
    for (const SuiteResult &s : suites) {
        ok = ok && s.failures == 0;
        if (as_json) {
            j.push_back({{"suite", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"reproducer", s.reproducer}});
        } else {
            std::cout << s.name << ": " << s.cases - s.failures << "/" << s.cases << " passed\n";
            if (s.failures) {
                std::cout << "reproducer: " << s.reproducer << "\n";
            }
        }
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    }
    return ok ? kOk : kInternal;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Phase-sensitive stabilizer circuit simulation and equivalence checking"};
    app.require_subcommand(1);
    bool as_json = false;

    auto *sim = app.add_subcommand("simulate", "compute the general form of a circuit");
    std::string sim_file, dump_path;
    bool canonical = false;
    sim->add_option("file", sim_file)->required();
    sim->add_option("--dump", dump_path, "write the form to PATH");
    sim->add_flag("--canonical", canonical, "canonicalize before writing");
    sim->add_flag("--json", as_json, "machine-readable output");

    auto *chk = app.add_subcommand("check", "decide equivalence of two circuits");
    std::string f1, f2, map_path;
    bool oracle = false, phase_diag = false;
    chk->add_option("file1", f1)->required();
    chk->add_option("file2", f2)->required();
    chk->add_option("--map", map_path, "correspondence file");
    chk->add_flag("--oracle", oracle, "cross-check with dense enumeration");
    chk->add_flag("--phase-diagnostic", phase_diag, "report a constant phase difference");
    chk->add_flag("--json", as_json);

    auto *tbl = app.add_subcommand("table", "generate or verify the small Bruhat table");
    std::string action, table_path;
    tbl->add_option("action", action)->required()->check(CLI::IsMember({"generate", "verify"}));
    tbl->add_option("path", table_path)->required();

    auto *self = app.add_subcommand("selfcheck", "randomized oracle agreement");
    uint64_t seed = 1;
    size_t iters = 100;
    size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    self->add_option("--seed", seed);
    self->add_option("--iters", iters);
    self->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    self->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*sim) {
            return cmd_simulate(sim_file, dump_path, canonical, as_json);
        }
        if (*chk) {
            return cmd_check(f1, f2, map_path, oracle, phase_diag, as_json);
        }
        if (*tbl) {
            return cmd_table(action, table_path);
        }
        return cmd_selfcheck(seed, iters, jobs, as_json);
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_internal(e.code()) ? kInternal : kInput;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
