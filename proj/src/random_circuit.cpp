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

#include "phocs/random_circuit.hpp"

#include <algorithm>
#include <sstream>

namespace phocs {

namespace {

size_t pick(std::mt19937_64 &rng, size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
}

}  // namespace

std::string random_pauli_text(std::mt19937_64 &rng, const std::vector<size_t> &labels) {
    std::string out = pick(rng, 2) ? "-" : "";
    bool any = false;
    while (!any) {
        std::string body;
        for (size_t q : labels) {
            static const char kinds[] = "IXYZ";
            char k = kinds[pick(rng, 4)];
            if (k == 'I') {
                continue;
            }
            body += (body.empty() ? "" : "*") + std::string(1, k) + std::to_string(q);
        }
        if (!body.empty()) {
            out += body;
            any = true;
        }
    }
    return out;
}

std::string random_circuit_text(std::mt19937_64 &rng, const RandomCircuitOptions &opt) {
    size_t nq = 1 + pick(rng, std::max<size_t>(opt.max_qubits, 1));
    std::ostringstream out;
    out << "qubits " << nq << "\n";
    std::vector<size_t> live;
    for (size_t q = 0; q < nq; ++q) {
        live.push_back(q);
    }
    size_t next_label = nq;
    size_t outcomes = 0;
    size_t measures = 0;
    size_t conds = 0;
    size_t rands = 0;
    size_t rots = 0;
    size_t len = pick(rng, opt.max_instructions + 1);
    static const char *one[] = {"H", "S", "SDG", "X", "Y", "Z"};
    static const char *two[] = {"CX", "CZ", "SWAP"};
    for (size_t step = 0; step < len; ++step) {
        size_t kind = pick(rng, 10);
        if (live.empty()) {
            out << "ALLOC\n";
            live.push_back(next_label++);
            continue;
        }
        if (kind <= 2) {
            if (live.size() >= 2 && pick(rng, 2)) {
                size_t a = pick(rng, live.size());
                size_t b = pick(rng, live.size() - 1);
                if (b >= a) {
                    ++b;
                }
                out << two[pick(rng, 3)] << " " << live[a] << " " << live[b] << "\n";
            } else {
                out << one[pick(rng, 6)] << " " << live[pick(rng, live.size())] << "\n";
            }
        } else if (kind == 3) {
            out << "EXP " << (pick(rng, 2) ? "+ " : "- ") << random_pauli_text(rng, live) << "\n";
        } else if (kind == 4 && measures < opt.max_measurements) {
            out << "M " << random_pauli_text(rng, live) << "\n";
            ++measures;
            ++outcomes;
        } else if (kind == 5 && opt.allow_hints && measures < opt.max_measurements) {
            // Z on a fresh qubit stabilizes |0>, and X anticommutes with it.
            if (live.size() >= opt.max_qubits) {
                continue;
            }
            size_t q = next_label++;
            out << "ALLOC\n";
            live.push_back(q);
            out << "M " << (pick(rng, 2) ? "X" : "Y") << q << " HINT Z" << q << "\n";
            ++measures;
            ++outcomes;
        } else if (kind == 6 && rands < opt.max_rand) {
            out << "RAND\n";
            ++rands;
            ++outcomes;
        } else if (kind == 7 && conds < opt.max_conditions && outcomes > 0) {
            std::string expr;
            size_t terms = 1 + pick(rng, std::min<size_t>(outcomes, 2));
            for (size_t t = 0; t < terms; ++t) {
                expr += (t ? "^" : "") + std::to_string(pick(rng, outcomes));
            }
            out << "COND " << random_pauli_text(rng, live) << " IF " << expr << " == " << pick(rng, 2) << "\n";
            ++conds;
        } else if (kind == 8 && rots < opt.max_rotations) {
            out << "ROT t" << rots << " " << random_pauli_text(rng, live) << "\n";
            ++rots;
        } else if (kind == 9 && opt.allow_free && measures < opt.max_measurements) {
            size_t i = pick(rng, live.size());
            size_t q = live[i];
            out << "M Z" << q << "\n";
            out << "COND X" << q << " IF " << outcomes << " == 1\n";
            out << "FREE " << q << "\n";
            ++measures;
            ++outcomes;
            live.erase(live.begin() + static_cast<long>(i));
        }
    }
    return out.str();
}

}  // namespace phocs
