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

#include "phocs/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "phocs/error.hpp"

namespace phocs {

namespace {

struct Token {
    std::string text;
    size_t column;
};

std::vector<Token> tokenize(const std::string &line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        out.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return out;
}

bool is_identifier(const std::string &s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

std::optional<size_t> parse_index(const std::string &s) {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        return std::nullopt;
    }
    return static_cast<size_t>(std::stoul(s));
}

const std::set<std::string> kOneQubit = {"H", "HTILDE", "S", "SDG", "X", "Y", "Z"};
const std::set<std::string> kTwoQubit = {"CX", "CZ", "SWAP"};

class Parser {
   public:
    explicit Parser(std::string_view text) {
        std::string all(text);
        std::istringstream in(all);
        std::string line;
        while (std::getline(in, line)) {
            size_t hash = line.find('#');
            if (hash != std::string::npos) {
                line.resize(hash);
            }
            lines_.push_back(tokenize(line));
        }
    }

    Circuit run() {
        size_t allocs = 0;
        for (const auto &toks : lines_) {
            if (!toks.empty() && toks[0].text == "ALLOC") {
                ++allocs;
            }
        }
        bool header = false;
        bool body = false;
        for (line_ = 1; line_ <= lines_.size(); ++line_) {
            const auto &toks = lines_[line_ - 1];
            if (toks.empty()) {
                continue;
            }
            const std::string &head = toks[0].text;
            if (!header) {
                if (head != "qubits" || toks.size() != 2) {
                    error(toks[0], ErrorCode::SyntaxError, "expected 'qubits N' header");
                }
                auto n = parse_index(toks[1].text);
                if (!n) {
                    error(toks[1], ErrorCode::SyntaxError, "qubit count must be a nonnegative integer");
                }
                c_.declared = *n;
                c_.num_labels = *n + allocs;
                for (size_t q = 0; q < *n; ++q) {
                    Instruction ins;
                    ins.kind = OpKind::Alloc;
                    ins.qubits = {q};
                    ins.line = line_;
                    c_.ops.push_back(ins);
                    live_.insert(q);
                }
                next_label_ = *n;
                header = true;
                continue;
            }
            if (head == "inputs" || head == "angles") {
                if (body) {
                    error(toks[0], ErrorCode::SyntaxError, "'" + head + "' must precede all instructions");
                }
                for (size_t i = 1; i < toks.size(); ++i) {
                    if (head == "inputs") {
                        size_t q = label(toks[i]);
                        if (std::find(c_.inputs.begin(), c_.inputs.end(), q) != c_.inputs.end()) {
                            error(toks[i], ErrorCode::SyntaxError, "repeated input qubit");
                        }
                        c_.inputs.push_back(q);
                    } else {
                        register_angle(toks[i]);
                    }
                }
                continue;
            }
            body = true;
            instruction(toks);
        }
        if (!header) {
            fail(ErrorCode::SyntaxError, "line 1, column 1: missing 'qubits N' header");
        }
        return c_;
    }

   private:
    [[noreturn]] void error(const Token &t, ErrorCode code, const std::string &msg) const {
        fail(code, "line " + std::to_string(line_) + ", column " + std::to_string(t.column) + ": " + msg);
    }

    size_t label(const Token &t) const {
        auto q = parse_index(t.text);
        if (!q) {
            error(t, ErrorCode::SyntaxError, "expected a qubit index, got '" + t.text + "'");
        }
        if (!live_.count(*q)) {
            error(t, ErrorCode::UndeclaredQubit, "qubit " + t.text + " is not allocated");
        }
        return *q;
    }

    size_t register_angle(const Token &t) {
        if (!is_identifier(t.text)) {
            error(t, ErrorCode::SyntaxError, "bad rotation label '" + t.text + "'");
        }
        if (std::find(c_.angles.begin(), c_.angles.end(), t.text) != c_.angles.end()) {
            error(t, ErrorCode::DuplicateRotationLabel, "rotation label '" + t.text + "' is already used");
        }
        c_.angles.push_back(t.text);
        return c_.angles.size() - 1;
    }

    PauliOperator pauli(const Token &t, bool hermitian) const {
        PauliOperator p;
        try {
            p = PauliOperator::parse(t.text, c_.num_labels);
        } catch (const Error &e) {
            error(t, e.code() == ErrorCode::QubitOutOfRange ? ErrorCode::UndeclaredQubit : ErrorCode::SyntaxError,
                  std::string("bad Pauli '") + t.text + "': " + e.what());
        }
        for (size_t q : p.support().ones()) {
            if (!live_.count(q)) {
                error(t, ErrorCode::UndeclaredQubit, "qubit " + std::to_string(q) + " is not allocated");
            }
        }
        if (hermitian && !p.is_hermitian()) {
            error(t, ErrorCode::SyntaxError, "Pauli '" + t.text + "' is not Hermitian");
        }
        return p;
    }

    void arity(const std::vector<Token> &toks, size_t n) const {
        if (toks.size() != n) {
            const Token &t = toks.size() > n ? toks[n] : toks.back();
            error(t, ErrorCode::SyntaxError, "'" + toks[0].text + "' takes " + std::to_string(n - 1) + " operand(s)");
        }
    }

    void instruction(const std::vector<Token> &toks) {
        const std::string &head = toks[0].text;
        Instruction ins;
        ins.line = line_;
        if (head == "ALLOC") {
            arity(toks, 1);
            ins.kind = OpKind::Alloc;
            ins.qubits = {next_label_};
            live_.insert(next_label_++);
        } else if (head == "FREE") {
            arity(toks, 2);
            ins.kind = OpKind::Free;
            ins.qubits = {label(toks[1])};
            live_.erase(ins.qubits[0]);
        } else if (kOneQubit.count(head) || kTwoQubit.count(head)) {
            arity(toks, kOneQubit.count(head) ? 2 : 3);
            ins.kind = OpKind::Gate;
            ins.name = head;
            for (size_t i = 1; i < toks.size(); ++i) {
                ins.qubits.push_back(label(toks[i]));
            }
            if (ins.qubits.size() == 2 && ins.qubits[0] == ins.qubits[1]) {
                error(toks[2], ErrorCode::SyntaxError, "two-qubit gate on a single qubit");
            }
        } else if (head == "EXP") {
            ins.kind = OpKind::Exp;
            size_t at = 1;
            if (toks.size() == 3 && (toks[1].text == "+" || toks[1].text == "-")) {
                ins.sign = toks[1].text == "-" ? -1 : 1;
                at = 2;
            }
            arity(toks, at + 1);
            ins.pauli = pauli(toks[at], true);
            if (ins.pauli.is_identity()) {
                error(toks[at], ErrorCode::SyntaxError, "exponent of the identity");
            }
        } else if (head == "M") {
            if (toks.size() != 2 && !(toks.size() == 4 && toks[2].text == "HINT")) {
                error(toks[0], ErrorCode::SyntaxError, "expected 'M PAULI [HINT PAULI]'");
            }
            ins.kind = OpKind::Measure;
            ins.pauli = pauli(toks[1], true);
            if (toks.size() == 4) {
                ins.hint = pauli(toks[3], true);
            }
            ++c_.num_outcomes;
        } else if (head == "RAND") {
            arity(toks, 1);
            ins.kind = OpKind::Rand;
            ++c_.num_outcomes;
        } else if (head == "COND") {
            cond(toks, ins);
        } else if (head == "ROT") {
            arity(toks, 3);
            ins.kind = OpKind::Rot;
            ins.angle = register_angle(toks[1]);
            ins.pauli = pauli(toks[2], true);
        } else {
            error(toks[0], ErrorCode::SyntaxError, "unknown instruction '" + head + "'");
        }
        c_.ops.push_back(ins);
    }

    void cond(const std::vector<Token> &toks, Instruction &ins) {
        ins.kind = OpKind::Cond;
        if (toks.size() < 6 || toks[2].text != "IF" || toks[toks.size() - 2].text != "==") {
            error(toks[0], ErrorCode::SyntaxError, "expected 'COND PAULI IF i1^i2^... == b'");
        }
        ins.pauli = pauli(toks[1], true);
        const Token &bt = toks.back();
        if (bt.text != "0" && bt.text != "1") {
            error(bt, ErrorCode::SyntaxError, "condition target must be 0 or 1");
        }
        ins.parity = bt.text == "1";
        std::string expr;
        for (size_t i = 3; i + 2 < toks.size(); ++i) {
            expr += toks[i].text;
        }
        const Token &et = toks[3];
        size_t start = 0;
        while (true) {
            size_t caret = expr.find('^', start);
            std::string term = expr.substr(start, caret == std::string::npos ? std::string::npos : caret - start);
            if (!term.empty() && term[0] == '@') {
                auto it = std::find(c_.angles.begin(), c_.angles.end(), term.substr(1));
                if (it == c_.angles.end()) {
                    error(et, ErrorCode::SyntaxError, "unknown rotation label '" + term.substr(1) + "'");
                }
                ins.angles.push_back(static_cast<size_t>(it - c_.angles.begin()));
            } else {
                auto k = parse_index(term);
                if (!k) {
                    error(et, ErrorCode::SyntaxError, "bad outcome reference '" + term + "'");
                }
                if (*k >= c_.num_outcomes) {
                    error(et, ErrorCode::ForwardOutcomeReference,
                          "outcome " + term + " is not produced before this line");
                }
                ins.outcomes.push_back(*k);
            }
            if (caret == std::string::npos) {
                break;
            }
            start = caret + 1;
        }
    }

    std::vector<std::vector<Token>> lines_;
    size_t line_ = 0;
    Circuit c_;
    std::set<size_t> live_;
    size_t next_label_ = 0;
};

std::string pauli_text(const PauliOperator &p) {
    std::string s = p.to_string();
    if (s.size() > 1 && s[0] == '+' && s[1] != 'i') {
        s.erase(0, 1);
    }
    return s;
}

PauliOperator shifted(const PauliOperator &p, size_t offset) {
    PauliOperator q = p;
    for (size_t i = 0; i < offset; ++i) {
        q.x.insert(0, false);
        q.z.insert(0, false);
    }
    return q;
}

}  // namespace

bool Circuit::has_rotations() const {
    return std::any_of(ops.begin(), ops.end(), [](const Instruction &i) { return i.kind == OpKind::Rot; });
}

std::vector<size_t> Circuit::output_labels() const {
    std::set<size_t> live;
    for (const auto &ins : ops) {
        if (ins.kind == OpKind::Alloc) {
            live.insert(ins.qubits[0]);
        } else if (ins.kind == OpKind::Free) {
            live.erase(ins.qubits[0]);
        }
    }
    return {live.begin(), live.end()};
}

Circuit parse_circuit(std::string_view text) {
    return Parser(text).run();
}

std::string print_circuit(const Circuit &c) {
    std::ostringstream out;
    out << "qubits " << c.declared << "\n";
    if (!c.inputs.empty()) {
        out << "inputs";
        for (size_t q : c.inputs) {
            out << " " << q;
        }
        out << "\n";
    }
    // Angle labels not introduced by a ROT line are declared up front.
    std::set<size_t> by_rot;
    for (const auto &ins : c.ops) {
        if (ins.kind == OpKind::Rot) {
            by_rot.insert(ins.angle);
        }
    }
    std::string declared;
    for (size_t k = 0; k < c.angles.size(); ++k) {
        if (!by_rot.count(k)) {
            declared += " " + c.angles[k];
        }
    }
    if (!declared.empty()) {
        out << "angles" << declared << "\n";
    }
    size_t skip = c.declared;
    for (const auto &ins : c.ops) {
        if (ins.kind == OpKind::Alloc && skip > 0) {
            --skip;
            continue;
        }
        switch (ins.kind) {
            case OpKind::Alloc: out << "ALLOC"; break;
            case OpKind::Free: out << "FREE " << ins.qubits[0]; break;
            case OpKind::Gate:
                out << ins.name;
                for (size_t q : ins.qubits) {
                    out << " " << q;
                }
                break;
            case OpKind::Exp: out << "EXP " << (ins.sign < 0 ? "- " : "+ ") << pauli_text(ins.pauli); break;
            case OpKind::Measure:
                out << "M " << pauli_text(ins.pauli);
                if (ins.hint) {
                    out << " HINT " << pauli_text(*ins.hint);
                }
                break;
            case OpKind::Rand: out << "RAND"; break;
            case OpKind::Cond: {
                out << "COND " << pauli_text(ins.pauli) << " IF ";
                bool first = true;
                for (size_t a : ins.angles) {
                    out << (first ? "" : "^") << "@" << c.angles[a];
                    first = false;
                }
                for (size_t o : ins.outcomes) {
                    out << (first ? "" : "^") << o;
                    first = false;
                }
                out << " == " << (ins.parity ? 1 : 0);
                break;
            }
            case OpKind::Rot: out << "ROT " << c.angles[ins.angle] << " " << pauli_text(ins.pauli); break;
        }
        out << "\n";
    }
    return out.str();
}

Circuit lower_rotations(const Circuit &c) {
    Circuit out = c;
    for (auto &ins : out.ops) {
        if (ins.kind == OpKind::Rot) {
            ins.kind = OpKind::Cond;
            ins.angles = {ins.angle};
            ins.outcomes.clear();
            ins.parity = true;
        }
    }
    return out;
}

Circuit choi_closure(const Circuit &c) {
    size_t k = c.inputs.size();
    if (k == 0) {
        return c;
    }
    Circuit out;
    out.declared = c.declared + k;
    out.num_labels = c.num_labels + k;
    out.angles = c.angles;
    out.num_outcomes = c.num_outcomes;
    for (size_t q = 0; q < out.declared; ++q) {
        Instruction ins;
        ins.kind = OpKind::Alloc;
        ins.qubits = {q};
        out.ops.push_back(ins);
    }
    for (size_t i = 0; i < k; ++i) {
        Instruction h;
        h.kind = OpKind::Gate;
        h.name = "H";
        h.qubits = {i};
        out.ops.push_back(h);
        Instruction cx;
        cx.kind = OpKind::Gate;
        cx.name = "CX";
        cx.qubits = {i, c.inputs[i] + k};
        out.ops.push_back(cx);
    }
    size_t skip = c.declared;
    for (const auto &src : c.ops) {
        if (src.kind == OpKind::Alloc && skip > 0) {
            --skip;
            continue;
        }
        Instruction ins = src;
        for (auto &q : ins.qubits) {
            q += k;
        }
        if (ins.pauli.num_qubits() > 0) {
            ins.pauli = shifted(ins.pauli, k);
        }
        if (ins.hint) {
            ins.hint = shifted(*ins.hint, k);
        }
        out.ops.push_back(ins);
    }
    return out;
}

}  // namespace phocs
