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

#include "phocs/general_form.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "phocs/error.hpp"

namespace phocs {

GeneralForm::GeneralForm() : c(PhasedBruhat::identity(0)), a(0, 0), b(0, 0), m(0, 0), v0(0), p(0), s(0) {
}

void GeneralForm::validate() const {
    size_t n = num_qubits();
    size_t nr = p.size();
    size_t nm = half.size();
    size_t nh = 0;
    for (bool h : half) {
        nh += h;
    }
    auto need = [](bool ok, const std::string &what) {
        if (!ok) {
            fail(ErrorCode::DimensionMismatch, "general form: " + what);
        }
    };
    need(s.size() == nr, "s has wrong length");
    need(a.rows() == n && a.cols() == nr, "A has wrong shape");
    need(b.rows() == nr && b.cols() == nr, "B has wrong shape");
    need(m.rows() == nm && m.cols() == nr, "M has wrong shape");
    need(v0.size() == nm, "v0 has wrong length");
    need(n_angle <= nr && nr - n_angle == nh, "random coordinate count differs from the number of 1/2 entries");
}

bool GeneralForm::operator==(const GeneralForm &o) const {
    return half == o.half && c == o.c && a == o.a && b == o.b && m == o.m && v0 == o.v0 && p == o.p && s == o.s &&
           n_angle == o.n_angle;
}

namespace {

void check_r(const GeneralForm &g, const BitVector &r) {
    if (r.size() != g.num_params()) {
        fail(ErrorCode::DimensionMismatch, "parameter vector has length " + std::to_string(r.size()) + ", expected " +
                                               std::to_string(g.num_params()));
    }
}

}  // namespace

int phase_exponent(const GeneralForm &g, const BitVector &r) {
    check_r(g, r);
    int e = dot(g.p, r) ? 1 : 0;
    if (dot(g.b * r ^ g.s, r)) {
        e += 2;
    }
    return e & 3;
}

ExactScalar phase_at(const GeneralForm &g, const BitVector &r) {
    return ExactScalar::i_power(phase_exponent(g, r));
}

BasisImageState state_at(const GeneralForm &g, const BitVector &r) {
    BasisImageState st{g.c, g.a * r};
    st.c.add_phase(2 * phase_exponent(g, r));
    return st;
}

BitVector outcome_at(const GeneralForm &g, const BitVector &r) {
    check_r(g, r);
    return g.v0 ^ (g.m * r);
}

BitMatrix random_block(const GeneralForm &g) {
    std::vector<size_t> cols;
    for (size_t k = g.n_angle; k < g.num_params(); ++k) {
        cols.push_back(k);
    }
    return g.m.select_cols(cols);
}

PhaseFit fit_phase(size_t nr, const std::function<int(const BitVector &)> &f) {
    PhaseFit fit;
    fit.p = BitVector(nr);
    fit.s = BitVector(nr);
    fit.b = BitMatrix(nr, nr);
    fit.kappa = f(BitVector(nr)) & 3;
    std::vector<int> single(nr);
    for (size_t i = 0; i < nr; ++i) {
        int e = (f(BitVector::unit(nr, i)) - fit.kappa) & 3;
        single[i] = e;
        fit.p.set(i, e & 1);
        fit.s.set(i, e >> 1);
    }
    for (size_t i = 0; i < nr; ++i) {
        for (size_t j = i + 1; j < nr; ++j) {
            BitVector r = BitVector::unit(nr, i);
            r.set(j, true);
            int e = (f(r) - fit.kappa) & 3;
            // i^{p_i xor p_j} (-1)^{s_i + s_j + B_ij}
            int base = ((fit.p.get(i) ^ fit.p.get(j)) ? 1 : 0) + 2 * ((fit.s.get(i) ^ fit.s.get(j)) ? 1 : 0);
            int diff = (e - base) & 3;
            if (diff & 1) {
                fail(ErrorCode::DecompositionFailure, "phase function is not of affine-quadratic shape");
            }
            fit.b.set(i, j, diff == 2);
        }
    }
    return fit;
}

GeneralForm substitute(const GeneralForm &g, const BitMatrix &gmat, const BitVector &t) {
    size_t nr = g.num_params();
    if (gmat.rows() != nr || gmat.cols() != nr || t.size() != nr) {
        fail(ErrorCode::DimensionMismatch, "reparametrization has the wrong shape");
    }
    inverse(gmat);
    GeneralForm out = g;
    PhaseFit fit = fit_phase(nr, [&](const BitVector &r) { return phase_exponent(g, gmat * r ^ t); });
    out.p = fit.p;
    out.b = fit.b;
    out.s = fit.s;
    out.a = g.a * gmat;
    out.m = g.m * gmat;
    out.v0 = g.v0 ^ (g.m * t);
    BitVector shift = g.a * t;
    if (!shift.is_zero()) {
        out.c = left_mul_pauli(g.c, image(g.c, PauliOperator(0, shift, BitVector(shift.size()))));
    }
    out.c.add_phase(2 * fit.kappa);
    return out;
}

bool is_canonical(const GeneralForm &g) {
    BitMatrix rb = random_block(g);
    if (!is_reduced_column_echelon(rb)) {
        return false;
    }
    ColumnReduction red = rref_with_transform(rb);
    for (size_t k = 0; k < red.profile.size(); ++k) {
        size_t row = red.profile[k];
        if (g.v0.get(row)) {
            return false;
        }
        for (size_t j = 0; j < g.n_angle; ++j) {
            if (g.m.get(row, j)) {
                return false;
            }
        }
    }
    return true;
}

GeneralForm canonicalize(const GeneralForm &g) {
    g.validate();
    size_t na = g.n_angle;
    size_t nr = g.num_params();
    size_t nrand = nr - na;
    ColumnReduction red = rref_with_transform(random_block(g));
    const BitMatrix &t = red.transform;
    // r_rand = T (r'_rand + t' + K r_ang)
    BitVector tp(nrand);
    BitMatrix k(nrand, na);
    for (size_t i = 0; i < red.profile.size(); ++i) {
        size_t row = red.profile[i];
        tp.set(i, g.v0.get(row));
        for (size_t j = 0; j < na; ++j) {
            k.set(i, j, g.m.get(row, j));
        }
    }
    BitMatrix tk = t * k;
    BitVector tt = t * tp;
    BitMatrix gmat = BitMatrix::identity(nr);
    BitVector shift(nr);
    for (size_t i = 0; i < nrand; ++i) {
        for (size_t j = 0; j < na; ++j) {
            gmat.set(na + i, j, tk.get(i, j));
        }
        for (size_t j = 0; j < nrand; ++j) {
            gmat.set(na + i, na + j, t.get(i, j));
        }
        shift.set(na + i, tt.get(i));
    }
    GeneralForm out = substitute(g, gmat, shift);
    if (!is_canonical(out)) {
        fail(ErrorCode::NotCanonical, "canonicalization did not reach the canonical shape");
    }
    return out;
}

namespace {

std::string bits_text(const BitVector &v) {
    return v.to_string();
}

std::string rows_text(const BitMatrix &m) {
    std::string out;
    for (const auto &row : m.to_strings()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += row.empty() ? "-" : row;
    }
    return out;
}

BitMatrix parse_matrix(const std::string &text, size_t rows, size_t cols, const std::string &name) {
    std::istringstream in(text);
    std::vector<std::string> parts;
    std::string tok;
    while (in >> tok) {
        parts.push_back(tok == "-" ? "" : tok);
    }
    if (parts.size() != rows) {
        fail(ErrorCode::FormatError, name + ": expected " + std::to_string(rows) + " rows");
    }
    for (const auto &row : parts) {
        if (row.size() != cols || row.find_first_not_of("01") != std::string::npos) {
            fail(ErrorCode::FormatError, name + ": bad row '" + row + "'");
        }
    }
    return BitMatrix::from_rows(parts, cols);
}

BitVector parse_bits(const std::string &text, size_t len, const std::string &name) {
    std::string t = text == "-" ? "" : text;
    if (t.size() != len || t.find_first_not_of("01") != std::string::npos) {
        fail(ErrorCode::FormatError, name + ": expected " + std::to_string(len) + " bits, got '" + text + "'");
    }
    return BitVector::from_string(t);
}

size_t parse_count(const std::map<std::string, std::string> &f, const std::string &name) {
    auto it = f.find(name);
    if (it == f.end()) {
        fail(ErrorCode::FormatError, "missing field '" + name + "'");
    }
    try {
        size_t used = 0;
        unsigned long v = std::stoul(it->second, &used);
        if (used != it->second.size()) {
            throw std::invalid_argument("trailing");
        }
        return v;
    } catch (const std::exception &) {
        fail(ErrorCode::FormatError, "field '" + name + "' is not a count");
    }
}

const std::string &get(const std::map<std::string, std::string> &f, const std::string &name) {
    auto it = f.find(name);
    if (it == f.end()) {
        fail(ErrorCode::FormatError, "missing field '" + name + "'");
    }
    return it->second;
}

}  // namespace

void write_general_form(std::ostream &out, const GeneralForm &g) {
    out << "phocs-general-form v1\n";
    out << "n " << g.num_qubits() << "\n";
    out << "n_M " << g.num_outcomes() << "\n";
    out << "n_r " << g.num_params() << "\n";
    out << "n_angle " << g.n_angle << "\n";
    std::string q;
    for (bool h : g.half) {
        q += h ? 'h' : '1';
    }
    out << "q " << (q.empty() ? "-" : q) << "\n";
    out << "A " << rows_text(g.a) << "\n";
    out << "B " << rows_text(g.b) << "\n";
    out << "M " << rows_text(g.m) << "\n";
    out << "v0 " << (g.v0.size() ? bits_text(g.v0) : "-") << "\n";
    out << "p " << (g.p.size() ? bits_text(g.p) : "-") << "\n";
    out << "s " << (g.s.size() ? bits_text(g.s) : "-") << "\n";
    write_bruhat(out, g.c, "c.");
    out << "end\n";
}

GeneralForm read_general_form(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != "phocs-general-form v1") {
        fail(ErrorCode::FormatError, "missing general form header");
    }
    std::map<std::string, std::string> f;
    bool ended = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line == "end") {
            ended = true;
            break;
        }
        size_t sp = line.find(' ');
        std::string name = line.substr(0, sp);
        if (f.count(name)) {
            fail(ErrorCode::FormatError, "duplicate field '" + name + "'");
        }
        f[name] = sp == std::string::npos ? "" : line.substr(sp + 1);
    }
    if (!ended) {
        fail(ErrorCode::FormatError, "general form is missing 'end'");
    }
    GeneralForm g;
    size_t n = parse_count(f, "n");
    size_t nm = parse_count(f, "n_M");
    size_t nr = parse_count(f, "n_r");
    g.n_angle = parse_count(f, "n_angle");
    std::string q = get(f, "q");
    if (q == "-") {
        q.clear();
    }
    if (q.size() != nm || q.find_first_not_of("1h") != std::string::npos) {
        fail(ErrorCode::FormatError, "q must have n_M characters from {1,h}");
    }
    g.half.clear();
    for (char ch : q) {
        g.half.push_back(ch == 'h');
    }
    g.a = parse_matrix(get(f, "A"), n, nr, "A");
    g.b = parse_matrix(get(f, "B"), nr, nr, "B");
    g.m = parse_matrix(get(f, "M"), nm, nr, "M");
    g.v0 = parse_bits(get(f, "v0"), nm, "v0");
    g.p = parse_bits(get(f, "p"), nr, "p");
    g.s = parse_bits(get(f, "s"), nr, "s");
    g.c = read_bruhat(n, f, "c.");
    try {
        g.validate();
    } catch (const Error &e) {
        fail(ErrorCode::FormatError, e.what());
    }
    return g;
}

std::string dump(const GeneralForm &g) {
    std::ostringstream out;
    write_general_form(out, g);
    return out.str();
}

}  // namespace phocs
