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

#include <istream>
#include <ostream>
#include <sstream>

#include "phocs/error.hpp"
#include "phocs/phased_clifford.hpp"

namespace phocs {

std::string TableKey::to_string() const {
    return std::string(sign > 0 ? "+" : "-") + " " + qi + " " + qh;
}

const PhasedBruhat &BruhatTable::lookup(const TableKey &key) const {
    auto it = entries.find(key.to_string());
    if (it == entries.end()) {
        fail(ErrorCode::DecompositionFailure, "no table entry for key '" + key.to_string() + "'");
    }
    return it->second.second;
}

std::vector<TableKey> table_keys() {
    std::vector<TableKey> keys;
    const char *is[] = {"I", "X0", "Y0", "Z0", "Y0*Y1"};
    const char *hs[] = {"I", "X2", "Y2", "Z2", "Y2*Y3"};
    for (int sign : {1, -1}) {
        for (const char *qi : is) {
            for (const char *qh : hs) {
                if (std::string(qi) == "I" && std::string(qh) == "I") {
                    continue;
                }
                keys.push_back(TableKey{sign, qi, qh});
            }
        }
    }
    return keys;
}

namespace {

PauliOperator key_pauli(const TableKey &key, size_t n) {
    return mul(PauliOperator::parse(key.qi, n), PauliOperator::parse(key.qh, n));
}

}  // namespace

DenseMatrix table_target(const TableKey &key) {
    PauliOperator q = key_pauli(key, 4);
    BitVector h = PauliOperator::parse(key.qh, 4).support();
    return matrix_of(4, [&](DenseState &st) {
        for (size_t j : h.ones()) {
            apply_htilde(st, j);
        }
        apply_exponent(st, key.sign, q);
    });
}

PhasedBruhat bruhat_decompose_small(const DenseMatrix &u) {
    size_t n = u.n;
    if (n > 6) {
        fail(ErrorCode::TooLarge, "decomposition is limited to 6 qubits");
    }
    DenseMatrix ud = u.adjoint();
    if (!(u * ud == DenseMatrix::identity(n))) {
        fail(ErrorCode::NotClifford, "matrix is not unitary");
    }
    std::vector<PauliOperator> ximg;
    std::vector<PauliOperator> zimg;
    for (size_t j = 0; j < n; ++j) {
        for (char kind : {'X', 'Z'}) {
            auto res = as_scaled_pauli(u * pauli_matrix(PauliOperator::single(n, j, kind)) * ud);
            if (!res) {
                fail(ErrorCode::NotClifford, std::string("image of ") + kind + std::to_string(j) + " is not a Pauli");
            }
            (kind == 'X' ? ximg : zimg).push_back(res->second);
        }
    }

    // Basis of the Z-image span whose first k members have independent x-parts.
    std::vector<PauliOperator> vecs = zimg;
    size_t k = 0;
    for (size_t col = 0; col < n; ++col) {
        size_t found = n;
        for (size_t i = k; i < n; ++i) {
            if (vecs[i].x.get(col)) {
                found = i;
                break;
            }
        }
        if (found == n) {
            continue;
        }
        std::swap(vecs[found], vecs[k]);
        for (size_t i = 0; i < n; ++i) {
            if (i != k && vecs[i].x.get(col)) {
                vecs[i].x ^= vecs[k].x;
                vecs[i].z ^= vecs[k].z;
            }
        }
        ++k;
    }
    std::vector<BitVector> cols;
    for (size_t i = 0; i < k; ++i) {
        cols.push_back(vecs[i].x);
    }
    for (size_t c = 0; c < n && cols.size() < n; ++c) {
        cols.push_back(BitVector::unit(n, c));
        if (BitMatrix::from_columns(cols, n).rank() < cols.size()) {
            cols.pop_back();
        }
    }
    BitMatrix f = BitMatrix::from_columns(cols, n);
    BitMatrix gam(n, n);
    for (size_t i = 0; i < k; ++i) {
        BitVector cz = f.left_mul(vecs[i].z);
        for (size_t r = 0; r < k; ++r) {
            gam.set(r, i, cz.get(r));
        }
    }
    if (!(gam == gam.transpose())) {
        fail(ErrorCode::NotClifford, "Z-images are not isotropic");
    }
    std::vector<uint8_t> d(n, 0);
    for (size_t j = 0; j < n; ++j) {
        d[j] = gam.get(j, j);
    }
    PhaseCssTableau up = PhaseCssTableau::from_parts(f, d, gam);
    BitVector hset(n);
    for (size_t j = 0; j < k; ++j) {
        hset.set(j, true);
    }

    // What remains maps Z-type operators to Z-type operators.
    std::vector<BitVector> acols;
    std::vector<BitVector> bcols;
    for (size_t j = 0; j < n; ++j) {
        PauliOperator w = hadamard_conjugate(up.conjugate_inverse(zimg[j]), hset);
        if (!w.x.is_zero()) {
            fail(ErrorCode::DecompositionFailure, "residual does not preserve Z-type operators");
        }
        w = hadamard_conjugate(up.conjugate_inverse(ximg[j]), hset);
        acols.push_back(w.x);
        bcols.push_back(w.z);
    }
    BitMatrix fv = BitMatrix::from_columns(acols, n);
    if (fv.rank() < n) {
        fail(ErrorCode::NotClifford, "X-images are dependent");
    }
    BitMatrix gv = fv.transpose() * BitMatrix::from_columns(bcols, n);
    if (!(gv == gv.transpose())) {
        fail(ErrorCode::NotClifford, "X-images are not symplectic");
    }
    std::vector<uint8_t> dv(n, 0);
    for (size_t j = 0; j < n; ++j) {
        dv[j] = gv.get(j, j);
    }
    PhasedBruhat c = PhasedBruhat::identity(n);
    c.up = up;
    c.hset = hset;
    c.vp = PhaseCssTableau::from_parts(fv, dv, gv);

    auto res = as_scaled_pauli(c.dense().adjoint() * u);
    if (!res) {
        fail(ErrorCode::NotClifford, "residual is not a scaled Pauli");
    }
    int m0 = res->first.omega_log();
    if (m0 < 0) {
        fail(ErrorCode::NotClifford, "global phase is not a power of e^{i pi/4}");
    }
    PauliOperator p = c.vp.conjugate(res->second);
    c.m = (m0 + 2 * p.s) & 7;
    p.s = 0;
    c.pauli = p;
    if (k == 0) {
        // No Hadamards: fold V into U.
        PauliOperator q = c.vp.conjugate_inverse(c.pauli);
        c.up = c.up.compose(c.vp);
        c.vp = PhaseCssTableau(n);
        c.add_phase(2 * q.s);
        q.s = 0;
        c.pauli = q;
    }
    if (!(c.dense() == u)) {
        fail(ErrorCode::DecompositionFailure, "reconstruction differs from the input");
    }
    return c;
}

BruhatTable generate_table() {
    BruhatTable table;
    for (const TableKey &key : table_keys()) {
        BitVector used = key_pauli(key, 4).support();
        std::vector<size_t> slots = used.ones();
        size_t nl = slots.size();
        PauliOperator q(4);
        q = key_pauli(key, 4);
        BitVector h = PauliOperator::parse(key.qh, 4).support();
        DenseMatrix local = matrix_of(nl, [&](DenseState &st) {
            PauliOperator ql(nl);
            ql.s = q.s;
            for (size_t i = 0; i < nl; ++i) {
                ql.x.set(i, q.x.get(slots[i]));
                ql.z.set(i, q.z.get(slots[i]));
                if (h.get(slots[i])) {
                    apply_htilde(st, i);
                }
            }
            apply_exponent(st, key.sign, ql);
        });
        PhasedBruhat entry = bruhat_decompose_small(local);
        for (size_t slot = 0; slot < 4; ++slot) {
            if (!used.get(slot)) {
                entry = insert_qubit(entry, slot);
            }
        }
        if (!(entry.dense() == table_target(key))) {
            fail(ErrorCode::DecompositionFailure, "table entry '" + key.to_string() + "' does not reconstruct");
        }
        table.entries[key.to_string()] = {key, entry};
    }
    return table;
}

const BruhatTable &shared_table() {
    static const BruhatTable table = generate_table();
    return table;
}

namespace {

std::string rows_text(const BitMatrix &m) {
    std::string s;
    for (const auto &row : m.to_strings()) {
        if (!s.empty()) {
            s += ' ';
        }
        s += row;
    }
    return s;
}

std::string digits_text(const std::vector<uint8_t> &v) {
    std::string s;
    for (uint8_t d : v) {
        s += static_cast<char>('0' + d);
    }
    return s;
}

BitMatrix parse_rows(const std::string &text, size_t n) {
    std::istringstream in(text);
    std::vector<std::string> rows;
    std::string tok;
    while (in >> tok) {
        rows.push_back(tok);
    }
    if (rows.size() != n) {
        fail(ErrorCode::FormatError, "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
    }
    return BitMatrix::from_rows(rows, n);
}

std::vector<uint8_t> parse_digits(const std::string &text, size_t n) {
    if (text.size() != n) {
        fail(ErrorCode::FormatError, "expected " + std::to_string(n) + " phase digits in '" + text + "'");
    }
    std::vector<uint8_t> out;
    for (char ch : text) {
        if (ch < '0' || ch > '3') {
            fail(ErrorCode::FormatError, "phase digit out of range in '" + text + "'");
        }
        out.push_back(static_cast<uint8_t>(ch - '0'));
    }
    return out;
}

const std::string &field(const std::map<std::string, std::string> &fields, const std::string &name) {
    auto it = fields.find(name);
    if (it == fields.end()) {
        fail(ErrorCode::FormatError, "missing field '" + name + "'");
    }
    return it->second;
}

}  // namespace

void write_bruhat(std::ostream &out, const PhasedBruhat &c, const std::string &prefix) {
    out << prefix << "m " << c.m << "\n";
    out << prefix << "hset " << c.hset.to_string() << "\n";
    out << prefix << "pauli " << c.pauli.to_string() << "\n";
    for (auto [name, t] : {std::pair<const char *, const PhaseCssTableau *>{"up", &c.up}, {"vp", &c.vp}}) {
        out << prefix << name << ".xi " << rows_text(t->xi()) << "\n";
        out << prefix << name << ".eta " << rows_text(t->eta()) << "\n";
        out << prefix << name << ".gamma " << digits_text(t->gamma()) << "\n";
    }
}

PhasedBruhat read_bruhat(size_t n, const std::map<std::string, std::string> &fields, const std::string &prefix) {
    PhasedBruhat c;
    const std::string &mtext = field(fields, prefix + "m");
    if (mtext.size() != 1 || mtext[0] < '0' || mtext[0] > '7') {
        fail(ErrorCode::FormatError, "phase exponent must be a digit 0-7, got '" + mtext + "'");
    }
    c.m = mtext[0] - '0';
    const std::string &h = field(fields, prefix + "hset");
    if (h.size() != n) {
        fail(ErrorCode::FormatError, "hset has length " + std::to_string(h.size()) + ", expected " + std::to_string(n));
    }
    c.hset = BitVector::from_string(h);
    try {
        c.pauli = PauliOperator::parse(field(fields, prefix + "pauli"), n);
    } catch (const Error &err) {
        fail(ErrorCode::FormatError, err.what());
    }
    if (c.pauli.s != 0) {
        fail(ErrorCode::FormatError, "central Pauli must have xz-phase 0");
    }
    for (auto [name, t] : {std::pair<const char *, PhaseCssTableau *>{"up", &c.up}, {"vp", &c.vp}}) {
        std::string base = prefix + name;
        BitMatrix xi = parse_rows(field(fields, base + ".xi"), n);
        BitMatrix eta = parse_rows(field(fields, base + ".eta"), n);
        std::vector<uint8_t> gamma = parse_digits(field(fields, base + ".gamma"), n);
        *t = PhaseCssTableau::from_images(xi, eta, gamma);
    }
    return c;
}

void write_table(std::ostream &out, const BruhatTable &table) {
    out << "phocs-bruhat-table v1\n";
    out << "entries " << table.size() << "\n";
    for (const auto &[name, item] : table.entries) {
        out << "key " << name << "\n";
        write_bruhat(out, item.second, "");
        out << "end\n";
    }
}

BruhatTable read_table(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != "phocs-bruhat-table v1") {
        fail(ErrorCode::FormatError, "missing table header");
    }
    BruhatTable table;
    std::map<std::string, std::string> fields;
    std::optional<TableKey> key;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        size_t sp = line.find(' ');
        std::string name = line.substr(0, sp);
        std::string value = sp == std::string::npos ? "" : line.substr(sp + 1);
        if (name == "entries") {
            continue;
        }
        if (name == "key") {
            std::istringstream ks(value);
            TableKey k;
            std::string sign;
            if (!(ks >> sign >> k.qi >> k.qh) || (sign != "+" && sign != "-")) {
                fail(ErrorCode::FormatError, "line " + std::to_string(lineno) + ": bad key '" + value + "'");
            }
            k.sign = sign == "+" ? 1 : -1;
            key = k;
            fields.clear();
        } else if (name == "end") {
            if (!key) {
                fail(ErrorCode::FormatError, "line " + std::to_string(lineno) + ": 'end' without 'key'");
            }
            PhasedBruhat entry;
            try {
                entry = read_bruhat(4, fields, "");
            } catch (const Error &err) {
                fail(ErrorCode::FormatError, "entry '" + key->to_string() + "': " + err.what());
            }
            table.entries[key->to_string()] = {*key, entry};
            key.reset();
        } else {
            if (!key) {
                fail(ErrorCode::FormatError, "line " + std::to_string(lineno) + ": field outside an entry");
            }
            fields[name] = value;
        }
    }
    if (key) {
        fail(ErrorCode::FormatError, "unterminated entry '" + key->to_string() + "'");
    }
    return table;
}

std::vector<std::string> verify_table(const BruhatTable &table) {
    std::vector<std::string> bad;
    std::map<std::string, TableKey> expected;
    for (const auto &k : table_keys()) {
        expected[k.to_string()] = k;
    }
    for (const auto &[name, k] : expected) {
        if (!table.entries.count(name)) {
            bad.push_back("missing " + name);
        }
    }
    for (const auto &[name, item] : table.entries) {
        if (!expected.count(name)) {
            bad.push_back("unexpected " + name);
            continue;
        }
        if (!(item.second.dense() == table_target(item.first))) {
            bad.push_back(name);
        }
    }
    return bad;
}

}  // namespace phocs
