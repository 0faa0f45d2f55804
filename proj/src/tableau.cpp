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

#include <utility>

#include "phocs/error.hpp"
#include "phocs/phased_clifford.hpp"

namespace phocs {

namespace {

BitMatrix symmetric_offdiag(const BitMatrix &e) {
    BitMatrix r = e;
    for (size_t j = 0; j < r.rows(); ++j) {
        r.set(j, j, false);
    }
    if (!(r == r.transpose())) {
        fail(ErrorCode::DimensionMismatch, "quadratic form matrix is not symmetric");
    }
    return r;
}

}  // namespace

PhaseCssTableau::PhaseCssTableau(size_t n)
    : f_(BitMatrix::identity(n)), finv_(BitMatrix::identity(n)), d_(n, 0), e_(n, n) {
}

PhaseCssTableau PhaseCssTableau::css(const BitMatrix &f) {
    return from_parts(f, std::vector<uint8_t>(f.rows(), 0), BitMatrix(f.rows(), f.rows()));
}

PhaseCssTableau PhaseCssTableau::diagonal(std::vector<uint8_t> d, const BitMatrix &e) {
    BitMatrix id = BitMatrix::identity(d.size());
    return from_parts(id, std::move(d), e);
}

PhaseCssTableau PhaseCssTableau::from_parts(const BitMatrix &f, std::vector<uint8_t> d, const BitMatrix &e) {
    size_t n = f.rows();
    if (f.cols() != n || d.size() != n || e.rows() != n || e.cols() != n) {
        fail(ErrorCode::DimensionMismatch, "phase-CSS components disagree on qubit count");
    }
    PhaseCssTableau t;
    t.f_ = f;
    t.d_ = std::move(d);
    for (auto &v : t.d_) {
        v &= 3;
    }
    t.e_ = symmetric_offdiag(e);
    t.refresh();
    return t;
}

PhaseCssTableau PhaseCssTableau::from_images(const BitMatrix &xi, const BitMatrix &eta,
                                             const std::vector<uint8_t> &gamma) {
    size_t n = xi.rows();
    if (xi.cols() != n || eta.rows() != n || eta.cols() != n || gamma.size() != n) {
        fail(ErrorCode::FormatError, "tableau images have inconsistent shapes");
    }
    BitMatrix g = xi.transpose() * eta;
    if (!(g == g.transpose())) {
        fail(ErrorCode::FormatError, "tableau images are not symplectic");
    }
    for (size_t j = 0; j < n; ++j) {
        if (g.get(j, j) != static_cast<bool>(gamma[j] & 1)) {
            fail(ErrorCode::FormatError, "X-image phase of qubit " + std::to_string(j) + " is not Hermitian");
        }
    }
    try {
        return from_parts(xi, gamma, g);
    } catch (const Error &err) {
        fail(ErrorCode::FormatError, std::string("bad tableau: ") + err.what());
    }
}

void PhaseCssTableau::refresh() {
    finv_ = inverse(f_);
}

BitMatrix PhaseCssTableau::gamma_hat() const {
    BitMatrix g = e_;
    for (size_t j = 0; j < d_.size(); ++j) {
        g.set(j, j, d_[j] & 1);
    }
    return g;
}

BitMatrix PhaseCssTableau::eta() const {
    return finv_.transpose() * gamma_hat();
}

int PhaseCssTableau::phase_at(const BitVector &x) const {
    int total = 0;
    size_t twice_pairs = 0;
    for (size_t j : x.ones()) {
        total += d_[j];
        twice_pairs += (e_.row(j) & x).popcount();
    }
    total += static_cast<int>(twice_pairs);  // 2 * (twice_pairs / 2)
    return total & 3;
}

PauliOperator PhaseCssTableau::conjugate(const PauliOperator &p) const {
    if (p.num_qubits() != num_qubits()) {
        fail(ErrorCode::DimensionMismatch, "tableau conjugation size mismatch");
    }
    BitVector w = gamma_hat() * p.x;
    w ^= p.z;
    return PauliOperator(static_cast<uint8_t>((p.s + phase_at(p.x)) & 3), f_ * p.x, finv_.left_mul(w));
}

PauliOperator PhaseCssTableau::conjugate_inverse(const PauliOperator &p) const {
    if (p.num_qubits() != num_qubits()) {
        fail(ErrorCode::DimensionMismatch, "tableau conjugation size mismatch");
    }
    BitVector a = finv_ * p.x;
    BitVector b = f_.left_mul(p.z);
    b ^= gamma_hat() * a;
    return PauliOperator(static_cast<uint8_t>((p.s - phase_at(a)) & 3), a, b);
}

namespace {

/// The form x -> q(G x) of `t`, returned as (d, E).
std::pair<std::vector<uint8_t>, BitMatrix> substitute(const PhaseCssTableau &t, const BitMatrix &g) {
    size_t n = g.cols();
    std::vector<BitVector> cols;
    std::vector<uint8_t> d(n);
    for (size_t k = 0; k < n; ++k) {
        cols.push_back(g.column(k));
        d[k] = static_cast<uint8_t>(t.phase_at(cols[k]));
    }
    BitMatrix e(n, n);
    for (size_t k = 0; k < n; ++k) {
        for (size_t l = k + 1; l < n; ++l) {
            int v = (t.phase_at(cols[k] ^ cols[l]) - d[k] - d[l]) & 3;
            if (v == 2) {
                e.set(k, l, true);
                e.set(l, k, true);
            }
        }
    }
    return {d, e};
}

}  // namespace

PhaseCssTableau PhaseCssTableau::compose(const PhaseCssTableau &right) const {
    if (right.num_qubits() != num_qubits()) {
        fail(ErrorCode::DimensionMismatch, "composing tableaus of different sizes");
    }
    auto [d, e] = substitute(*this, right.f_);
    for (size_t j = 0; j < d.size(); ++j) {
        d[j] = static_cast<uint8_t>((d[j] + right.d_[j]) & 3);
    }
    e += right.e_;
    PhaseCssTableau t;
    t.f_ = f_ * right.f_;
    t.d_ = std::move(d);
    t.e_ = std::move(e);
    t.finv_ = right.finv_ * finv_;
    return t;
}

PhaseCssTableau PhaseCssTableau::adjoint() const {
    auto [d, e] = substitute(*this, finv_);
    for (auto &v : d) {
        v = static_cast<uint8_t>((4 - v) & 3);
    }
    PhaseCssTableau t;
    t.f_ = finv_;
    t.finv_ = f_;
    t.d_ = std::move(d);
    t.e_ = std::move(e);
    return t;
}

PhaseCssTableau PhaseCssTableau::insert_qubit(size_t pos) const {
    if (pos > num_qubits()) {
        fail(ErrorCode::PositionOutOfRange, "insert position " + std::to_string(pos + 1) + " on " +
                                                std::to_string(num_qubits()) + " qubits");
    }
    PhaseCssTableau t = *this;
    for (BitMatrix *m : {&t.f_, &t.finv_, &t.e_}) {
        m->insert_row(pos);
        m->insert_col(pos);
    }
    t.f_.set(pos, pos, true);
    t.finv_.set(pos, pos, true);
    t.d_.insert(t.d_.begin() + static_cast<std::ptrdiff_t>(pos), 0);
    return t;
}

PhaseCssTableau PhaseCssTableau::permuted(const std::vector<size_t> &order) const {
    PhaseCssTableau t;
    t.f_ = f_.select_rows(order).select_cols(order);
    t.finv_ = finv_.select_rows(order).select_cols(order);
    t.e_ = e_.select_rows(order).select_cols(order);
    for (size_t k : order) {
        t.d_.push_back(d_[k]);
    }
    return t;
}

PhaseCssTableau PhaseCssTableau::direct_sum(const PhaseCssTableau &other) const {
    size_t a = num_qubits();
    size_t n = a + other.num_qubits();
    BitMatrix f(n, n);
    BitMatrix e(n, n);
    std::vector<uint8_t> d = d_;
    d.insert(d.end(), other.d_.begin(), other.d_.end());
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) {
            if (r < a && c < a) {
                f.set(r, c, f_.get(r, c));
                e.set(r, c, e_.get(r, c));
            } else if (r >= a && c >= a) {
                f.set(r, c, other.f_.get(r - a, c - a));
                e.set(r, c, other.e_.get(r - a, c - a));
            }
        }
    }
    return from_parts(f, std::move(d), e);
}

bool PhaseCssTableau::is_identity() const {
    if (!(f_ == BitMatrix::identity(num_qubits())) || !e_.is_zero()) {
        return false;
    }
    for (uint8_t v : d_) {
        if (v) {
            return false;
        }
    }
    return true;
}

bool PhaseCssTableau::operator==(const PhaseCssTableau &other) const {
    return f_ == other.f_ && d_ == other.d_ && e_ == other.e_;
}

void PhaseCssTableau::apply(DenseState &st) const {
    if (st.n != num_qubits()) {
        fail(ErrorCode::DimensionMismatch, "tableau applied to a state of another size");
    }
    std::vector<ExactScalar> out(st.amp.size());
    for (uint64_t x = 0; x < st.amp.size(); ++x) {
        BitVector v = BitVector::from_uint64(st.n, x);
        out[(f_ * v).to_uint64()] = st.amp[x].times_omega(2 * phase_at(v));
    }
    st.amp = std::move(out);
}

DenseMatrix PhaseCssTableau::dense() const {
    return matrix_of(num_qubits(), [&](DenseState &st) { apply(st); });
}

}  // namespace phocs
