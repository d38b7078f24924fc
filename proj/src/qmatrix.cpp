#include "pms/qmatrix.hpp"

#include <stdexcept>

namespace pms {

QMat::QMat(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw std::invalid_argument("QMat: ragged initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
    QMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

QVec QMat::row(std::size_t i) const {
    QVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void QMat::set_row(std::size_t i, const QVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("QMat: row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

bool QMat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

QMat operator+(const QMat& x, const QMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("QMat: shape mismatch in +");
    QMat z(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = x.a_[k] + y.a_[k];
    return z;
}

QMat operator-(const QMat& x, const QMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("QMat: shape mismatch in -");
    QMat z(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = x.a_[k] - y.a_[k];
    return z;
}

QMat operator*(const QMat& x, const QMat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("QMat: shape mismatch in *");
    QMat z(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const Rat& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols_; ++j) {
                const Rat& ykj = y.at(k, j);
                if (!ykj.is_zero()) z.at(i, j) += xik * ykj;
            }
        }
    return z;
}

QMat QMat::operator*(const Rat& s) const {
    QMat z(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) z.a_[k] = a_[k] * s;
    return z;
}

bool operator==(const QMat& x, const QMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QVec QMat::apply(const QVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("QMat: vector length mismatch");
    QVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<std::size_t> QMat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && at(sel, c).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
        Rat inv = Rat(1) / at(r, c);
        for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            Rat f = at(i, c);
            for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t QMat::rank() const {
    QMat copy = *this;
    return copy.rref().size();
}

QMat QMat::pow(unsigned k) const {
    if (!is_square()) throw std::invalid_argument("QMat: pow of non-square matrix");
    QMat acc = identity(rows_);
    for (unsigned i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

std::vector<QVec> QMat::kernel_basis() const {
    QMat m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols_);
        v[c] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

QVec QMat::solve(const QVec& b) const {
    if (!is_square() || b.size() != rows_)
        throw std::invalid_argument("QMat: solve expects square system");
    QMat aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() == cols_)
        throw std::domain_error("QMat: singular system in solve");
    QVec x(cols_);
    for (std::size_t i = 0; i < rows_; ++i) x[pivots[i]] = aug.at(i, cols_);
    return x;
}

QMat QMat::inverse() const {
    if (!is_square()) throw std::invalid_argument("QMat: inverse of non-square matrix");
    QMat aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Rat(1);
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() >= cols_)
        throw std::domain_error("QMat: singular matrix in inverse");
    QMat inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

Subspace Subspace::span(const std::vector<QVec>& vectors, std::size_t ambient_dim) {
    QMat m = QMat::from_rows(vectors, ambient_dim);
    std::size_t r = m.rref().size();
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < r; ++i) s.basis_.push_back(m.row(i));
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        QVec v(ambient_dim);
        v[i] = Rat(1);
        rows.push_back(std::move(v));
    }
    return span(rows, ambient_dim);
}

bool Subspace::contains(const QVec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    std::vector<QVec> rows = basis_;
    rows.push_back(v);
    return QMat::from_rows(rows, ambient_).rank() == dim();
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

Subspace operator+(const Subspace& u, const Subspace& v) {
    if (u.ambient_ != v.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    std::vector<QVec> rows = u.basis_;
    rows.insert(rows.end(), v.basis_.begin(), v.basis_.end());
    return Subspace::span(rows, u.ambient_);
}

bool operator==(const Subspace& u, const Subspace& v) {
    return u.ambient_ == v.ambient_ && u.basis_ == v.basis_;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    /* Vectors of U meet V where a combination of U's basis equals one of V's.
     * Solve [U^T | -V^T] x = 0 and read off the U-part of each kernel vector. */
    std::size_t du = dim(), dv = other.dim();
    QMat m(ambient_, du + dv);
    for (std::size_t j = 0; j < du; ++j)
        for (std::size_t i = 0; i < ambient_; ++i) m.at(i, j) = basis_[j][i];
    for (std::size_t j = 0; j < dv; ++j)
        for (std::size_t i = 0; i < ambient_; ++i) m.at(i, du + j) = -other.basis_[j][i];
    std::vector<QVec> gens;
    for (const auto& k : m.kernel_basis()) {
        QVec v(ambient_);
        for (std::size_t j = 0; j < du; ++j)
            if (!k[j].is_zero()) v = qvec_add(v, qvec_scale(k[j], basis_[j]));
        gens.push_back(std::move(v));
    }
    return span(gens, ambient_);
}

Subspace Subspace::apply(const QMat& m) const {
    std::vector<QVec> rows;
    for (const auto& v : basis_) rows.push_back(m.apply(v));
    return span(rows, m.rows());
}

QVec qvec_add(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("qvec_add: length mismatch");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec qvec_scale(const Rat& s, const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

bool qvec_is_zero(const QVec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace pms
