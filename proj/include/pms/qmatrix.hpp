#pragma once

/* Dense matrices over the rationals with exact Gaussian elimination.
 * Provides rank, reduced row echelon form, kernel and image bases,
 * linear solves, inverses, and subspace arithmetic (sum, intersection,
 * membership, equality).  Subspaces are stored as canonical RREF row
 * bases, so two subspaces are equal iff their representations are.
 */

#include "pms/rational.hpp"

#include <initializer_list>
#include <vector>

namespace pms {

using QVec = std::vector<Rat>;

class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
    QMat(std::initializer_list<std::initializer_list<Rat>> init);

    static QMat identity(std::size_t n);
    static QMat zero(std::size_t r, std::size_t c) { return QMat(r, c); }
    static QMat from_rows(const std::vector<QVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QVec row(std::size_t i) const;
    void set_row(std::size_t i, const QVec& v);

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    friend QMat operator+(const QMat& x, const QMat& y);
    friend QMat operator-(const QMat& x, const QMat& y);
    friend QMat operator*(const QMat& x, const QMat& y);
    QMat operator*(const Rat& s) const;
    friend bool operator==(const QMat& x, const QMat& y);
    friend bool operator!=(const QMat& x, const QMat& y) { return !(x == y); }

    QMat transpose() const;
    QVec apply(const QVec& v) const;

    /* In-place reduction to RREF; returns the pivot columns. */
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    QMat pow(unsigned k) const;

    /* Basis of { v : M v = 0 }, one kernel vector per non-pivot column. */
    std::vector<QVec> kernel_basis() const;

    /* Unique solution of M x = b for invertible square M. */
    QVec solve(const QVec& b) const;
    QMat inverse() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/* A linear subspace of Q^n given by a canonical RREF basis. */
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    static Subspace span(const std::vector<QVec>& vectors, std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<QVec>& basis() const { return basis_; }

    bool contains(const QVec& v) const;
    bool contains(const Subspace& other) const;

    friend Subspace operator+(const Subspace& u, const Subspace& v);
    friend bool operator==(const Subspace& u, const Subspace& v);
    friend bool operator!=(const Subspace& u, const Subspace& v) { return !(u == v); }

    Subspace intersect(const Subspace& other) const;
    Subspace apply(const QMat& m) const;

private:
    std::size_t ambient_;
    std::vector<QVec> basis_;
};

QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_scale(const Rat& s, const QVec& a);
bool qvec_is_zero(const QVec& a);

}  // namespace pms
