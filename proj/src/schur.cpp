#include "pms/schur.hpp"

#include <algorithm>

namespace pms {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

std::string partition_str(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

void SymPoly::add_term(const std::vector<int>& expo, const Int& coeff) {
    if (expo.size() != vars_) throw std::invalid_argument("SymPoly: exponent length mismatch");
    Int& c = terms_[expo];
    c += coeff;
    if (c == 0) terms_.erase(expo);
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("SymPoly: variable count mismatch");
    SymPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(a.vars_);
            for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("SymPoly: variable count mismatch");
    SymPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

std::pair<std::vector<int>, Int> SymPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("SymPoly: leading term of zero polynomial");
    /* std::map orders keys lexicographically, so the last key is leading. */
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

Int SymPoly::eval_ones() const {
    Int total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

/* Enumerate semistandard tableaux of the given shape with entries 1..r:
 * rows weakly increase left to right, columns strictly increase downward. */
static void fill_tableau(const Partition& shape, std::size_t r,
                         std::vector<std::vector<int>>& t, std::size_t row, std::size_t col,
                         SymPoly& out) {
    if (row == shape.size()) {
        std::vector<int> expo(r, 0);
        for (const auto& tr : t)
            for (int v : tr) expo[static_cast<std::size_t>(v) - 1]++;
        out.add_term(expo, 1);
        return;
    }
    std::size_t next_row = row, next_col = col + 1;
    if (next_col >= static_cast<std::size_t>(shape[row])) {
        next_row = row + 1;
        next_col = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t[row][col - 1]);
    if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
    for (int v = lo; v <= static_cast<int>(r); ++v) {
        t[row][col] = v;
        fill_tableau(shape, r, t, next_row, next_col, out);
    }
}

SymPoly schur_poly(const Partition& lambda, std::size_t r) {
    if (!is_partition(lambda)) throw std::invalid_argument("schur_poly: not a partition");
    Partition shape;
    for (int part : lambda)
        if (part > 0) shape.push_back(part);
    if (shape.size() > r)
        throw LengthExceedsRank("partition " + partition_str(lambda) + " has more than " +
                                std::to_string(r) + " rows");
    SymPoly out(r);
    if (shape.empty()) {
        out.add_term(std::vector<int>(r, 0), 1);
        return out;
    }
    std::vector<std::vector<int>> t;
    for (int part : shape) t.emplace_back(part, 0);
    fill_tableau(shape, r, t, 0, 0, out);
    return out;
}

Int schur_dim(const Partition& lambda, std::size_t r) {
    if (!is_partition(lambda)) throw std::invalid_argument("schur_dim: not a partition");
    std::size_t nonzero = 0;
    for (int part : lambda)
        if (part > 0) ++nonzero;
    if (nonzero > r)
        throw LengthExceedsRank("partition " + partition_str(lambda) + " has more than " +
                                std::to_string(r) + " rows");
    std::vector<Int> l(r, 0);
    for (std::size_t i = 0; i < lambda.size() && i < r; ++i) l[i] = lambda[i];
    Rat dim(1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            Int ji = Int(j) - Int(i);
            dim *= Rat(l[i] - l[j] + ji, ji);
        }
    return rat_to_int(dim);
}

std::vector<std::pair<Partition, Int>> decompose_product(const Partition& lambda,
                                                         const Partition& mu,
                                                         std::size_t r) {
    SymPoly p = schur_poly(lambda, r) * schur_poly(mu, r);
    std::vector<std::pair<Partition, Int>> result;
    while (!p.empty()) {
        auto [expo, coeff] = p.leading();
        Partition nu(expo.begin(), expo.end());
        while (!nu.empty() && nu.back() == 0) nu.pop_back();
        if (!is_partition(nu))
            throw std::logic_error("decompose_product: leading exponent " + partition_str(nu) +
                                   " is not a partition");
        if (coeff < 0)
            throw std::logic_error("decompose_product: negative coefficient at " +
                                   partition_str(nu));
        p = p - [&] {
            SymPoly s = schur_poly(nu, r);
            SymPoly scaled(r);
            for (const auto& [e, c] : s.terms()) scaled.add_term(e, c * coeff);
            return scaled;
        }();
        result.emplace_back(std::move(nu), coeff);
    }
    return result;
}

}  // namespace pms
