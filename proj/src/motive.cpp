#include "pms/motive.hpp"

#include <algorithm>
#include <stdexcept>

namespace pms {

std::array<int, 7> motive_block_dims() { return {1, 6, 15, 20, 15, 6, 1}; }

std::vector<std::vector<int>> motive_subsets(int k) {
    if (k < 0 || k > 6) throw OutOfRange("degree must lie in [0,6]");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < 6; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

GradedEndo GradedEndo::identity() {
    GradedEndo g;
    auto dims = motive_block_dims();
    for (int k = 0; k <= 6; ++k) g.block[k] = QMat::identity(static_cast<std::size_t>(dims[k]));
    return g;
}

GradedEndo operator*(const GradedEndo& a, const GradedEndo& b) {
    GradedEndo g;
    for (int k = 0; k <= 6; ++k) g.block[k] = a.block[k] * b.block[k];
    return g;
}

GradedEndo operator+(const GradedEndo& a, const GradedEndo& b) {
    GradedEndo g;
    for (int k = 0; k <= 6; ++k) g.block[k] = a.block[k] + b.block[k];
    return g;
}

GradedEndo operator-(const GradedEndo& a, const GradedEndo& b) {
    GradedEndo g;
    for (int k = 0; k <= 6; ++k) g.block[k] = a.block[k] - b.block[k];
    return g;
}

GradedEndo GradedEndo::scale(const Rat& s) const {
    GradedEndo g;
    for (int k = 0; k <= 6; ++k) g.block[k] = block[k] * s;
    return g;
}

bool operator==(const GradedEndo& a, const GradedEndo& b) {
    for (int k = 0; k <= 6; ++k)
        if (a.block[k] != b.block[k]) return false;
    return true;
}

static Rat det_small(const QMat& m) {
    std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    if (n == 1) return m.at(0, 0);
    Rat det(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (m.at(i, 0).is_zero()) continue;
        QMat mm(n - 1, n - 1);
        std::size_t r = 0;
        for (std::size_t ii = 0; ii < n; ++ii) {
            if (ii == i) continue;
            for (std::size_t jj = 1; jj < n; ++jj) mm.at(r, jj - 1) = m.at(ii, jj);
            ++r;
        }
        Rat cof = det_small(mm);
        det += (i % 2 == 0 ? cof : -cof) * m.at(i, 0);
    }
    return det;
}

static Rat minor_det(const QMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::size_t n = rows.size();
    QMat sub(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sub.at(i, j) = m.at(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
    return det_small(sub);
}

GradedEndo from_degree1(const QMat& m6) {
    if (m6.rows() != 6 || m6.cols() != 6)
        throw std::invalid_argument("from_degree1 expects a 6x6 matrix");
    GradedEndo g;
    for (int k = 0; k <= 6; ++k) {
        auto subs = motive_subsets(k);
        QMat blk(subs.size(), subs.size());
        for (std::size_t s = 0; s < subs.size(); ++s)
            for (std::size_t t = 0; t < subs.size(); ++t)
                blk.at(t, s) = minor_det(m6, subs[t], subs[s]);
        g.block[k] = std::move(blk);
    }
    return g;
}

GradedEndo mult_endo(const Int& n) {
    return from_degree1(QMat::identity(6) * Rat(n));
}

std::vector<GradedEndo> kunneth_projectors(const Int& n) {
    if (n < 2) throw std::domain_error("kunneth_projectors requires n >= 2");
    GradedEndo mult = mult_endo(n);
    std::vector<Int> npow(7);
    npow[0] = 1;
    for (int j = 1; j <= 6; ++j) npow[j] = npow[j - 1] * n;
    std::vector<GradedEndo> pi;
    for (int i = 0; i <= 6; ++i) {
        GradedEndo p = GradedEndo::identity();
        for (int j = 0; j <= 6; ++j) {
            if (j == i) continue;
            GradedEndo factor = mult - GradedEndo::identity().scale(Rat(npow[j]));
            p = (p * factor).scale(Rat(Int(1), npow[i] - npow[j]));
        }
        pi.push_back(std::move(p));
    }
    return pi;
}

bool verify_projector_axioms(const std::vector<GradedEndo>& pi, const Int& n, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (pi.size() != 7) return fail("expected seven projectors");
    for (int i = 0; i <= 6; ++i)
        if (!(pi[i] * pi[i] == pi[i])) return fail("projector " + std::to_string(i) + " is not idempotent");
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) {
            if (i == j) continue;
            GradedEndo prod = pi[i] * pi[j];
            bool zero = true;
            for (int k = 0; k <= 6; ++k)
                if (!prod.block[k].is_zero()) zero = false;
            if (!zero)
                return fail("projectors " + std::to_string(i) + ", " + std::to_string(j) +
                            " are not orthogonal");
        }
    GradedEndo sum = pi[0];
    for (int i = 1; i <= 6; ++i) sum = sum + pi[i];
    if (!(sum == GradedEndo::identity())) return fail("projectors do not sum to the identity");
    GradedEndo mult = mult_endo(n);
    Int npow = 1;
    for (int i = 0; i <= 6; ++i) {
        if (!(mult * pi[i] == pi[i].scale(Rat(npow))))
            return fail("multiplication by n does not act as n^" + std::to_string(i) +
                        " on the image of projector " + std::to_string(i));
        npow *= n;
    }
    return true;
}

static int permutation_sign(std::vector<int> v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) sign = -sign;
    return sign;
}

Int poincare_pairing_rank(int i) {
    if (i < 0 || i > 6) throw OutOfRange("pairing degree must lie in [0,6]");
    auto rows = motive_subsets(6 - i);
    auto cols = motive_subsets(i);
    QMat pairing(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::vector<int> merged = cols[c];
            merged.insert(merged.end(), rows[r].begin(), rows[r].end());
            std::vector<int> sorted = merged;
            std::sort(sorted.begin(), sorted.end());
            bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
            if (!distinct || sorted.size() != 6) continue;
            pairing.at(r, c) = Rat(permutation_sign(merged));
        }
    return Int(pairing.rank());
}

CMSplit cm_splitting() {
    QMat b{{Rat(0), Rat(-1)}, {Rat(1), Rat(-1)}};
    QMat omega1(6, 6);
    for (int blk = 0; blk < 3; ++blk)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                omega1.at(static_cast<std::size_t>(2 * blk + i), static_cast<std::size_t>(2 * blk + j)) =
                    b.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    GradedEndo om = from_degree1(omega1);
    CMSplit split;
    auto dims = motive_block_dims();
    for (int k = 0; k <= 6; ++k) {
        const QMat& o = om.block[k];
        QMat id = QMat::identity(o.rows());
        std::size_t fixed = o.rows() - (o - id).rank();
        std::size_t conj_pair = o.rows() - (o * o + o + id).rank();
        if (fixed + conj_pair != static_cast<std::size_t>(dims[k]))
            throw std::logic_error("CM eigenspaces do not fill degree " + std::to_string(k));
        if (conj_pair % 2 != 0)
            throw std::logic_error("conjugate eigenspace pair has odd dimension");
        split.fixed[k] = static_cast<int>(fixed);
        split.omega[k] = static_cast<int>(conj_pair / 2);
        split.omega_bar[k] = static_cast<int>(conj_pair / 2);
    }
    return split;
}

int invariant_dims(int k) { return trivial_summand_count(k); }

}  // namespace pms
