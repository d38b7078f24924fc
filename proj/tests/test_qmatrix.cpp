#include "doctest.h"

#include "pms/qmatrix.hpp"

#include <random>

using namespace pms;

namespace {

std::mt19937 rng(20260816);

QMat random_matrix(std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(d(rng));
    return m;
}

/* Product of a random lower and upper unitriangular matrix: always invertible. */
QMat random_invertible(std::size_t n) {
    std::uniform_int_distribution<int> d(-4, 4);
    QMat lo = QMat::identity(n), up = QMat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j) lo.at(i, j) = Rat(d(rng));
            if (i < j) up.at(i, j) = Rat(d(rng));
        }
    return lo * up;
}

}  // namespace

TEST_CASE("identity, addition, multiplication basics") {
    QMat a{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    QMat i = QMat::identity(2);
    CHECK(a * i == a);
    CHECK(i * a == a);
    CHECK(a + QMat::zero(2, 2) == a);
    CHECK((a - a).is_zero());
    QMat b{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    QMat ab = a * b;
    CHECK(ab.at(0, 0) == Rat(2));
    CHECK(ab.at(0, 1) == Rat(1));
    CHECK(ab.at(1, 0) == Rat(4));
    CHECK(ab.at(1, 1) == Rat(3));
}

TEST_CASE("rank and kernel of a frozen singular matrix") {
    QMat m{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(1), Rat(1), Rat(1)}};
    CHECK(m.rank() == 2);
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 1);
    for (const auto& v : ker) CHECK(qvec_is_zero(m.apply(v)));
}

TEST_CASE("solve and inverse round-trip on random invertible matrices") {
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        QMat m = random_invertible(n);
        QVec b(n);
        for (auto& x : b) x = Rat(d(rng));
        QVec x = m.solve(b);
        QVec back = m.apply(x);
        CHECK(back == b);
        CHECK(m * m.inverse() == QMat::identity(n));
    }
}

TEST_CASE("rank-nullity on random matrices") {
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t r = 1 + static_cast<std::size_t>(trial % 5);
        std::size_t c = 1 + static_cast<std::size_t>((trial / 5) % 5);
        QMat m = random_matrix(r, c, -3, 3);
        auto ker = m.kernel_basis();
        CHECK(m.rank() + ker.size() == c);
        for (const auto& v : ker) CHECK(qvec_is_zero(m.apply(v)));
    }
}

TEST_CASE("transpose preserves rank") {
    for (int trial = 0; trial < 100; ++trial) {
        QMat m = random_matrix(3, 4, -3, 3);
        CHECK(m.rank() == m.transpose().rank());
    }
}

TEST_CASE("subspace dimension formula dim(U+V) + dim(U meet V) = dim U + dim V") {
    std::uniform_int_distribution<int> cnt(0, 3);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 4;
        std::vector<QVec> us, vs;
        int cu = cnt(rng), cv = cnt(rng);
        for (int i = 0; i < cu; ++i) us.push_back(random_matrix(1, n, -3, 3).row(0));
        for (int i = 0; i < cv; ++i) vs.push_back(random_matrix(1, n, -3, 3).row(0));
        Subspace u = Subspace::span(us, n);
        Subspace v = Subspace::span(vs, n);
        Subspace sum = u + v;
        Subspace meet = u.intersect(v);
        CHECK(sum.dim() + meet.dim() == u.dim() + v.dim());
        CHECK(sum.contains(u));
        CHECK(sum.contains(v));
        CHECK(u.contains(meet));
        CHECK(v.contains(meet));
    }
}

TEST_CASE("subspace canonical form: same span, same object") {
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 4;
        QVec a = random_matrix(1, n, -3, 3).row(0);
        QVec b = random_matrix(1, n, -3, 3).row(0);
        Subspace s1 = Subspace::span({a, b}, n);
        Subspace s2 = Subspace::span({qvec_add(a, b), b, a}, n);
        CHECK(s1 == s2);
    }
}

TEST_CASE("subspace apply is the image under the matrix") {
    QMat m{{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(0)}};
    Subspace full = Subspace::full(3);
    Subspace img = full.apply(m);
    CHECK(img.dim() == 2);
    QVec e0(3);
    e0[0] = Rat(1);
    CHECK(img.contains(e0));
}

TEST_CASE("pow matches repeated multiplication") {
    QMat m = random_matrix(3, 3, -2, 2);
    QMat p = QMat::identity(3);
    for (unsigned k = 0; k <= 4; ++k) {
        CHECK(m.pow(k) == p);
        p = p * m;
    }
}

TEST_CASE("full and zero subspaces") {
    Subspace z(5);
    CHECK(z.dim() == 0);
    Subspace f = Subspace::full(5);
    CHECK(f.dim() == 5);
    CHECK(f.contains(z));
    CHECK(f.intersect(z) == z);
    CHECK(f + z == f);
}
