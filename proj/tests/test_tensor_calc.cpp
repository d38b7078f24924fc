#include "doctest.h"

#include "pms/rep_decomp.hpp"
#include "pms/schur.hpp"

#include <random>

using namespace pms;

namespace {

std::mt19937 rng(662607015);

Partition random_partition(int max_len, int max_part) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> part(1, max_part);
    int l = len(rng);
    Partition p;
    for (int i = 0; i < l; ++i) p.push_back(part(rng));
    std::sort(p.rbegin(), p.rend());
    return p;
}

Int binom_i(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("Weyl dimension formula agrees with the tableau count") {
    /* Two independent algorithms: schur_dim evaluates the hook-content
     * style product, eval_ones counts semistandard tableaux. */
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> rd(1, 3);
        std::size_t r = rd(rng);
        Partition p = random_partition(static_cast<int>(r), 4);
        CHECK(schur_dim(p, r) == schur_poly(p, r).eval_ones());
    }
}

TEST_CASE("frozen Schur dimensions in ranks 2 and 3") {
    CHECK(schur_dim({}, 2) == 1);
    CHECK(schur_dim({1}, 2) == 2);
    CHECK(schur_dim({2}, 2) == 3);
    CHECK(schur_dim({3}, 2) == 4);
    CHECK(schur_dim({2, 1}, 2) == 2);
    CHECK(schur_dim({1, 1}, 2) == 1);
    CHECK(schur_dim({1}, 3) == 3);
    CHECK(schur_dim({1, 1}, 3) == 3);
    CHECK(schur_dim({2}, 3) == 6);
    CHECK(schur_dim({2, 1}, 3) == 8);
    CHECK(schur_dim({1, 1, 1}, 3) == 1);
    CHECK(schur_dim({2, 1, 1}, 3) == 3);
    CHECK(schur_dim({2, 2}, 3) == 6);
    CHECK(schur_dim({2, 2, 1}, 3) == 3);
    CHECK(schur_dim({2, 2, 2}, 3) == 1);
}

TEST_CASE("partitions longer than the rank are rejected") {
    CHECK_THROWS_AS((void)schur_dim({1, 1, 1}, 2), LengthExceedsRank);
    CHECK_THROWS_AS((void)schur_poly({2, 1, 1}, 2), LengthExceedsRank);
}

TEST_CASE("Littlewood-Richardson: dimensions multiply") {
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> rd(2, 3);
        std::size_t r = rd(rng);
        Partition a = random_partition(static_cast<int>(r), 3);
        Partition b = random_partition(static_cast<int>(r), 3);
        auto prod = decompose_product(a, b, r);
        Int total = 0;
        for (const auto& [nu, c] : prod) {
            CHECK(c > 0);
            CHECK(is_partition(nu));
            total += c * schur_dim(nu, r);
        }
        CHECK(total == schur_dim(a, r) * schur_dim(b, r));
    }
}

TEST_CASE("rank-2 Pieri example: (2) x (1) = (3) + (2,1)") {
    auto prod = decompose_product({2}, {1}, 2);
    REQUIRE(prod.size() == 2);
    bool saw3 = false, saw21 = false;
    for (const auto& [nu, c] : prod) {
        if (nu == Partition{3}) {
            saw3 = true;
            CHECK(c == 1);
        }
        if (nu == Partition{2, 1}) {
            saw21 = true;
            CHECK(c == 1);
        }
    }
    CHECK(saw3);
    CHECK(saw21);
    CHECK(schur_dim({2}, 2) * schur_dim({1}, 2) == 6);
    CHECK(schur_dim({3}, 2) + schur_dim({2, 1}, 2) == 6);
}

TEST_CASE("rank-3 products used by the exterior-power decomposition") {
    auto v_v = decompose_product({1}, {1}, 3);
    REQUIRE(v_v.size() == 2);
    for (const auto& [nu, c] : v_v) {
        CHECK((nu == Partition{2} || nu == Partition{1, 1}));
        CHECK(c == 1);
    }
    auto l2_v = decompose_product({1, 1}, {1}, 3);
    REQUIRE(l2_v.size() == 2);
    for (const auto& [nu, c] : l2_v) {
        CHECK((nu == Partition{2, 1} || nu == Partition{1, 1, 1}));
        CHECK(c == 1);
    }
}

TEST_CASE("exterior powers of V1 + V2: frozen isotype strings") {
    CHECK(decompose_lambda_k(0).str() == "triv");
    CHECK(decompose_lambda_k(1).str() == "V1 + V2");
    CHECK(decompose_lambda_k(2).str() == "End0V1 + L2V1 + L2V2 + triv");
    CHECK(decompose_lambda_k(3).str() == "L2V1 + L2V2 + S2V1 + S2V2 + 2*triv");
    CHECK(decompose_lambda_k(4).str() == "End0V1 + V1 + V2 + triv");
    CHECK(decompose_lambda_k(5).str() == "L2V1 + L2V2");
    CHECK(decompose_lambda_k(6).str() == "triv");
}

TEST_CASE("exterior power dimensions are binomial, totalling 64") {
    Int total = 0;
    for (int k = 0; k <= 6; ++k) {
        Int d = decompose_lambda_k(k).dim();
        CHECK(d == binom_i(6, k));
        total += d;
    }
    CHECK(total == 64);
    CHECK_THROWS_AS((void)decompose_lambda_k(7), OutOfRange);
    CHECK_THROWS_AS((void)decompose_lambda_k(-1), OutOfRange);
}

TEST_CASE("trivial multiplicities across the exterior algebra") {
    const int expected[7] = {1, 0, 1, 2, 1, 0, 1};
    for (int k = 0; k <= 6; ++k) CHECK(trivial_summand_count(k) == expected[k]);
}

TEST_CASE("tag dimensions and the CM exponents") {
    CHECK(rep_tag_dim("triv") == 1);
    CHECK(rep_tag_dim("V1") == 3);
    CHECK(rep_tag_dim("V2") == 3);
    CHECK(rep_tag_dim("L2V1") == 3);
    CHECK(rep_tag_dim("L2V2") == 3);
    CHECK(rep_tag_dim("S2V1") == 6);
    CHECK(rep_tag_dim("S2V2") == 6);
    CHECK(rep_tag_dim("End0V1") == 8);
    CHECK(rep_tag_cm_exponent("triv") == 0);
    CHECK(rep_tag_cm_exponent("End0V1") == 0);
    CHECK(rep_tag_cm_exponent("V1") == 1);
    CHECK(rep_tag_cm_exponent("L2V2") == 1);
    CHECK(rep_tag_cm_exponent("S2V2") == 1);
    CHECK(rep_tag_cm_exponent("V2") == 2);
    CHECK(rep_tag_cm_exponent("L2V1") == 2);
    CHECK(rep_tag_cm_exponent("S2V1") == 2);
    CHECK_THROWS_AS((void)rep_tag_dim("bogus"), OutOfRange);
}

TEST_CASE("conjugation symmetry of the exterior-power decomposition") {
    /* Swapping V1 <-> V2 (hence L2V1 <-> L2V2, S2V1 <-> S2V2) must fix
     * every Lambda^k since conjugation permutes the two factors. */
    auto swap_tag = [](const std::string& t) -> std::string {
        if (t == "V1") return "V2";
        if (t == "V2") return "V1";
        if (t == "L2V1") return "L2V2";
        if (t == "L2V2") return "L2V1";
        if (t == "S2V1") return "S2V2";
        if (t == "S2V2") return "S2V1";
        return t;
    };
    for (int k = 0; k <= 6; ++k) {
        RepExpr e = decompose_lambda_k(k);
        RepExpr swapped;
        for (const auto& [tag, m] : e.mult) swapped.add(swap_tag(tag), m);
        CHECK(e == swapped);
    }
}

TEST_CASE("RepExpr arithmetic") {
    RepExpr e;
    e.add("V1");
    e.add("V1");
    e.add("triv", 3);
    CHECK(e.str() == "2*V1 + 3*triv");
    CHECK(e.dim() == 9);
}
