/* Acceptance battery: one criterion per line, PASS or FAIL, exit nonzero
 * when any line fails.  Each criterion re-derives its expected values
 * independently where the design calls for an oracle, so a regression in
 * the library cannot silently satisfy its own test. */

#include "pms/curve_coh.hpp"
#include "pms/elliptic.hpp"
#include "pms/higgs.hpp"
#include "pms/l2_local.hpp"
#include "pms/motive.hpp"
#include "pms/ns_lattice.hpp"
#include "pms/rep_decomp.hpp"
#include "pms/schur.hpp"

#include <array>
#include <cstdint>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace pms;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what
              << "\n";
    if (!ok) ++failures;
}

/* Exact fractions over long long, reduced on construction; the oracle
 * solver below must not share code with pms::Rat or pms::QMat. */
struct Fr {
    long long n = 0;
    long long d = 1;
};

Fr fr_make(long long n, long long d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
}
Fr fr_sub(Fr a, Fr b) { return fr_make(a.n * b.d - b.n * a.d, a.d * b.d); }
Fr fr_mul(Fr a, Fr b) { return fr_make(a.n * b.n, a.d * b.d); }
Fr fr_div(Fr a, Fr b) { return fr_make(a.n * b.d, a.d * b.n); }

/* Gaussian elimination with partial pivoting over exact fractions.
 * Returns false when the system is singular. */
bool gauss_solve4(long long m[4][4], long long rhs[4], Fr out[4]) {
    Fr a[4][5];
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a[i][j] = fr_make(m[i][j], 1);
        a[i][4] = fr_make(rhs[i], 1);
    }
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (a[r][col].n != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        for (int j = 0; j <= 4; ++j) std::swap(a[col][j], a[piv][j]);
        for (int r = 0; r < 4; ++r) {
            if (r == col || a[r][col].n == 0) continue;
            Fr f = fr_div(a[r][col], a[col][col]);
            for (int j = col; j <= 4; ++j) a[r][j] = fr_sub(a[r][j], fr_mul(f, a[col][j]));
        }
    }
    for (int i = 0; i < 4; ++i) out[i] = fr_div(a[i][4], a[i][i]);
    return true;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i];
    }
    return s;
}

Int binom_i(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

AxiomRegistry registry_with(const std::vector<std::string>& ids) {
    AxiomRegistry out;
    AxiomRegistry defaults = default_axioms();
    for (const auto& row : defaults.rows())
        for (const auto& id : ids)
            if (row.id == id) out.add(row);
    return out;
}

bool criterion1() {
    /* The graph of omega^2 via the library. */
    Eisenstein w2 = Eisenstein::omega_sq();
    DivisorClass g = graph_class(w2);
    bool ok = g == product_class(-1, -1, 3, 3);

    /* Independent oracle: solve the defining intersection system by
     * Gaussian elimination over long long fractions, with the Gram matrix
     * and right-hand side written out from first principles. */
    long long gram[4][4] = {{0, 3, 1, 1}, {3, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}};
    Eisenstein one = Eisenstein::one();
    Eisenstein w = Eisenstein::omega();
    long long rhs[4] = {
        static_cast<long long>((w2 - one).norm()),
        static_cast<long long>((w2 - w).norm()),
        1,
        static_cast<long long>(w2.norm()),
    };
    Fr sol[4];
    ok = ok && gauss_solve4(gram, rhs, sol);
    const long long expected[4] = {-1, -1, 3, 3};
    for (int i = 0; i < 4; ++i)
        ok = ok && sol[i].d == 1 && sol[i].n == expected[i] && g.c[static_cast<std::size_t>(i)] == Int(expected[i]);

    /* Sum of the three graph classes. */
    DivisorClass lhs = graph_class(one) + graph_class(w) + g;
    DivisorClass rhs_cls = product_class(0, 0, 3, 3);
    ok = ok && verify_relation(lhs, rhs_cls);
    return ok;
}

bool criterion2() {
    auto cat = strict_transform_catalog();
    auto third = divide(canonical_plus_boundary(), 3);
    bool ok = third.has_value() && *third == cat.at("L");
    DivisorClass diff = cat.at("L") - (cat.at("D0") + cat.at("D5") + cat.at("D6"));
    for (const Int& c : diff.c) ok = ok && c == 0;
    return ok;
}

bool criterion3() {
    auto cat = strict_transform_catalog();
    const DivisorClass& L = cat.at("L");
    bool ok = intersect(L, L) == 1;
    for (int i = 1; i <= 3; ++i) ok = ok && intersect(L, cat.at("Z" + std::to_string(i))) == 1;
    for (int i = 1; i <= 6; ++i) ok = ok && intersect(L, cat.at("D" + std::to_string(i))) == 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            ok = ok && intersect(cat.at("D" + std::to_string(i)), cat.at("D" + std::to_string(j))) == 0;
    return ok;
}

bool criterion4() {
    return ec_mul(3, point_q1()).is_infinity() && ec_mul(3, point_q2()).is_infinity() &&
           on_curve(point_q1()) && on_curve(point_q2());
}

bool criterion5() {
    HComplex e = reduce(build_complex(uniformizing()));
    HComplex s2 = reduce(build_complex(sym_power(uniformizing(), 2)));
    auto se = e.serialize();
    auto ss2 = s2.serialize();
    bool ok = join(se[0]) == "L^-1" && join(se[1]) == "S2W*L^-1" && join(se[2]) == "W*L^2";
    ok = ok && join(ss2[0]) == "L^-2" && join(ss2[1]) == "S3W*L^-2" &&
         join(ss2[2]) == "S2W*L^1";
    for (const auto& dk : e.d)
        for (const auto& row : dk)
            for (Label l : row) ok = ok && l == Label::Zero;
    for (const auto& dk : s2.d)
        for (const auto& row : dk)
            for (Label l : row) ok = ok && l == Label::Zero;
    return ok;
}

bool criterion6() {
    AxiomRegistry reg = registry_with({"nef_big_dual", "bogomolov_sommese"});
    VanishingCertificate cert = chase_certificate_s2w(reg);
    bool ok = cert.valid && cert.z_split == psplit_make({-2, -1}) && cert.h0_bound == 0;
    /* Per-component sections on the exceptional line vanish degree by
     * degree, not only in aggregate. */
    for (long deg : cert.z_split) ok = ok && h_p1(deg).h0 == 0;
    HComplex e = reduce(build_complex(uniformizing()));
    L2Outcome out = l2_refine(e, cert, reg);
    ok = ok && out.verdict == L2Verdict::Vanishes;
    return ok;
}

bool criterion7() {
    AxiomRegistry reg = default_axioms();
    VanishingCertificate cert = chase_certificate_s3w(reg);
    bool ok = cert.valid && cert.z_split == psplit_make({-2, -1, 0}) &&
              cert.per_curve_h0 == 1 && cert.h0_bound == 3;
    HComplex s2 = reduce(build_complex(sym_power(uniformizing(), 2)));
    L2Outcome out = l2_refine(s2, cert, reg);
    ok = ok && out.verdict == L2Verdict::BoundedBy && out.bound == 3;
    ok = ok && out.verdict != L2Verdict::Vanishes;
    /* The located conclusion must stay an inequality. */
    bool saw_bound = false;
    for (const auto& t : out.located) {
        if (t.group == "S3W*L^-2") {
            saw_bound = t.conclusion.find("<= 3") != std::string::npos &&
                        t.conclusion.find("= 3") == t.conclusion.find("<= 3") + 1;
        }
    }
    return ok && saw_bound;
}

bool criterion8() {
    AxiomRegistry reg = registry_with({"li_schwermer"});
    VanishingCertificate cert = global_h1_certificate(reg, "End0V1");
    bool ok = cert.valid;
    HComplex c = reduce(build_complex(end0(uniformizing())));
    L2Outcome out = l2_refine(c, cert, reg);
    ok = ok && out.verdict == L2Verdict::Vanishes;
    bool located = false;
    for (const auto& t : out.located)
        if (t.complex_degree == 1 && t.group.rfind("S3W", 0) == 0 &&
            t.conclusion.find("= 0") != std::string::npos)
            located = true;
    bool cites = false;
    for (const auto& id : out.axioms_used) cites = cites || id == "li_schwermer";
    return ok && located && cites;
}

bool criterion9() {
    LocalModel e = sym_local(1);
    WeightFiltration wf = weight_filtration({e.n1, e.names});
    std::map<int, std::vector<std::string>> expected_e = {
        {1, {"v1"}}, {0, {"v2"}}, {-1, {"v"}}};
    bool ok = wf.coordinate && wf.gr_names == expected_e;

    LocalModel s2 = sym_local(2);
    WeightFiltration wf2 = weight_filtration({s2.n1, s2.names});
    std::map<int, std::vector<std::string>> expected_s2 = {
        {2, {"v1*v1"}},
        {1, {"v1*v2"}},
        {0, {"v1*v", "v2*v2"}},
        {-1, {"v2*v"}},
        {-2, {"v*v"}}};
    ok = ok && wf2.coordinate && wf2.gr_names == expected_s2;
    return ok;
}

bool criterion10() {
    const int bound = 3;
    bool ok = true;

    LocalModel e1 = sym_local(1);
    Subspace ker1 = Subspace::span({QVec{Rat(0), Rat(1), Rat(0)}, QVec{Rat(0), Rat(0), Rat(1)}}, 3);
    Subspace ker2 = Subspace::span({QVec{Rat(1), Rat(0), Rat(0)}, QVec{Rat(0), Rat(0), Rat(1)}}, 3);
    Subspace kk = Subspace::span({QVec{Rat(0), Rat(0), Rat(1)}}, 3);
    Subspace full3 = Subspace::full(3);

    auto e_smooth = l2_subcomplex(e1, DivisorType::Smooth, bound);
    std::array<LocalL2Module, 3> e_smooth_closed = {
        module_from_generators(bound, 3, {{{0, 0}, {{0, 0, ker1}, {1, 0, full3}}}}),
        module_from_generators(bound, 3,
                               {{{1, 0}, {{1, 0, full3}}},
                                {{0, 1}, {{0, 0, ker1}, {1, 0, full3}}}}),
        module_from_generators(bound, 3, {{{1, 1}, {{1, 0, full3}}}})};
    for (int i = 0; i < 3; ++i) ok = ok && module_equal(e_smooth[i], e_smooth_closed[i], bound);

    auto e_nc = l2_subcomplex(e1, DivisorType::NormalCrossing, bound);
    std::array<LocalL2Module, 3> e_nc_closed = {
        module_from_generators(bound, 3,
                               {{{0, 0}, {{0, 0, kk}, {0, 1, ker1}, {1, 0, ker2}}}}),
        module_from_generators(bound, 3,
                               {{{1, 0}, {{1, 0, ker2}, {1, 1, ker1}}},
                                {{0, 1}, {{0, 1, ker1}, {1, 1, ker2}}}}),
        module_from_generators(bound, 3, {{{1, 1}, {{1, 1, full3}}}})};
    for (int i = 0; i < 3; ++i) ok = ok && module_equal(e_nc[i], e_nc_closed[i], bound);

    LocalModel s2m = sym_local(2);
    Subspace omega0 = Subspace::span({QVec{Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)},
                                      QVec{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)},
                                      QVec{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)},
                                      QVec{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}},
                                     6);
    Subspace s2im = Subspace::span({QVec{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}}, 6);
    Subspace full6 = Subspace::full(6);
    auto s2_smooth = l2_subcomplex(s2m, DivisorType::Smooth, bound);
    std::array<LocalL2Module, 3> s2_closed = {
        module_from_generators(bound, 6, {{{0, 0}, {{0, 0, omega0}, {1, 0, full6}}}}),
        module_from_generators(bound, 6,
                               {{{1, 0}, {{0, 0, s2im}, {1, 0, full6}}},
                                {{0, 1}, {{0, 0, omega0}, {1, 0, full6}}}}),
        module_from_generators(bound, 6, {{{1, 1}, {{0, 0, s2im}, {1, 0, full6}}}})};
    for (int i = 0; i < 3; ++i) ok = ok && module_equal(s2_smooth[i], s2_closed[i], bound);

    for (int n = 1; n <= 3; ++n) {
        LocalModel m = sym_local(n);
        for (DivisorType t : {DivisorType::Smooth, DivisorType::NormalCrossing})
            ok = ok && theta_stable(l2_subcomplex(m, t, bound), m, bound);
    }
    return ok;
}

bool criterion11() {
    auto prod = decompose_product({2}, {1}, 2);
    bool saw3 = false, saw21 = false;
    bool ok = prod.size() == 2;
    for (const auto& [lam, mult] : prod) {
        if (lam == Partition{3}) saw3 = mult == 1;
        if (lam == Partition{2, 1}) saw21 = mult == 1;
    }
    ok = ok && saw3 && saw21;
    ok = ok && schur_dim({2}, 2) == 3 && schur_dim({3}, 2) == 4 && schur_dim({2, 1}, 2) == 2;
    ok = ok && schur_dim({2}, 2) * schur_dim({1}, 2) == 6;

    Int total = 0;
    const int expected_dims[7] = {1, 6, 15, 20, 15, 6, 1};
    const int expected_triv[7] = {1, 0, 1, 2, 1, 0, 1};
    for (int k = 0; k <= 6; ++k) {
        RepExpr lam = decompose_lambda_k(k);
        ok = ok && lam.dim() == expected_dims[k];
        ok = ok && trivial_summand_count(k) == expected_triv[k];
        total += lam.dim();
    }
    ok = ok && total == 64;
    return ok;
}

bool criterion12() {
    auto p2 = kunneth_projectors(2);
    auto p3 = kunneth_projectors(3);
    std::string why;
    bool ok = verify_projector_axioms(p2, 2, &why) && why.empty();
    ok = ok && p2.size() == 7 && p3.size() == 7;
    for (std::size_t i = 0; i < 7; ++i) ok = ok && p2[i] == p3[i];
    const int expected_rank[7] = {1, 6, 15, 20, 15, 6, 1};
    for (int i = 0; i <= 6; ++i) {
        std::size_t r = 0;
        for (int k = 0; k <= 6; ++k) r += p2[static_cast<std::size_t>(i)].block[k].rank();
        ok = ok && r == static_cast<std::size_t>(expected_rank[i]);
        ok = ok && poincare_pairing_rank(i) == binom_i(6, i);
    }
    return ok;
}

bool criterion13(std::string& detail) {
    std::mt19937 rng(832040);
    int cases = 0;
    int bad = 0;

    /* Lattice: intersection identities of graph classes for random CM
     * endomorphisms. */
    {
        std::uniform_int_distribution<int> d(-6, 6);
        for (int t = 0; t < 120; ++t) {
            Eisenstein phi{d(rng), d(rng)};
            Eisenstein psi{d(rng), d(rng)};
            DivisorClass gp = graph_class(phi);
            DivisorClass gq = graph_class(psi);
            bool good = intersect(gp, gq) == (phi - psi).norm() &&
                        intersect(gp, gp) == 0 &&
                        intersect(gp, product_class(0, 0, 1, 0)) == 1 &&
                        intersect(gp, product_class(0, 0, 0, 1)) == phi.norm();
            ++cases;
            if (!good) ++bad;
        }
    }

    /* Curve: the group law against scalar recombination on random
     * multiples of the marked points. */
    {
        std::uniform_int_distribution<int> d(-9, 9);
        auto pts = marked_points();
        std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
        for (int t = 0; t < 120; ++t) {
            ECPoint p = pts[pick(rng)];
            int m = d(rng), n = d(rng);
            ECPoint lhs = ec_mul(m + n, p);
            ECPoint rhs = ec_add(ec_mul(m, p), ec_mul(n, p));
            bool good = lhs == rhs && on_curve(lhs);
            ++cases;
            if (!good) ++bad;
        }
    }

    /* Weight filtrations: random strictly lower-triangular nilpotents
     * against the Jordan-string oracle computed from ranks of powers. */
    {
        std::uniform_int_distribution<int> entry(-2, 2);
        std::uniform_int_distribution<std::size_t> dims(2, 5);
        for (int t = 0; t < 120; ++t) {
            std::size_t n = dims(rng);
            QMat m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < i; ++j) m.at(i, j) = Rat(entry(rng));
            std::vector<std::string> names(n, "x");
            WeightFiltration wf = weight_filtration({m, names});

            std::vector<std::size_t> r{n};
            QMat p = QMat::identity(n);
            for (std::size_t k = 1; k <= n + 1; ++k) {
                p = p * m;
                r.push_back(p.rank());
            }
            std::map<int, int> oracle;
            for (std::size_t l = 1; l <= n; ++l) {
                long strings = static_cast<long>(r[l - 1]) + static_cast<long>(r[l + 1]) -
                               2 * static_cast<long>(r[l]);
                for (long s = 0; s < strings; ++s)
                    for (int wgt = static_cast<int>(l) - 1; wgt >= 1 - static_cast<int>(l);
                         wgt -= 2)
                        oracle[wgt] += 1;
            }
            bool good = wf.gr_dim == oracle;
            ++cases;
            if (!good) ++bad;
        }
    }

    /* Tensor: Littlewood-Richardson decompositions preserve dimension for
     * random small partitions. */
    {
        std::uniform_int_distribution<int> part(0, 3);
        for (int t = 0; t < 120; ++t) {
            Partition a{part(rng) + 1};
            if (int second = part(rng); second > 0 && second <= a[0]) a.push_back(second);
            Partition b{part(rng) + 1};
            Int lhs = schur_dim(a, 3) * schur_dim(b, 3);
            Int rhs = 0;
            for (const auto& [lam, mult] : decompose_product(a, b, 3))
                rhs += mult * schur_dim(lam, 3);
            bool good = lhs == rhs;
            ++cases;
            if (!good) ++bad;
        }
    }

    std::ostringstream os;
    os << cases << " randomized property cases across four modules, " << bad << " failures";
    detail = os.str();
    return cases >= 400 && bad == 0;
}

}  // namespace

int main() {
    report(1, criterion1(),
           "graph classes match the Gaussian-elimination oracle and sum to 3A + 3B");
    report(2, criterion2(),
           "the canonical-plus-boundary class divides exactly by three, onto L = D0 + D5 + D6");
    report(3, criterion3(),
           "L^2 = 1, L.Z_i = 1, L.D_i = 0, and the six boundary curves are pairwise disjoint");
    report(4, criterion4(), "the marked points (0, i) and (0, -i) are 3-torsion");
    report(5, criterion5(),
           "reduced complexes for E and Sym^2 E serialize to the expected monomials with zero "
           "differentials");
    report(6, criterion6(),
           "with the Kodaira-type and Bogomolov-Sommese axioms the weight-two refinement "
           "vanishes and each restriction degree has no sections");
    report(7, criterion7(),
           "the symmetric-square pipeline reports an upper bound of three and never an exact "
           "dimension or a vanishing");
    report(8, criterion8(),
           "with the Li-Schwermer axiom the endomorphism refinement vanishes, locating the "
           "S3W-type term in degree one");
    report(9, criterion9(),
           "weight filtrations of the first residue reproduce the graded basis lists verbatim");
    report(10, criterion10(),
           "the local rule reproduces all closed-form subcomplexes and every rule-generated "
           "complex is theta-stable");
    report(11, criterion11(),
           "(2) x (1) = (3) + (2,1) with dimensions 6 = 4 + 2; exterior powers have dimensions "
           "(1,6,15,20,15,6,1) and trivial multiplicities (1,0,1,2,1,0,1)");
    report(12, criterion12(),
           "projectors satisfy the axioms, are independent of n, and have ranks matching the "
           "binomial dimensions and pairing ranks");
    std::string detail;
    bool ok13 = criterion13(detail);
    report(13, ok13, detail);

    if (failures > 0) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all 13 criteria passed\n";
    return 0;
}
