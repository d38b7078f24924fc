#include "pms/curve_coh.hpp"

#include <algorithm>
#include <stdexcept>

namespace pms {

CohDims h_p1(long n) {
    CohDims d;
    d.h0 = static_cast<int>(std::max(n + 1, 0L));
    d.h1 = static_cast<int>(std::max(-n - 1, 0L));
    return d;
}

CohDims h_elliptic(long deg, bool trivial_when_degree_zero) {
    CohDims d;
    if (deg > 0) d.h0 = static_cast<int>(deg);
    else if (deg < 0) d.h1 = static_cast<int>(-deg);
    else if (trivial_when_degree_zero) d = {1, 1};
    return d;
}

PSplit psplit_make(std::vector<long> degrees) {
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

PSplit psplit_tensor(const PSplit& a, const PSplit& b) {
    std::vector<long> out;
    out.reserve(a.size() * b.size());
    for (long x : a)
        for (long y : b) out.push_back(x + y);
    return psplit_make(std::move(out));
}

PSplit psplit_sym(const PSplit& a, int k) {
    if (k < 0) throw std::invalid_argument("psplit_sym: negative power");
    std::vector<long> out;
    std::vector<std::size_t> idx;
    /* weakly increasing index tuples */
    auto rec = [&](auto&& self, std::size_t start, int remaining, long sum) -> void {
        if (remaining == 0) {
            out.push_back(sum);
            return;
        }
        for (std::size_t i = start; i < a.size(); ++i) self(self, i, remaining - 1, sum + a[i]);
    };
    rec(rec, 0, k, 0);
    return psplit_make(std::move(out));
}

PSplit psplit_wedge(const PSplit& a, int k) {
    if (k < 0) throw std::invalid_argument("psplit_wedge: negative power");
    std::vector<long> out;
    auto rec = [&](auto&& self, std::size_t start, int remaining, long sum) -> void {
        if (remaining == 0) {
            out.push_back(sum);
            return;
        }
        for (std::size_t i = start; i < a.size(); ++i) self(self, i + 1, remaining - 1, sum + a[i]);
    };
    rec(rec, 0, k, 0);
    return psplit_make(std::move(out));
}

long psplit_h0_p1(const PSplit& s) {
    long total = 0;
    for (long d : s) total += h_p1(d).h0;
    return total;
}

long psplit_h1_p1(const PSplit& s) {
    long total = 0;
    for (long d : s) total += h_p1(d).h1;
    return total;
}

RestrictionCatalog restriction_catalog() {
    RestrictionCatalog c;
    c.W = psplit_make({1, 2});
    c.L = psplit_make({1});
    c.conormal = psplit_make({1});
    c.omega1 = psplit_make({-2});
    c.log_canonical = psplit_make({3});
    return c;
}

int chase_h0_bound(const CohDims& sub, int restriction_h0) {
    return sub.h0 + restriction_h0;
}

std::optional<AxiomStatement> AxiomRegistry::find(const std::string& id,
                                                  const std::string& group) const {
    for (const auto& r : rows_)
        if (r.id == id && r.group == group) return r;
    return std::nullopt;
}

std::optional<AxiomStatement> AxiomRegistry::find_group(const std::string& group) const {
    for (const auto& r : rows_)
        if (r.group == group) return r;
    return std::nullopt;
}

bool AxiomRegistry::has_id(const std::string& id) const {
    for (const auto& r : rows_)
        if (r.id == id) return true;
    return false;
}

AxiomRegistry default_axioms() {
    AxiomRegistry reg;
    std::string kodaira =
        "Kodaira-type vanishing: the dual of a nef and big line bundle on a smooth "
        "projective surface has h^0 = h^1 = 0";
    reg.add({"nef_big_dual", "L^-1", 0, 0, kodaira});
    reg.add({"nef_big_dual", "L^-2", 0, 0, kodaira});
    reg.add({"bogomolov_sommese", "W*L^-1", 0, std::nullopt,
             "Bogomolov-Sommese vanishing: a log cotangent subsheaf twisted by the dual "
             "of a big line bundle has no sections"});
    reg.add({"miyaoka_s2", "S2W*L^-2", 0, std::nullopt,
             "Miyaoka-type generic semipositivity, in the generalized form giving "
             "h^0(S^2 of the log cotangent bundle twisted by L^-2) = 0"});
    reg.add({"li_schwermer", "End0V1", std::nullopt, 0,
             "Li-Schwermer vanishing: H^1 of an irreducible local system with regular "
             "highest weight on a ball quotient vanishes"});
    return reg;
}

VanishingCertificate chase_certificate_s2w(const AxiomRegistry& reg) {
    VanishingCertificate c;
    c.kind = VanishingCertificate::Kind::H0Chase;
    c.target_group = "S2W*L^-1";
    c.sub_group = "W*L^-1";
    c.sub_copies = 2;
    RestrictionCatalog cat = restriction_catalog();
    std::vector<long> l_dual;
    for (long d : cat.L) l_dual.push_back(-d);
    c.z_split = psplit_tensor(psplit_tensor(cat.W, cat.omega1), psplit_make(l_dual));
    c.per_curve_h0 = static_cast<int>(psplit_h0_p1(c.z_split));
    auto ax = reg.find("bogomolov_sommese", "W*L^-1");
    if (!ax || !ax->h0.has_value()) {
        c.note = "missing axiom bogomolov_sommese for W*L^-1";
        return c;
    }
    CohDims sub{c.sub_copies * ax->h0.value(), 0};
    c.h0_bound = chase_h0_bound(sub, c.curve_count * c.per_curve_h0);
    c.axioms_used = {"bogomolov_sommese"};
    c.valid = true;
    return c;
}

VanishingCertificate chase_certificate_s3w(const AxiomRegistry& reg) {
    VanishingCertificate c;
    c.kind = VanishingCertificate::Kind::H0Chase;
    c.target_group = "S3W*L^-2";
    c.sub_group = "S2W*L^-2";
    c.sub_copies = 1;
    RestrictionCatalog cat = restriction_catalog();
    std::vector<long> l_dual_sq;
    for (long d : cat.L) l_dual_sq.push_back(-2 * d);
    c.z_split =
        psplit_tensor(psplit_tensor(psplit_sym(cat.W, 2), cat.omega1), psplit_make(l_dual_sq));
    c.per_curve_h0 = static_cast<int>(psplit_h0_p1(c.z_split));
    auto ax = reg.find("miyaoka_s2", "S2W*L^-2");
    if (!ax || !ax->h0.has_value()) {
        c.note = "missing axiom miyaoka_s2 for S2W*L^-2";
        return c;
    }
    CohDims sub{c.sub_copies * ax->h0.value(), 0};
    c.h0_bound = chase_h0_bound(sub, c.curve_count * c.per_curve_h0);
    c.axioms_used = {"miyaoka_s2"};
    c.valid = true;
    return c;
}

VanishingCertificate global_h1_certificate(const AxiomRegistry& reg,
                                           const std::string& local_system) {
    VanishingCertificate c;
    c.kind = VanishingCertificate::Kind::GlobalH1;
    c.target_group = local_system;
    auto ax = reg.find_group(local_system);
    if (!ax || !ax->h1.has_value() || ax->h1.value() != 0) {
        c.note = "no H^1 = 0 axiom registered for " + local_system;
        return c;
    }
    c.axioms_used = {ax->id};
    c.valid = true;
    return c;
}

}  // namespace pms
