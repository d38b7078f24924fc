#pragma once

/* Cohomology bookkeeping for split vector bundles restricted to curves,
 * and the h^0 chases that bound sections of surface bundles by restricting
 * to the three exceptional lines.
 *
 * A PSplit records a bundle that splits into line bundles on a curve, as
 * the multiset of their degrees.  On a rational curve h^0(O(n)) = max(n+1,0)
 * and h^1(O(n)) = max(-n-1,0); on an elliptic curve a nonzero degree-0
 * bundle has no sections while the trivial bundle has a one-dimensional
 * space of them.
 *
 * Vanishing statements imported from the literature (Kodaira-type,
 * Bogomolov-Sommese, Miyaoka-type, Li-Schwermer) are first-class axiom
 * objects carrying the group they bound and a citation line; every chase
 * certificate lists the axioms it consumed.
 */

#include <optional>
#include <string>
#include <vector>

namespace pms {

struct CohDims {
    int h0 = 0;
    int h1 = 0;
    friend bool operator==(const CohDims& a, const CohDims& b) {
        return a.h0 == b.h0 && a.h1 == b.h1;
    }
};

CohDims h_p1(long n);
CohDims h_elliptic(long deg, bool trivial_when_degree_zero);

/* Multiset of line-bundle degrees, kept sorted. */
using PSplit = std::vector<long>;

PSplit psplit_make(std::vector<long> degrees);
PSplit psplit_tensor(const PSplit& a, const PSplit& b);
PSplit psplit_sym(const PSplit& a, int k);
PSplit psplit_wedge(const PSplit& a, int k);
long psplit_h0_p1(const PSplit& s);
long psplit_h1_p1(const PSplit& s);

/* Degrees on an exceptional line of the bundles the chases restrict:
 * W (the log cotangent source), L, the conormal bundle, the cotangent
 * sheaf of the line itself, and the log canonical bundle. */
struct RestrictionCatalog {
    PSplit W;        /* {1, 2} */
    PSplit L;        /* {1}    */
    PSplit conormal; /* {1}    */
    PSplit omega1;   /* {-2}   */
    PSplit log_canonical; /* {3} */
};
RestrictionCatalog restriction_catalog();

/* Exact-sequence bound: sections of the sub plus sections of the
 * restriction bound the sections of the total bundle. */
int chase_h0_bound(const CohDims& sub, int restriction_h0);

struct AxiomStatement {
    std::string id;
    std::string group;
    std::optional<int> h0;
    std::optional<int> h1;
    std::string citation;
};

class AxiomRegistry {
public:
    void add(AxiomStatement s) { rows_.push_back(std::move(s)); }
    const std::vector<AxiomStatement>& rows() const { return rows_; }
    std::optional<AxiomStatement> find(const std::string& id, const std::string& group) const;
    std::optional<AxiomStatement> find_group(const std::string& group) const;
    bool has_id(const std::string& id) const;

private:
    std::vector<AxiomStatement> rows_;
};

AxiomRegistry default_axioms();

/* Evidence that a residue cohomology group vanishes or is bounded.
 * H0Chase bounds h^0 of one monomial bundle through restriction to the
 * exceptional lines; GlobalH1 cites a vanishing of H^1 for a whole local
 * system, which kills every residue term at once. */
struct VanishingCertificate {
    enum class Kind { H0Chase, GlobalH1 };
    Kind kind = Kind::H0Chase;
    std::string target_group;
    int h0_bound = 0;
    PSplit z_split;
    int per_curve_h0 = 0;
    int curve_count = 3;
    int sub_copies = 0;
    std::string sub_group;
    std::vector<std::string> axioms_used;
    bool valid = false;
    std::string note;
};

/* Chase for the weight-two symmetric power twisted by L^{-1}: restriction
 * split {1,2} x {-2} x {-1}, subsheaf sections covered twice by the
 * Bogomolov-Sommese axiom. */
VanishingCertificate chase_certificate_s2w(const AxiomRegistry& reg);

/* Chase for the weight-three symmetric power twisted by L^{-2}: restriction
 * split Sym^2{1,2} x {-2} x {-2}, subsheaf sections covered by the
 * Miyaoka-type axiom.  The resulting bound of three is an upper bound only;
 * no exactness claim is made anywhere. */
VanishingCertificate chase_certificate_s3w(const AxiomRegistry& reg);

/* Cites an H^1 = 0 statement for the named local system. */
VanishingCertificate global_h1_certificate(const AxiomRegistry& reg, const std::string& local_system);

}  // namespace pms
