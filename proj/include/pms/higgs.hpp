#pragma once

/* Higgs bundles on the compactified ball quotient and their de Rham-type
 * complexes.
 *
 * Every bundle handled here is a direct sum of pieces S^s W x L^l, where
 * W is the rank-2 log cotangent source bundle and L the third root of the
 * log canonical bundle; Lambda^2 W = L^3 is folded into the L-exponent, so
 * a monomial is just the pair (s, l).  The uniformizing bundle has pieces
 * W x L^{-1} and L^{-1} with the Higgs field the tautological inclusion.
 *
 * build_complex forms the three-term complex (H, H x W, H x Lambda^2 W)
 * with differentials induced by the Higgs field; it realizes everything on
 * explicit rational bases, refines each H x W term into symmetric and
 * wedge parts, verifies that the composed differential is the zero matrix,
 * and only then forgets the matrices: the complex exposes one label per
 * entry (zero, iso, canonical).  Nonzero maps between distinct monomials
 * cannot exist (the pieces are irreducible and pairwise non-isomorphic),
 * so the label data determines the reduction behavior exactly.
 *
 * reduce contracts iso entries at label level.  Contracting an iso at
 * (s, t) is only valid when every correction term through (s, t) has a
 * zero factor; otherwise NonzeroCorrection is raised.
 */

#include "pms/curve_coh.hpp"
#include "pms/qmatrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pms {

struct Monomial {
    int s = 0; /* symmetric power of W */
    int l = 0; /* L-exponent after folding Lambda^2 W = L^3 */

    Monomial() = default;
    Monomial(int s_, int l_) : s(s_), l(l_) {}
    static Monomial with_wedge(int s_, int wedge_count, int l_) {
        return Monomial(s_, l_ + 3 * wedge_count);
    }

    int fiber_dim() const { return s + 1; }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.s == b.s && a.l == b.l;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.s != b.s ? a.s < b.s : a.l < b.l;
    }

    std::string serialize() const;
    /* Display with the boundary twist the L2 condition imports. */
    std::string serialize_twisted() const;
};

struct Piece {
    Monomial m;
    int p = 0; /* Hodge bidegree */
    int q = 0;
};

struct HiggsError : std::logic_error {
    using std::logic_error::logic_error;
};
struct SquareNotZero : HiggsError {
    using HiggsError::HiggsError;
};
struct NonzeroCorrection : HiggsError {
    using HiggsError::HiggsError;
};

/* A Higgs bundle realized on explicit bases: theta(e) = tx(e) (x) dz-part
 * plus ty(e) (x) second part, stored blockwise between pieces. */
struct RealizedHiggs {
    std::vector<Piece> pieces;
    std::map<std::pair<int, int>, std::pair<QMat, QMat>> theta;

    std::vector<int> piece_ranks() const;
    int rank() const;
    friend bool operator==(const RealizedHiggs& a, const RealizedHiggs& b);
};

RealizedHiggs uniformizing();
RealizedHiggs sym_power(const RealizedHiggs& e, int n);
RealizedHiggs end0(const RealizedHiggs& e);

enum class Label { Zero, Iso, Canonical };

struct HComplex {
    std::array<std::vector<Monomial>, 3> obj;
    /* d[k][i][j]: label of the entry from obj[k][i] to obj[k+1][j]. */
    std::array<std::vector<std::vector<Label>>, 2> d;

    std::array<std::vector<std::string>, 3> serialize() const;
    std::array<int, 3> degree_dims() const;
    int euler() const;
};

HComplex build_complex(const RealizedHiggs& h);
HComplex reduce(const HComplex& c);

/* One constituent of the hypercohomology of a fully reduced complex:
 * the usual cohomology of one monomial in one complex degree. */
struct HypercohTerm {
    int total_degree;
    int complex_degree;
    int coh_degree;
    std::string group;
    std::optional<int> dim; /* resolved by an axiom, otherwise symbolic */
    std::string axiom_id;
};

std::vector<HypercohTerm> hypercoh(const HComplex& reduced, const AxiomRegistry& reg);

enum class L2Verdict { Vanishes, BoundedBy, Unknown };

struct LocatedTerm {
    std::string group;
    int complex_degree;
    std::string conclusion;
    std::string twisted_form; /* empty unless the boundary twist applies */
    std::string twist_note;
};

struct L2Outcome {
    L2Verdict verdict = L2Verdict::Unknown;
    int bound = 0;
    std::vector<LocatedTerm> located;
    std::vector<std::string> axioms_used;
    std::vector<std::string> notes;
};

/* Resolve the first hypercohomology of a reduced complex using the given
 * certificate for the residue term and the axiom registry for the line
 * bundle terms. */
L2Outcome l2_refine(const HComplex& reduced, const VanishingCertificate& cert,
                    const AxiomRegistry& reg);

}  // namespace pms
