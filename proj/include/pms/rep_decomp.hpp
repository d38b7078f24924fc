#pragma once

/* Decomposition of the exterior powers of a six-dimensional space that
 * splits as V1 + V2, two three-dimensional pieces exchanged by complex
 * conjugation, into named irreducible summands.
 *
 * Tags: triv, V1, V2, L2V1, L2V2 (Lambda^2 of a piece), S2V1, S2V2
 * (Sym^2), End0V1 (trace-free endomorphisms).  Multiplicities of the
 * genuinely mixed products come from Littlewood-Richardson decomposition
 * of the corresponding rank-3 Schur functors.
 */

#include "pms/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace pms {

struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct RepExpr {
    std::map<std::string, int> mult;

    void add(const std::string& tag, int k = 1);
    Int dim() const;
    std::string str() const;
    friend bool operator==(const RepExpr& a, const RepExpr& b) { return a.mult == b.mult; }
};

/* Dimension of one named summand. */
int rep_tag_dim(const std::string& tag);

/* Exponent e such that the CM automorphism acts on the summand with
 * eigenvalue omega^e (omega a primitive cube root of unity). */
int rep_tag_cm_exponent(const std::string& tag);

/* Lambda^k (V1 + V2) for 0 <= k <= 6. */
RepExpr decompose_lambda_k(int k);

int trivial_summand_count(int k);

}  // namespace pms
