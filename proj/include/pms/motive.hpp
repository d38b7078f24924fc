#pragma once

/* Graded realization of the degree-indexed projectors for a threefold
 * whose cohomology is the exterior algebra on six degree-one classes.
 *
 * A GradedEndo stores one rational matrix per cohomological degree
 * 0..6, acting on the C(6,k)-dimensional exterior-power blocks; any
 * degree-one matrix extends multiplicatively through minors.  The
 * projector for degree i is the Lagrange interpolation of the
 * multiplication-by-n endomorphism at the eigenvalue n^i, so the
 * projectors are polynomials in [n]* with rational coefficients and are
 * independent of the auxiliary integer n >= 2.
 */

#include "pms/qmatrix.hpp"
#include "pms/rep_decomp.hpp"

#include <array>
#include <vector>

namespace pms {

struct GradedEndo {
    std::array<QMat, 7> block;

    static GradedEndo identity();
    friend GradedEndo operator*(const GradedEndo& a, const GradedEndo& b);
    friend GradedEndo operator+(const GradedEndo& a, const GradedEndo& b);
    friend GradedEndo operator-(const GradedEndo& a, const GradedEndo& b);
    GradedEndo scale(const Rat& s) const;
    friend bool operator==(const GradedEndo& a, const GradedEndo& b);
};

std::array<int, 7> motive_block_dims();

/* Sorted k-subsets of {0..5} in lexicographic order: the basis of each block. */
std::vector<std::vector<int>> motive_subsets(int k);

/* Extend a 6x6 degree-one action through all exterior powers. */
GradedEndo from_degree1(const QMat& m6);

/* Multiplication by n (the diagonal degree-one action n * id). */
GradedEndo mult_endo(const Int& n);

/* The seven degree projectors built from mult_endo(n); requires n >= 2. */
std::vector<GradedEndo> kunneth_projectors(const Int& n);

/* Idempotence, mutual orthogonality, summing to the identity, and the
 * eigenvalue equations against mult_endo(n).  On failure, the reason is
 * written to why when provided. */
bool verify_projector_axioms(const std::vector<GradedEndo>& pi, const Int& n,
                             std::string* why = nullptr);

/* Rank of the cup-product pairing block H^i x H^{6-i} -> H^6. */
Int poincare_pairing_rank(int i);

/* Dimensions of the fixed part and the two conjugate eigenspace families
 * of the CM automorphism acting on each degree. */
struct CMSplit {
    std::array<int, 7> fixed{};
    std::array<int, 7> omega{};
    std::array<int, 7> omega_bar{};
};

CMSplit cm_splitting();

/* Multiplicity of the trivial summand in degree k; delegates to the
 * exterior-power decomposition. */
int invariant_dims(int k);

}  // namespace pms
