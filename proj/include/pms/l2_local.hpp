#pragma once

/* Local models at the boundary: monodromy weight filtrations of nilpotent
 * operators and the L2 subcomplexes they cut out of the log de Rham
 * complex of a polarized variation near a puncture.
 *
 * weight_filtration computes the unique increasing filtration centered at
 * zero with N W_k inside W_{k-2} and N^k inducing isomorphisms between
 * Gr_k and Gr_{-k}.  Subspaces come from the closed formula
 *   W_k = sum over j >= max(0,-k) of (ker N^{k+j+1} meet im N^j),
 * and the graded dimensions are cross-checked against the Jordan string
 * counts read off the ranks of powers of N (a string of length l
 * contributes weights l-1, l-3, ..., -(l-1)).
 *
 * The local rule: the coefficient module of the form part
 * (dz1/z1)^{e1} (dz2/z2)^{e2} is the intersection over log directions i of
 * (W_{-2 e_i}(N_i) + z_i * full fiber); a direction without a log pole
 * imposes no condition.  Modules are z-stable and generated in monomial
 * bidegree at most (1,1), so comparing fibers up to a truncation bound of
 * two or more decides equality.
 */

#include "pms/qmatrix.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pms {

struct NotNilpotent : std::domain_error {
    using std::domain_error::domain_error;
};
struct TruncationTooSmall : std::domain_error {
    using std::domain_error::domain_error;
};

struct NilpotentOp {
    QMat n;
    std::vector<std::string> basis_names;
};

struct WeightFiltration {
    int fiber_dim = 0;
    int max_weight = 0; /* weights live in [-max_weight, max_weight] */
    std::map<int, Subspace> w;
    std::map<int, int> gr_dim;
    /* Basis-vector names per weight when every W_k is spanned by standard
     * basis vectors; empty otherwise. */
    std::map<int, std::vector<std::string>> gr_names;
    bool coordinate = false;

    const Subspace& at(int k) const;
};

WeightFiltration weight_filtration(const NilpotentOp& op);

/* Does Gr_k equal the span of the given vectors modulo W_{k-1}? */
bool gr_matches(const WeightFiltration& wf, int k, const std::vector<QVec>& generators);

enum class DivisorType { Smooth, NormalCrossing };

/* Fiber model: Sym^n of the uniformizing local system with the two
 * commuting log monodromy operators given by Leibniz expansion. */
struct LocalModel {
    int n = 1;
    std::vector<std::string> names;
    QMat n1;
    QMat n2;
    std::size_t dim() const { return names.size(); }
};

LocalModel sym_local(int n);

/* z-stable module of one complex degree: for each form part (e1, e2) a
 * table of fiber subspaces indexed by monomial bidegree up to the stored
 * truncation bound. */
struct LocalL2Module {
    int truncation = 0;
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, Subspace>> parts;
};

LocalL2Module module_from_generators(
    int truncation, std::size_t ambient,
    const std::map<std::pair<int, int>, std::vector<std::tuple<int, int, Subspace>>>& gens);

std::array<LocalL2Module, 3> l2_subcomplex(const LocalModel& model, DivisorType type, int bound);

bool module_equal(const LocalL2Module& x, const LocalL2Module& y, int bound);
bool complex_equal(const std::array<LocalL2Module, 3>& x, const std::array<LocalL2Module, 3>& y,
                   int bound);

/* Check that the Higgs field maps each degree of the subcomplex into the
 * next: the dz1/z1 component through N1, the second component through N2. */
bool theta_stable(const std::array<LocalL2Module, 3>& mods, const LocalModel& model, int bound);

}  // namespace pms
