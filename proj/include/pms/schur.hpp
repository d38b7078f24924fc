#pragma once

/* Schur calculus for GL_r representations indexed by partitions.
 *
 * schur_poly expands the Schur polynomial in r variables by enumerating
 * semistandard tableaux.  schur_dim evaluates the Weyl dimension formula.
 * decompose_product computes Littlewood-Richardson coefficients by
 * expanding the product polynomial and repeatedly subtracting the Schur
 * polynomial of the lexicographically leading monomial; every leading
 * exponent must be a partition and every coefficient must stay
 * nonnegative, and violations abort the run.
 */

#include "pms/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace pms {

using Partition = std::vector<int>;

struct LengthExceedsRank : std::domain_error {
    using std::domain_error::domain_error;
};

bool is_partition(const Partition& p);
std::string partition_str(const Partition& p);

/* Monomials in r variables: exponent vector -> coefficient. */
class SymPoly {
public:
    explicit SymPoly(std::size_t vars) : vars_(vars) {}

    std::size_t vars() const { return vars_; }
    bool empty() const { return terms_.empty(); }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }

    void add_term(const std::vector<int>& expo, const Int& coeff);
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b);

    /* Lexicographically largest exponent vector and its coefficient. */
    std::pair<std::vector<int>, Int> leading() const;

    /* Value at x_1 = ... = x_r = 1: tableau count. */
    Int eval_ones() const;

private:
    std::size_t vars_;
    std::map<std::vector<int>, Int> terms_;
};

SymPoly schur_poly(const Partition& lambda, std::size_t r);
Int schur_dim(const Partition& lambda, std::size_t r);

/* s_lambda * s_mu = sum of coeff * s_nu in r variables. */
std::vector<std::pair<Partition, Int>> decompose_product(const Partition& lambda,
                                                         const Partition& mu,
                                                         std::size_t r);

}  // namespace pms
