#pragma once

/* Neron-Severi lattice computations for a product abelian surface
 * E x E with CM by the Eisenstein integers, and for its blowup at the
 * three points where the candidate boundary curves meet.
 *
 * Ambient "Product": rank 4, basis
 *   T1 = graph of the identity, Tw = graph of multiplication by omega,
 *   A  = 0 x E,                 B  = E x 0.
 * Intersection numbers: T1.Tw = 3, every other distinct pair meets in
 * one point, and all four basis classes are curves of self-intersection 0.
 *
 * Ambient "Blowup": rank 7, the pullback of the product basis together
 * with the three exceptional curves Z1, Z2, Z3 (Zi^2 = -1, mutually
 * orthogonal and orthogonal to every pulled-back class).
 *
 * graph_class solves for the class of the graph of an arbitrary
 * endomorphism phi from its intersection numbers with the basis:
 *   x.T1 = norm(phi - 1), x.Tw = norm(phi - omega), x.A = 1, x.B = norm(phi).
 */

#include "pms/eisenstein.hpp"
#include "pms/qmatrix.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pms {

enum class Ambient { Product, Blowup };

struct DivisorClass {
    Ambient ambient;
    /* Product: coefficients on (T1, Tw, A, B).
     * Blowup:  coefficients on (T1, Tw, A, B, Z1, Z2, Z3), the first four
     * meaning pullbacks of the product basis. */
    std::vector<Int> c;

    std::size_t rank() const { return c.size(); }

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
    DivisorClass operator*(const Int& n) const;
    friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
        return x.ambient == y.ambient && x.c == y.c;
    }
    std::string str() const;
};

struct AmbientMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonIntegralSolution : std::domain_error {
    using std::domain_error::domain_error;
};
struct ZeroDivisor : std::domain_error {
    using std::domain_error::domain_error;
};

DivisorClass product_class(Int t1, Int tw, Int a, Int b);
DivisorClass blowup_class(Int t1, Int tw, Int a, Int b, Int z1, Int z2, Int z3);

/* Gram matrix of the chosen ambient basis. */
QMat gram_matrix(Ambient amb);

/* Intersection number of two classes in the same ambient. */
Int intersect(const DivisorClass& x, const DivisorClass& y);

/* Class of the graph of the endomorphism phi inside the product surface. */
DivisorClass graph_class(const Eisenstein& phi);

/* Pullback of a product class to the blowup (coefficients extend by zero). */
DivisorClass pullback(const DivisorClass& x);

/* Coefficient-wise exact division in the chosen basis; absent unless n
 * divides every coefficient.  Divisibility is decided in NS, which suffices
 * because every class handled here is expressed integrally in the basis. */
std::optional<DivisorClass> divide(const DivisorClass& x, const Int& n);

bool verify_relation(const DivisorClass& lhs, const DivisorClass& rhs);

/* Named catalog of the curves appearing on the blowup:
 *   T1, Tw, Tw2   pullbacks of the three graphs,
 *   A, B          pullbacks of the two rulings,
 *   Z1..Z3, Z     exceptional curves and their sum,
 *   D1..D3        strict transforms of the graphs (pullback minus Z),
 *   D0            strict transform of 0 x E    (pullback minus Z1),
 *   D4..D6        strict transforms of E x Q_i (pullback minus Z1, Z2, Z3),
 *   D             the boundary D1 + ... + D6,
 *   K             canonical class of the blowup (= Z),
 *   KD            K + D,
 *   L             the log-canonical third: L = sigma*(0xE) - Z + 2 sigma*(Ex0).
 */
std::map<std::string, DivisorClass> strict_transform_catalog();

DivisorClass canonical_plus_boundary();

/* Degree certificate against the fixed curve catalog {D0..D6, Z1..Z3}.
 * A nonnegative table witnesses nefness on these curves only; it is not a
 * nefness proof for the whole cone. */
struct PositivityReport {
    Int self_int;
    std::map<std::string, Int> degrees;
};

PositivityReport positivity_report(const DivisorClass& x);

}  // namespace pms
