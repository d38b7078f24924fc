#pragma once

/* Exact group law on the elliptic curve y^2 = x^3 - 1 over Q(i).
 * The three marked points used throughout are the origin at infinity
 * Q0 and the two 3-torsion points Q1 = (0, i), Q2 = (0, -i).
 */

#include "pms/gaussian.hpp"

#include <optional>
#include <vector>

namespace pms {

struct ECPoint {
    /* Empty coordinates encode the point at infinity. */
    std::optional<std::pair<GaussQ, GaussQ>> xy;

    static ECPoint infinity() { return {}; }
    static ECPoint affine(GaussQ x, GaussQ y) { return {std::make_pair(std::move(x), std::move(y))}; }
    bool is_infinity() const { return !xy.has_value(); }

    friend bool operator==(const ECPoint& p, const ECPoint& q) { return p.xy == q.xy; }
    friend bool operator!=(const ECPoint& p, const ECPoint& q) { return !(p == q); }
    std::string str() const {
        return is_infinity() ? "O" : "(" + xy->first.str() + ", " + xy->second.str() + ")";
    }
};

struct NotOnCurve : std::domain_error {
    using std::domain_error::domain_error;
};

bool on_curve(const ECPoint& p);
ECPoint ec_neg(const ECPoint& p);
ECPoint ec_add(const ECPoint& p, const ECPoint& q);
ECPoint ec_mul(const Int& n, const ECPoint& p);

ECPoint point_q0();
ECPoint point_q1();
ECPoint point_q2();

/* All Q(i)-rational points used in tests: the torsion subgroup generated
 * by Q1 and the 2-torsion point (1, 0). */
std::vector<ECPoint> marked_points();

}  // namespace pms
