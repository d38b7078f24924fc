#include "pms/elliptic.hpp"

namespace pms {

bool on_curve(const ECPoint& p) {
    if (p.is_infinity()) return true;
    const GaussQ& x = p.xy->first;
    const GaussQ& y = p.xy->second;
    return y * y == x * x * x - GaussQ(Rat(1));
}

static void require_on_curve(const ECPoint& p) {
    if (!on_curve(p)) throw NotOnCurve("point " + p.str() + " does not satisfy y^2 = x^3 - 1");
}

ECPoint ec_neg(const ECPoint& p) {
    require_on_curve(p);
    if (p.is_infinity()) return p;
    return ECPoint::affine(p.xy->first, -p.xy->second);
}

ECPoint ec_add(const ECPoint& p, const ECPoint& q) {
    require_on_curve(p);
    require_on_curve(q);
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const GaussQ &x1 = p.xy->first, &y1 = p.xy->second;
    const GaussQ &x2 = q.xy->first, &y2 = q.xy->second;
    GaussQ lambda;
    if (x1 == x2) {
        if (y1 == -y2) return ECPoint::infinity();
        /* tangent slope of y^2 = x^3 - 1 */
        lambda = (GaussQ(Rat(3)) * x1 * x1) / (GaussQ(Rat(2)) * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    GaussQ x3 = lambda * lambda - x1 - x2;
    GaussQ y3 = lambda * (x1 - x3) - y1;
    return ECPoint::affine(x3, y3);
}

ECPoint ec_mul(const Int& n, const ECPoint& p) {
    require_on_curve(p);
    Int k = n;
    ECPoint base = p;
    if (k < 0) {
        k = -k;
        base = ec_neg(base);
    }
    ECPoint acc = ECPoint::infinity();
    while (k > 0) {
        if (k % 2 == 1) acc = ec_add(acc, base);
        base = ec_add(base, base);
        k /= 2;
    }
    return acc;
}

ECPoint point_q0() { return ECPoint::infinity(); }
ECPoint point_q1() { return ECPoint::affine(GaussQ(Rat(0)), GaussQ::i()); }
ECPoint point_q2() { return ECPoint::affine(GaussQ(Rat(0)), -GaussQ::i()); }

std::vector<ECPoint> marked_points() {
    ECPoint two_tor = ECPoint::affine(GaussQ(Rat(1)), GaussQ(Rat(0)));
    return {point_q0(), point_q1(), point_q2(), two_tor,
            ec_add(point_q1(), two_tor), ec_add(point_q2(), two_tor)};
}

}  // namespace pms
