#pragma once

/* Eisenstein integers a + b*omega, omega a primitive cube root of unity,
 * so omega^2 = -1 - omega and norm(a + b*omega) = a^2 - a*b + b^2.
 * These index the endomorphisms of the CM elliptic curve whose graphs
 * the lattice module works with.
 */

#include "pms/rational.hpp"

namespace pms {

struct Eisenstein {
    Int a;
    Int b;

    Eisenstein() : a(0), b(0) {}
    Eisenstein(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    static Eisenstein one() { return {1, 0}; }
    static Eisenstein omega() { return {0, 1}; }
    static Eisenstein omega_sq() { return {-1, -1}; }

    friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
        /* (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2, w^2 = -1 - w */
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    friend bool operator==(const Eisenstein& x, const Eisenstein& y) {
        return x.a == y.a && x.b == y.b;
    }

    Int norm() const { return a * a - a * b + b * b; }

    std::string str() const {
        return "(" + a.str() + ")+(" + b.str() + ")w";
    }
};

}  // namespace pms
