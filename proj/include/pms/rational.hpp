#pragma once

/* Exact rational arithmetic over arbitrary-precision integers.
 * Every computation in this project is exact; no floating point
 * appears anywhere.  Rationals are kept normalized: gcd(num,den)=1
 * and den>0, so operator== is plain member comparison.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace pms {

using Int = boost::multiprecision::cpp_int;

struct Rat {
    Int num;
    Int den;

    Rat() : num(0), den(1) {}
    Rat(int n) : num(n), den(1) {}
    Rat(long long n) : num(n), den(1) {}
    Rat(Int n) : num(std::move(n)), den(1) {}
    Rat(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Int g = boost::multiprecision::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num * b.num, a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num * b.den < b.num * a.den;
    }

    std::string str() const {
        std::string s = num.str();
        if (den != 1) s += "/" + den.str();
        return s;
    }
};

inline Int rat_to_int(const Rat& r) {
    if (!r.is_integer()) throw std::domain_error("rat_to_int: not an integer: " + r.str());
    return r.num;
}

}  // namespace pms
