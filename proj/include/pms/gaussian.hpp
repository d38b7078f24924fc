#pragma once

/* Exact arithmetic in Q(i): pairs re + im*i of rationals. */

#include "pms/rational.hpp"

namespace pms {

struct GaussQ {
    Rat re;
    Rat im;

    GaussQ() = default;
    GaussQ(Rat r) : re(std::move(r)) {}
    GaussQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GaussQ i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend GaussQ operator+(const GaussQ& x, const GaussQ& y) { return {x.re + y.re, x.im + y.im}; }
    friend GaussQ operator-(const GaussQ& x, const GaussQ& y) { return {x.re - y.re, x.im - y.im}; }
    GaussQ operator-() const { return {-re, -im}; }
    friend GaussQ operator*(const GaussQ& x, const GaussQ& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussQ operator/(const GaussQ& x, const GaussQ& y) {
        Rat n = y.re * y.re + y.im * y.im;
        if (n.is_zero()) throw std::domain_error("GaussQ: division by zero");
        return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
    }
    friend bool operator==(const GaussQ& x, const GaussQ& y) { return x.re == y.re && x.im == y.im; }
    friend bool operator!=(const GaussQ& x, const GaussQ& y) { return !(x == y); }

    std::string str() const { return "(" + re.str() + ")+(" + im.str() + ")i"; }
};

}  // namespace pms
