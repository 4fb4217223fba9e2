#pragma once

#include <gmpxx.h>

#include <string>

#include "qalt/errors.hpp"

namespace qalt {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }

// Rationals print as "p" or "p/q" (canonical form), the report format.
inline std::string to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Element of Q(i).  Evaluating Jones polynomials at t = -1 substitutes
// t^(1/2) = i, so values land here; the consistency checks then assert
// which parts must vanish.
struct GaussRational {
    Rat re;
    Rat im;

    GaussRational() : re(0), im(0) {}
    GaussRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRational integer(const Int& z) { return {Rat(z), Rat(0)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
    GaussRational operator-(const GaussRational& o) const { return {re - o.re, im - o.im}; }
    GaussRational operator*(const GaussRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRational operator/(const GaussRational& o) const {
        Rat n = o.re * o.re + o.im * o.im;
        if (n == 0) throw ZeroDeterminant("division by zero in Q(i)");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }

    // |z|^2, exact.
    Rat norm() const { return re * re + im * im; }
};

// i^k for any integer k.
inline GaussRational i_power(long k) {
    long m = ((k % 4) + 4) % 4;
    switch (m) {
        case 0: return {Rat(1), Rat(0)};
        case 1: return {Rat(0), Rat(1)};
        case 2: return {Rat(-1), Rat(0)};
        default: return {Rat(0), Rat(-1)};
    }
}

inline std::string to_string(const GaussRational& g) {
    if (g.im == 0) return to_string(g.re);
    if (g.re == 0) return to_string(g.im) + "i";
    return to_string(g.re) + (g.im > 0 ? "+" : "") + to_string(g.im) + "i";
}

} // namespace qalt
