#pragma once

#include <map>
#include <string>
#include <utility>

#include "qalt/numeric.hpp"

namespace qalt {

// Laurent polynomial with exact integer coefficients in a single formal
// variable.  The exponent unit is contextual: kauffman_bracket uses powers
// of A, jones uses powers of t^(1/2) (so odd exponents are genuine
// half-integer powers of t).  No zero coefficients are ever stored.
class Laurent {
public:
    Laurent() = default;

    static Laurent zero() { return {}; }
    static Laurent one() { return monomial(0, 1); }
    static Laurent monomial(long exp, Int coeff) {
        Laurent p;
        if (coeff != 0) p.c_[exp] = std::move(coeff);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<long, Int>& terms() const { return c_; }

    Int coeff(long exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Int(0) : it->second;
    }

    void add_term(long exp, const Int& coeff) {
        if (coeff == 0) return;
        Int& slot = c_[exp];
        slot += coeff;
        if (slot == 0) c_.erase(exp);
    }

    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (const auto& [e, v] : o.c_) r.add_term(e, v);
        return r;
    }
    Laurent operator-(const Laurent& o) const {
        Laurent r = *this;
        for (const auto& [e, v] : o.c_) r.add_term(e, -v);
        return r;
    }
    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (const auto& [e1, v1] : c_)
            for (const auto& [e2, v2] : o.c_) r.add_term(e1 + e2, v1 * v2);
        return r;
    }
    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, v] : c_) r.c_[e] = -v;
        return r;
    }
    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return c_ != o.c_; }

    // Multiply by coeff * x^exp in place.
    void shift_scale(long exp, const Int& coeff) {
        std::map<long, Int> out;
        if (coeff != 0)
            for (const auto& [e, v] : c_) out[e + exp] = v * coeff;
        c_ = std::move(out);
    }

    // Substitute x -> x^-1.
    Laurent invert_variable() const {
        Laurent r;
        for (const auto& [e, v] : c_) r.c_[-e] = v;
        return r;
    }

    // Substitute x -> x^k (k != 0), used to convert between exponent units.
    Laurent stretch(long k) const {
        Laurent r;
        for (const auto& [e, v] : c_) r.c_[e * k] = v;
        return r;
    }

    // True when every exponent is divisible by k.
    bool exponents_divisible_by(long k) const {
        for (const auto& [e, v] : c_) {
            (void)v;
            if (e % k != 0) return false;
        }
        return true;
    }

    // Substitute x = i (exact).
    GaussRational eval_at_i() const {
        GaussRational acc;
        for (const auto& [e, v] : c_) acc = acc + i_power(e) * GaussRational::integer(v);
        return acc;
    }

    // d/dx, as a Laurent polynomial in x.
    Laurent derivative() const {
        Laurent r;
        for (const auto& [e, v] : c_) r.add_term(e - 1, Int(e) * v);
        return r;
    }

    // "e1:c1 e2:c2 ..." sorted by exponent; "0" for the zero polynomial.
    std::string serialize() const {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [e, v] : c_) {
            if (!s.empty()) s += ' ';
            s += std::to_string(e) + ":" + v.get_str();
        }
        return s;
    }

private:
    std::map<long, Int> c_;
};

} // namespace qalt
