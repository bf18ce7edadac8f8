#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pleth/coeffring/laurent.hpp"

namespace pleth {

// Element of Q(t1, ..., td).
//
// The numerator is an expanded Laurent polynomial. The denominator is kept as
// a product of normalized factors with multiplicities; a normalized factor has
// all minimal exponents zero and leading coefficient 1, so scalar and monomial
// units always live in the numerator. Factors that divide the numerator are
// cancelled after every operation. Equality is decided by cross-multiplication.
class RatFun {
public:
    using Factor = std::pair<LaurentPoly, int>;

    RatFun() = default;
    RatFun(long c) : num_(0, Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFun(const Rational& c) : num_(0, c) {}  // NOLINT(google-explicit-constructor)
    RatFun(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
    RatFun(const LaurentPoly& num, const LaurentPoly& den);

    static RatFun variable(int nvars, int var) { return RatFun(LaurentPoly::variable(nvars, var)); }

    int nvars() const;
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    const LaurentPoly& numerator() const { return num_; }
    const std::vector<Factor>& denominator_factors() const { return den_; }
    LaurentPoly denominator() const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b);

    RatFun inverse() const;
    RatFun pow(int k) const;
    RatFun adams(int k) const;

    // Canonical text: "(N)/(D)" with integer coefficients, or "N" when the
    // denominator is 1. Parses back to an equal value.
    std::string str() const;

private:
    void add_factor(const LaurentPoly& p, int mult);
    void cancel();
    LaurentPoly num_;
    std::vector<Factor> den_;  // sorted by LaurentPoly::compare
};

// Splits p = c * t^m * f with f normalized. Returns {c * t^m, f}.
std::pair<LaurentPoly, LaurentPoly> split_unit(const LaurentPoly& p);

}  // namespace pleth
