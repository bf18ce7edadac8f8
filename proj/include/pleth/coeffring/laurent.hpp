#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pleth/coeffring/rational.hpp"

namespace pleth {

inline constexpr int kMaxVars = 8;

// Exponent vector of a monomial t1^e1 ... td^ed. Unused slots stay zero, so
// vectors of different declared length compare consistently.
struct Exponent {
    std::array<int32_t, kMaxVars> e{};

    int32_t& operator[](int i) { return e[static_cast<size_t>(i)]; }
    int32_t operator[](int i) const { return e[static_cast<size_t>(i)]; }

    Exponent operator+(const Exponent& o) const;
    Exponent operator-(const Exponent& o) const;
    Exponent scaled(int k) const;
    bool is_zero() const;

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;

    static Exponent unit(int var, int32_t power = 1);
    static Exponent from(const std::vector<int>& v);
    std::vector<int> to_vector(int nvars) const;
};

struct ExponentHash {
    size_t operator()(const Exponent& x) const noexcept;
};

// Multivariate Laurent polynomial over Q. Terms are kept sorted by
// lexicographic exponent order with no zero coefficients; the leading term is
// the last one.
class LaurentPoly {
public:
    using Term = std::pair<Exponent, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}
    LaurentPoly(int nvars, Rational c);
    static LaurentPoly monomial(int nvars, const Exponent& e, Rational c = 1);
    static LaurentPoly variable(int nvars, int var);
    static LaurentPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_term() const;
    const Term& leading() const { return terms_.back(); }
    Rational coeff(const Exponent& e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly pow(unsigned k) const;
    LaurentPoly shifted(const Exponent& e) const;
    LaurentPoly adams(int k) const;
    // Componentwise minimum of exponents; zero vector for the zero polynomial.
    Exponent min_exponent() const;
    // Exact quotient in the Laurent ring if `d` divides this polynomial.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;
    // Least common multiple of coefficient denominators.
    mpz_class coeff_denominator_lcm() const;
    LaurentPoly with_nvars(int nvars) const;

    // Evaluate at an integer/rational point (all variables must be nonzero
    // when negative exponents occur).
    Rational evaluate(const std::vector<Rational>& point) const;

    // Deterministic total order used to canonicalize factor lists.
    static int compare(const LaurentPoly& a, const LaurentPoly& b);

    // Human-readable sum of terms, e.g. "1 - 2*t1^2*t2^-1". Coefficients may
    // be rational ("3/2*t1").
    std::string str() const;

private:
    void normalize();
    int nvars_ = 0;
    std::vector<Term> terms_;
};

}  // namespace pleth
