#include "pleth/coeffring/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace pleth {

std::pair<LaurentPoly, LaurentPoly> split_unit(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
    Exponent m = p.min_exponent();
    LaurentPoly f = p.shifted(Exponent{} - m);
    Rational c = f.leading().second;
    f *= Rational(1) / c;
    return {LaurentPoly::monomial(p.nvars(), m, c), f};
}

namespace {

// Inverse of a monomial unit c * t^m.
LaurentPoly unit_inverse(const LaurentPoly& u) {
    const auto& [e, c] = u.terms()[0];
    return LaurentPoly::monomial(u.nvars(), Exponent{} - e, Rational(1) / c);
}

bool factor_less(const RatFun::Factor& a, const RatFun::Factor& b) {
    return LaurentPoly::compare(a.first, b.first) < 0;
}

bool same_factors(const std::vector<RatFun::Factor>& a, const std::vector<RatFun::Factor>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].second != b[i].second || !(a[i].first == b[i].first)) return false;
    return true;
}

LaurentPoly expand(const std::vector<RatFun::Factor>& fs, int nvars) {
    LaurentPoly r(nvars, 1);
    for (const auto& [f, e] : fs) r = r * f.pow(static_cast<unsigned>(e));
    return r;
}

}  // namespace

RatFun::RatFun(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero");
    auto [u, f] = split_unit(den);
    num_ = num * unit_inverse(u);
    if (!f.is_constant()) add_factor(f, 1);
    cancel();
}

int RatFun::nvars() const {
    int n = num_.nvars();
    for (const auto& f : den_) n = std::max(n, f.first.nvars());
    return n;
}

LaurentPoly RatFun::denominator() const { return expand(den_, nvars()); }

void RatFun::add_factor(const LaurentPoly& p, int mult) {
    Factor fac{p, mult};
    auto it = std::lower_bound(den_.begin(), den_.end(), fac, factor_less);
    if (it != den_.end() && it->first == p) {
        it->second += mult;
    } else {
        den_.insert(it, std::move(fac));
    }
}

void RatFun::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& [f, e] : den_) {
        while (e > 0) {
            auto q = num_.divide_exact(f);
            if (!q) break;
            num_ = std::move(*q);
            --e;
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& x) { return x.second == 0; }),
               den_.end());
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (same_factors(den_, o.den_)) {
        num_ += o.num_;
        cancel();
        return *this;
    }
    // Common denominator with maximal multiplicities.
    std::vector<Factor> common;
    size_t i = 0, j = 0;
    while (i < den_.size() || j < o.den_.size()) {
        if (j == o.den_.size() || (i < den_.size() && factor_less(den_[i], o.den_[j]))) {
            common.push_back(den_[i++]);
        } else if (i == den_.size() || factor_less(o.den_[j], den_[i])) {
            common.push_back(o.den_[j++]);
        } else {
            common.emplace_back(den_[i].first, std::max(den_[i].second, o.den_[j].second));
            ++i;
            ++j;
        }
    }
    auto missing = [&common](const std::vector<Factor>& mine) {
        std::vector<Factor> m;
        size_t k = 0;
        for (const auto& [f, e] : common) {
            int have = 0;
            if (k < mine.size() && mine[k].first == f) have = mine[k++].second;
            if (e > have) m.emplace_back(f, e - have);
        }
        return m;
    };
    int nv = std::max(nvars(), o.nvars());
    num_ = num_ * expand(missing(den_), nv) + o.num_ * expand(missing(o.den_), nv);
    den_ = std::move(common);
    cancel();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFun();
    num_ = num_ * o.num_;
    for (const auto& [f, e] : o.den_) add_factor(f, e);
    if (!den_.empty()) cancel();
    return *this;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return RatFun(denominator(), num_);
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

bool operator==(const RatFun& a, const RatFun& b) {
    if (same_factors(a.den_, b.den_)) return a.num_ == b.num_;
    return a.num_ * b.denominator() == b.num_ * a.denominator();
}

RatFun RatFun::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFun r(1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
}

RatFun RatFun::adams(int k) const {
    RatFun r;
    r.num_ = num_.adams(k);
    for (const auto& [f, e] : den_) r.den_.emplace_back(f.adams(k), e);
    std::sort(r.den_.begin(), r.den_.end(), factor_less);
    return r;
}

std::string RatFun::str() const {
    LaurentPoly n = num_;
    LaurentPoly d = denominator();
    mpz_class s = lcm(n.coeff_denominator_lcm(), d.coeff_denominator_lcm());
    if (d.is_constant() && s == 1) return n.str();
    n *= Rational(s);
    d *= Rational(s);
    return "(" + n.str() + ")/(" + d.str() + ")";
}

}  // namespace pleth
