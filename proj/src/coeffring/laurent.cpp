#include "pleth/coeffring/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pleth {

Exponent Exponent::operator+(const Exponent& o) const {
    Exponent r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = (*this)[i] + o[i];
    return r;
}

Exponent Exponent::operator-(const Exponent& o) const {
    Exponent r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = (*this)[i] - o[i];
    return r;
}

Exponent Exponent::scaled(int k) const {
    Exponent r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = (*this)[i] * k;
    return r;
}

bool Exponent::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

Exponent Exponent::unit(int var, int32_t power) {
    if (var < 0 || var >= kMaxVars) throw std::out_of_range("variable index out of range");
    Exponent r;
    r[var] = power;
    return r;
}

Exponent Exponent::from(const std::vector<int>& v) {
    if (v.size() > static_cast<size_t>(kMaxVars)) throw std::out_of_range("too many variables");
    Exponent r;
    for (size_t i = 0; i < v.size(); ++i) r.e[i] = v[i];
    return r;
}

std::vector<int> Exponent::to_vector(int nvars) const {
    return std::vector<int>(e.begin(), e.begin() + nvars);
}

size_t ExponentHash::operator()(const Exponent& x) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int32_t v : x.e) {
        h ^= static_cast<size_t>(static_cast<uint32_t>(v));
        h *= 1099511628211ull;
    }
    return h;
}

LaurentPoly::LaurentPoly(int nvars, Rational c) : nvars_(nvars) {
    if (!c.is_zero()) terms_.emplace_back(Exponent{}, std::move(c));
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exponent& e, Rational c) {
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(e, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int var) {
    if (var >= nvars) throw std::out_of_range("variable index exceeds variable count");
    return monomial(nvars, Exponent::unit(var), 1);
}

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<Term> terms) {
    LaurentPoly p(nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
        } else {
            if (!out.empty() && out.back().second.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    terms_ = std::move(out);
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero());
}

Rational LaurentPoly::constant_term() const { return coeff(Exponent{}); }

Rational LaurentPoly::coeff(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

namespace {

template <typename Op>
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, Op op) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, op(Rational(0), b[j].second));
            ++j;
        } else {
            Rational c = op(a[i].second, b[j].second);
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    nvars_ = std::max(nvars_, o.nvars_);
    terms_ = merge_terms(terms_, o.terms_, [](const Rational& x, const Rational& y) { return x + y; });
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    nvars_ = std::max(nvars_, o.nvars_);
    terms_ = merge_terms(terms_, o.terms_, [](const Rational& x, const Rational& y) { return x - y; });
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(std::max(a.nvars_, b.nvars_));
    if (a.is_zero() || b.is_zero()) return r;
    if (a.size() == 1 || b.size() == 1) {
        const LaurentPoly& mono = a.size() == 1 ? a : b;
        const LaurentPoly& other = a.size() == 1 ? b : a;
        const auto& [e, c] = mono.terms_[0];
        r.terms_.reserve(other.size());
        for (const auto& t : other.terms_) r.terms_.emplace_back(t.first + e, t.second * c);
        return r;  // shifting preserves the lexicographic order
    }
    r.terms_.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) r.terms_.emplace_back(x.first + y.first, x.second * y.second);
    r.normalize();
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result(nvars_, 1);
    LaurentPoly base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first = t.first + e;
    return r;
}

LaurentPoly LaurentPoly::adams(int k) const {
    if (k < 1) throw std::invalid_argument("adams substitution needs k >= 1");
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first = t.first.scaled(k);
    return r;  // scaling by k > 0 preserves lexicographic order
}

Exponent LaurentPoly::min_exponent() const {
    if (terms_.empty()) return {};
    Exponent m = terms_[0].first;
    for (const auto& t : terms_)
        for (int i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], t.first[i]);
    return m;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    int nv = std::max(nvars_, d.nvars_);
    if (is_zero()) return LaurentPoly(nv);
    Exponent mp = min_exponent(), md = d.min_exponent();
    LaurentPoly rem = shifted(Exponent{} - mp);
    LaurentPoly den = d.shifted(Exponent{} - md);
    const auto& [ed, cd] = den.leading();
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const auto& [er, cr] = rem.leading();
        Exponent diff = er - ed;
        for (int i = 0; i < kMaxVars; ++i)
            if (diff[i] < 0) return std::nullopt;
        Rational c = cr / cd;
        quot.emplace_back(diff, c);
        rem -= den * LaurentPoly::monomial(nv, diff, c);
    }
    LaurentPoly q = from_terms(nv, std::move(quot));
    return q.shifted(mp - md);
}

mpz_class LaurentPoly::coeff_denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& t : terms_) l = lcm(l, t.second.denominator());
    return l;
}

LaurentPoly LaurentPoly::with_nvars(int nvars) const {
    LaurentPoly r = *this;
    r.nvars_ = nvars;
    return r;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& point) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < kMaxVars; ++i) {
            if (e[i] == 0) continue;
            if (static_cast<size_t>(i) >= point.size()) throw std::out_of_range("evaluation point too short");
            const Rational& x = point[static_cast<size_t>(i)];
            Rational base = e[i] > 0 ? x : Rational(1) / x;
            for (int k = 0; k < std::abs(e[i]); ++k) v *= base;
        }
        sum += v;
    }
    return sum;
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first < b.terms_[i].first ? -1 : 1;
        auto c = a.terms_[i].second <=> b.terms_[i].second;
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

namespace {

std::string monomial_str(const Exponent& e) {
    std::string s;
    for (int i = 0; i < kMaxVars; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 't' + std::to_string(i + 1);
        if (e[i] != 1) s += '^' + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        std::string m = monomial_str(e);
        if (m.empty()) {
            os << a.str();
        } else if (a.is_one()) {
            os << m;
        } else {
            os << a.str() << '*' << m;
        }
    }
    return os.str();
}

}  // namespace pleth
