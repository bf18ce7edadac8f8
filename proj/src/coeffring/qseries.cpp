#include "pleth/coeffring/qseries.hpp"

#include <stdexcept>

namespace pleth {

QSeries::QSeries(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    c_.assign(static_cast<size_t>(order) + 1, RatFun());
}

QSeries::QSeries(int order, std::vector<RatFun> coeffs) : QSeries(order) {
    for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
}

QSeries QSeries::constant(int order, const RatFun& c) {
    QSeries s(order);
    s.c_[0] = c;
    return s;
}

QSeries QSeries::q_power(int order, int k, const RatFun& c) {
    QSeries s(order);
    if (k < 0) throw std::invalid_argument("negative power of q");
    if (k <= order) s.c_[static_cast<size_t>(k)] = c;
    return s;
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order(), b.order());
    QSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

QSeries operator*(QSeries a, const RatFun& c) {
    for (auto& x : a.c_) x *= c;
    return a;
}

bool operator==(const QSeries& a, const QSeries& b) { return QSeries::first_mismatch(a, b) < 0; }

int QSeries::first_mismatch(const QSeries& a, const QSeries& b) {
    int n = std::max(a.order(), b.order());
    for (int i = 0; i <= n; ++i) {
        RatFun x = i <= a.order() ? a[i] : RatFun();
        RatFun y = i <= b.order() ? b[i] : RatFun();
        if (!(x == y)) return i;
    }
    return -1;
}

QSeries QSeries::inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("series with zero constant term is not invertible");
    int n = order();
    QSeries r(n);
    RatFun inv0 = c_[0].inverse();
    r[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        RatFun s;
        for (int j = 1; j <= k; ++j)
            if (!c_[static_cast<size_t>(j)].is_zero()) s += (*this)[j] * r[k - j];
        r[k] = -(s * inv0);
    }
    return r;
}

QSeries QSeries::truncated(int order) const {
    QSeries r(order);
    for (int i = 0; i <= order && i <= this->order(); ++i) r[i] = (*this)[i];
    return r;
}

QSeries QSeries::adams(int k) const {
    QSeries r(order());
    for (int i = 0; i * k <= order(); ++i) r[i * k] = (*this)[i].adams(k);
    return r;
}

std::string QSeries::str() const {
    std::string out;
    for (int i = 0; i <= order(); ++i) {
        if ((*this)[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + (*this)[i].str() + ")";
        if (i == 1) out += "*q";
        if (i > 1) out += "*q^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

namespace {

// k * H_k where H = sum_m adams(f, m)(q^m) / m, i.e. sum over j | k of
// j * adams(f_j, k / j), restricted to j in [lo, hi].
RatFun weighted_power_sum(const QSeries& f, int k, int lo, int hi) {
    RatFun s;
    for (int j = lo; j <= hi && j <= k; ++j) {
        if (k % j != 0 || f[j].is_zero()) continue;
        s += f[j].adams(k / j) * RatFun(j);
    }
    return s;
}

}  // namespace

QSeries plethystic_exp(const QSeries& f) {
    if (!f[0].is_zero()) throw std::invalid_argument("plethystic_exp needs a zero constant term");
    int n = f.order();
    std::vector<RatFun> kh(static_cast<size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) kh[static_cast<size_t>(k)] = weighted_power_sum(f, k, 1, k);
    QSeries g(n);
    g[0] = RatFun(1);
    for (int m = 1; m <= n; ++m) {
        RatFun s;
        for (int k = 1; k <= m; ++k) {
            if (kh[static_cast<size_t>(k)].is_zero() || g[m - k].is_zero()) continue;
            s += kh[static_cast<size_t>(k)] * g[m - k];
        }
        g[m] = s * RatFun(Rational(1, m));
    }
    return g;
}

QSeries plethystic_log(const QSeries& g) {
    if (!(g[0] == RatFun(1))) throw std::invalid_argument("plethystic_log needs constant term 1");
    int n = g.order();
    QSeries f(n);
    std::vector<RatFun> kh(static_cast<size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        // Order-m coefficient of Exp(f_1 q + ... + f_{m-1} q^{m-1}). Its lower
        // coefficients agree with g, so the recurrence reuses them.
        RatFun partial = weighted_power_sum(f, m, 1, m - 1);
        RatFun s = partial;
        for (int k = 1; k < m; ++k) {
            if (kh[static_cast<size_t>(k)].is_zero() || g[m - k].is_zero()) continue;
            s += kh[static_cast<size_t>(k)] * g[m - k];
        }
        RatFun lower = s * RatFun(Rational(1, m));
        f[m] = g[m] - lower;
        kh[static_cast<size_t>(m)] = partial + f[m] * RatFun(m);
    }
    return f;
}

}  // namespace pleth
