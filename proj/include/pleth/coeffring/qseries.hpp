#pragma once

#include <string>
#include <vector>

#include "pleth/coeffring/ratfun.hpp"

namespace pleth {

// Power series in q truncated after q^N, with RatFun coefficients.
class QSeries {
public:
    QSeries() : QSeries(0) {}
    explicit QSeries(int order);
    QSeries(int order, std::vector<RatFun> coeffs);
    static QSeries constant(int order, const RatFun& c);
    static QSeries q_power(int order, int k, const RatFun& c = RatFun(1));

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const RatFun& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
    RatFun& operator[](int i) { return c_.at(static_cast<size_t>(i)); }
    const std::vector<RatFun>& coeffs() const { return c_; }

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(QSeries a, const RatFun& c);
    friend bool operator==(const QSeries& a, const QSeries& b);

    QSeries inverse() const;  // needs a nonzero constant term
    QSeries truncated(int order) const;
    // Coefficientwise Adams operation t -> t^k combined with q -> q^k.
    QSeries adams(int k) const;
    // Index of the first differing coefficient, or -1.
    static int first_mismatch(const QSeries& a, const QSeries& b);

    // Sum of "(c)*q^n" terms; parses back with parse_series.
    std::string str() const;

private:
    std::vector<RatFun> c_;
};

// exp(sum_{n>=1} adams(f, n)(q^n) / n), truncated at the order of f.
QSeries plethystic_exp(const QSeries& f);
// Inverse of plethystic_exp, determined one order at a time.
QSeries plethystic_log(const QSeries& g);

}  // namespace pleth
