#include "pleth/coeffring/random.hpp"

namespace pleth {

LaurentPoly random_laurent(Rng& rng, int nvars, int terms, int bound) {
    LaurentPoly p(nvars);
    int k = rng.range(1, terms);
    for (int i = 0; i < k; ++i) {
        Exponent e;
        for (int v = 0; v < nvars; ++v) e[v] = rng.range(-bound, bound);
        int c = rng.range(-3, 3);
        if (c != 0) p += LaurentPoly::monomial(nvars, e, c);
    }
    return p;
}

RatFun random_ratfun(Rng& rng, int nvars) {
    RatFun f(random_laurent(rng, nvars, 3, 2));
    int nf = rng.range(0, 2);
    for (int i = 0; i < nf; ++i) {
        Exponent e;
        bool nonzero = false;
        for (int v = 0; v < nvars; ++v) {
            e[v] = rng.range(0, 2);
            nonzero = nonzero || e[v] != 0;
        }
        if (!nonzero) e[0] = 1;
        f /= RatFun(LaurentPoly(nvars, 1) - LaurentPoly::monomial(nvars, e));
    }
    return f;
}

QSeries random_series(Rng& rng, int nvars, int order, bool denominators) {
    QSeries s(order);
    for (int n = 1; n <= order; ++n)
        if (rng.chance(2, 3)) s[n] = denominators ? random_ratfun(rng, nvars) : RatFun(random_laurent(rng, nvars, 3, 2));
    return s;
}

}  // namespace pleth
