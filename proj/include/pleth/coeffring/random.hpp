#pragma once

#include "pleth/coeffring/qseries.hpp"
#include "pleth/coeffring/rng.hpp"

namespace pleth {

// Random Laurent polynomial with at most `terms` terms, exponents in
// [-bound, bound] and small integer coefficients.
LaurentPoly random_laurent(Rng& rng, int nvars, int terms, int bound);
// Random ratio of a polynomial by a product of factors 1 - t^e.
RatFun random_ratfun(Rng& rng, int nvars);
// Series with zero constant term and random coefficients up to `order`:
// Laurent polynomials, or rational functions when `denominators` is set.
QSeries random_series(Rng& rng, int nvars, int order, bool denominators = false);

}  // namespace pleth
