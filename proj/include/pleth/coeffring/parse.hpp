#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pleth/coeffring/qseries.hpp"

namespace pleth {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Expression syntax shared by rational functions and series:
//   integers, variables t1..t8 (and q for series), + - * / ^, parentheses.
//   Exponents are integers and may be negative, e.g. "t1^-2".
//   '#' starts a comment that runs to the end of the line.
// A negative nvars means "infer from the largest variable index used".
RatFun parse_ratfun(std::string_view text, int nvars = -1);

// Expands the expression as a power series in q truncated at `order`.
// Division requires a divisor with nonzero q^0 coefficient.
QSeries parse_series(std::string_view text, int order, int nvars = -1);

}  // namespace pleth
