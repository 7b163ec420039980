#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace cfr {

/// Exact rational, always kept reduced with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// Decimal rendering with `places` fractional digits, rounded half away
/// from zero.
std::string format_decimal(const Rational& x, int places = 2);

}  // namespace cfr
