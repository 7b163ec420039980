#include "cfr/rational.hpp"

#include <cstdlib>

namespace cfr {

std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

std::string format_decimal(const Rational& x, int places) {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = x.numerator() < 0;
  const __int128 num = static_cast<__int128>(std::llabs(x.numerator())) * scale;
  const __int128 den = x.denominator();
  // half-up: floor((2 * num + den) / (2 * den))
  const __int128 scaled = (2 * num + den) / (2 * den);
  const auto whole = static_cast<std::int64_t>(scaled / scale);
  const auto frac = static_cast<std::int64_t>(scaled % scale);
  std::string out = negative && scaled != 0 ? "-" : "";
  out += std::to_string(whole);
  if (places > 0) {
    std::string digits = std::to_string(frac);
    out += "." + std::string(places - digits.size(), '0') + digits;
  }
  return out;
}

}  // namespace cfr
