#include "girthlift/rational.hpp"

#include <cstdlib>

namespace girthlift {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal(const Rational& r, int digits) {
  // Long division, one extra digit for round-half-up. Denominators here are
  // small distance counts, so rem * 10 stays far from overflow.
  const bool negative = r < Rational(0);
  const auto num = static_cast<std::uint64_t>(std::llabs(r.numerator()));
  const auto den = static_cast<std::uint64_t>(r.denominator());
  std::uint64_t whole = num / den;
  std::uint64_t rem = num % den;
  std::string frac;
  for (int i = 0; i <= digits; ++i) {
    rem *= 10;
    frac.push_back(static_cast<char>('0' + rem / den));
    rem %= den;
  }
  const bool round_up = frac.back() >= '5';
  frac.pop_back();
  if (round_up) {
    int i = digits - 1;
    for (; i >= 0 && frac[static_cast<std::size_t>(i)] == '9'; --i) frac[static_cast<std::size_t>(i)] = '0';
    if (i >= 0) ++frac[static_cast<std::size_t>(i)];
    else ++whole;
  }
  std::string out = negative ? "-" : "";
  out += std::to_string(whole);
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace girthlift
