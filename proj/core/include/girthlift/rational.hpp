#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace girthlift {

using Rational = boost::rational<std::int64_t>;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

// Fixed-point rendering with `digits` places after the point.
std::string to_decimal(const Rational& r, int digits = 6);

}  // namespace girthlift
