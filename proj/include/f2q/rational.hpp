#pragma once

#include <boost/rational.hpp>
#include <string>

namespace f2q {

using Rational = boost::rational<long long>;

inline std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double rational_real(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace f2q
