// Copyright 2026 The spanopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPANOPT_RATIONAL_HPP_
#define SPANOPT_RATIONAL_HPP_

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spanopt {

using Rational = boost::multiprecision::cpp_rational;

// Exact value of a finite double.
inline Rational ToRational(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  if (v == 0.0) return Rational(0);
  int exp = 0;
  const double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rational r(scaled);
  exp -= 53;
  const boost::multiprecision::cpp_int two = 2;
  if (exp > 0) {
    r *= Rational(boost::multiprecision::pow(two, exp));
  } else if (exp < 0) {
    r /= Rational(boost::multiprecision::pow(two, -exp));
  }
  return r;
}

inline Rational PowerOfTwo(int e) {
  const boost::multiprecision::cpp_int two = 2;
  if (e >= 0) return Rational(boost::multiprecision::pow(two, e));
  return Rational(1) / Rational(boost::multiprecision::pow(two, -e));
}

inline std::string ToString(const Rational& r) { return r.str(); }

}  // namespace spanopt

#endif  // SPANOPT_RATIONAL_HPP_
