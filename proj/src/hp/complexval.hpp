/*
 * Copyright 2026 the lavrik authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef LAVRIK_HP_COMPLEXVAL_HPP
#define LAVRIK_HP_COMPLEXVAL_HPP

// Arbitrary-precision complex value on top of hp::Real. log/sqrt/pow take
// principal branches (arg in (-pi, pi]).

#include <string>

#include "hp/real.hpp"

namespace lav::hp {

struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r) : re(r) {}
  Complex(double r, double i) : re(r), im(i) {}
  Complex(long r) : re(r) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  std::string str(long digits = 0) const;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator+(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
Complex operator*(const Complex& a, long b);
Complex operator/(const Complex& a, long b);
Complex operator-(long a, const Complex& b);
Complex operator/(long a, const Complex& b);

Complex conj(const Complex& a);
Real abs(const Complex& a);
Real arg(const Complex& a);          // atan2(im, re), in (-pi, pi]
Complex exp(const Complex& a);
Complex log(const Complex& a);       // principal
Complex sqrt(const Complex& a);      // principal
Complex sin(const Complex& a);
Complex pow(const Complex& a, const Complex& b);  // exp(b log a), principal
Complex mul_i(const Complex& a);     // i*a
Complex from_polar(const Real& mod, const Real& ph);

// max(exp2 of components); scale probe for tolerance tests.
long exp2_scale(const Complex& a);

}  // namespace lav::hp

#endif
