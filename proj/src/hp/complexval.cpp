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
#include "hp/complexval.hpp"

namespace lav::hp {

std::string Complex::str(long digits) const {
  if (im.is_zero()) return re.str(digits);
  std::string i = im.str(digits);
  if (!i.empty() && i[0] == '-') return re.str(digits) + " - " + i.substr(1) + "i";
  return re.str(digits) + " + " + i + "i";
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
Complex operator*(const Real& a, const Complex& b) { return b * a; }
Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
Complex operator-(long a, const Complex& b) { return {a - b.re, -b.im}; }

Complex operator/(long a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {a * b.re / d, (-a) * b.im / d};
}

Complex conj(const Complex& a) { return {a.re, -a.im}; }
Real abs(const Complex& a) { return hypot(a.re, a.im); }
Real arg(const Complex& a) { return atan2(a.im, a.re); }

Complex exp(const Complex& a) {
  Real m = exp(a.re), s, c;
  sin_cos(s, c, a.im);
  return {m * c, m * s};
}

Complex log(const Complex& a) { return {log(abs(a)), arg(a)}; }

Complex sqrt(const Complex& a) {
  if (a.im.is_zero() && a.re.sign() >= 0) return {sqrt(a.re), Real()};
  Real m = sqrt(abs(a)), h = arg(a) / 2, s, c;
  sin_cos(s, c, h);
  return {m * c, m * s};
}

Complex sin(const Complex& a) {
  Real s, c;
  sin_cos(s, c, a.re);
  return {s * cosh(a.im), c * sinh(a.im)};
}

Complex pow(const Complex& a, const Complex& b) { return exp(b * log(a)); }

Complex mul_i(const Complex& a) { return {-a.im, a.re}; }

Complex from_polar(const Real& mod, const Real& ph) {
  Real s, c;
  sin_cos(s, c, ph);
  return {mod * c, mod * s};
}

long exp2_scale(const Complex& a) {
  long er = a.re.exp2(), ei = a.im.exp2();
  return er > ei ? er : ei;
}

}  // namespace lav::hp
