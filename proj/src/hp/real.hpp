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
#ifndef LAVRIK_HP_REAL_HPP
#define LAVRIK_HP_REAL_HPP

// RAII wrapper around mpfr_t. Every arithmetic result is produced at the
// thread-local working precision (see PrecScope), so formula code stays
// free of explicit precision plumbing. MPFR's exponent range (~2^62) is
// wide enough that values like e^{-pi t/4} at t=1000 never underflow.

#include <mpfr.h>

#include <string>
#include <utility>

namespace lav::hp {

// Thread-local working precision, in bits.
long working_prec();
void set_working_prec(long bits);

class PrecScope {
 public:
  explicit PrecScope(long bits) : saved_(working_prec()) { set_working_prec(bits); }
  ~PrecScope() { set_working_prec(saved_); }
  PrecScope(const PrecScope&) = delete;
  PrecScope& operator=(const PrecScope&) = delete;

 private:
  long saved_;
};

class Real {
 public:
  Real() { mpfr_init2(v_, working_prec()); mpfr_set_zero(v_, 1); }
  Real(double x) { mpfr_init2(v_, working_prec()); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(long x) { mpfr_init2(v_, working_prec()); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x) { mpfr_init2(v_, working_prec()); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  // Parse a decimal string at `prec` bits (0 = working precision).
  static Real parse(const std::string& s, long prec = 0);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  long prec() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Exponent e with |x| in [2^{e-1}, 2^e); very negative sentinel for 0.
  long exp2() const { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Decimal string; digits = 0 emits full round-trip precision.
  std::string str(long digits = 0) const;

  friend void swap(Real& a, Real& b) noexcept { mpfr_swap(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

// --- arithmetic (results at working precision) ---
Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
inline bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }
inline bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) <= 0; }
inline bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) >= 0; }

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real expm1(const Real& a);
Real log(const Real& a);
Real log1p(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
void sin_cos(Real& s, Real& c, const Real& a);
Real tan(const Real& a);
Real atan(const Real& a);
Real atan2(const Real& y, const Real& x);
Real asin(const Real& a);
Real sinh(const Real& a);
Real cosh(const Real& a);
Real pow(const Real& a, const Real& b);
Real pow_si(const Real& a, long n);
Real hypot(const Real& a, const Real& b);
Real floor(const Real& a);
Real ceil(const Real& a);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real ldexp(const Real& a, long e);  // a * 2^e, exact
Real lngamma_real(const Real& a);   // mpfr_lngamma, a > 0

Real const_pi();
Real const_ln2();
Real const_euler();

// 2^e at minimal precision (exact).
Real pow2(long e);

}  // namespace lav::hp

#endif
