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
#include "hp/real.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace lav::hp {

namespace {
thread_local long g_working_prec = 128;
}

long working_prec() { return g_working_prec; }

void set_working_prec(long bits) {
  if (bits < MPFR_PREC_MIN) bits = MPFR_PREC_MIN;
  g_working_prec = bits;
}

Real Real::parse(const std::string& s, long prec) {
  if (prec <= 0) prec = working_prec();
  PrecScope ps(prec);
  Real r;
  if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("Real::parse: bad decimal literal '" + s + "'");
  return r;
}

std::string Real::str(long digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  if (is_zero()) return "0";
  if (digits <= 0) digits = static_cast<long>(prec() * 0.30103) + 3;
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  bool neg = !m.empty() && m[0] == '-';
  std::string d = neg ? m.substr(1) : m;
  while (d.size() > 1 && d.back() == '0') d.pop_back();
  // scientific form: 0.d1d2... * 10^e  ->  d1.d2...e(e-1)
  std::string out = d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  long ee = static_cast<long>(e) - 1;
  if (ee != 0) out += "e" + std::to_string(ee);
  return neg ? "-" + out : out;
}

#define LAV_BINOP(name, fn)                              \
  Real name(const Real& a, const Real& b) {              \
    Real r;                                              \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);            \
    return r;                                            \
  }

LAV_BINOP(operator+, mpfr_add)
LAV_BINOP(operator-, mpfr_sub)
LAV_BINOP(operator*, mpfr_mul)
LAV_BINOP(operator/, mpfr_div)
LAV_BINOP(atan2, mpfr_atan2)
LAV_BINOP(pow, mpfr_pow)
LAV_BINOP(hypot, mpfr_hypot)
LAV_BINOP(min, mpfr_min)
LAV_BINOP(max, mpfr_max)
#undef LAV_BINOP

Real operator-(const Real& a) {
  Real r;
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, long b) { Real r; mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator-(const Real& a, long b) { Real r; mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator*(const Real& a, long b) { Real r; mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator/(const Real& a, long b) { Real r; mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) { Real r; mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN); return r; }
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) { Real r; mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN); return r; }

#define LAV_UNOP(name, fn)                    \
  Real name(const Real& a) {                  \
    Real r;                                   \
    fn(r.raw(), a.raw(), MPFR_RNDN);          \
    return r;                                 \
  }

LAV_UNOP(abs, mpfr_abs)
LAV_UNOP(sqrt, mpfr_sqrt)
LAV_UNOP(exp, mpfr_exp)
LAV_UNOP(expm1, mpfr_expm1)
LAV_UNOP(log, mpfr_log)
LAV_UNOP(log1p, mpfr_log1p)
LAV_UNOP(sin, mpfr_sin)
LAV_UNOP(cos, mpfr_cos)
LAV_UNOP(tan, mpfr_tan)
LAV_UNOP(atan, mpfr_atan)
LAV_UNOP(asin, mpfr_asin)
LAV_UNOP(sinh, mpfr_sinh)
LAV_UNOP(cosh, mpfr_cosh)
#undef LAV_UNOP

Real floor(const Real& a) {
  Real r;
  mpfr_floor(r.raw(), a.raw());
  return r;
}
Real ceil(const Real& a) {
  Real r;
  mpfr_ceil(r.raw(), a.raw());
  return r;
}

void sin_cos(Real& s, Real& c, const Real& a) {
  Real rs, rc;
  mpfr_sin_cos(rs.raw(), rc.raw(), a.raw(), MPFR_RNDN);
  s = std::move(rs);
  c = std::move(rc);
}

Real pow_si(const Real& a, long n) {
  Real r;
  mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& a, long e) {
  Real r;
  mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

Real lngamma_real(const Real& a) {
  Real r;
  mpfr_lngamma(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real const_pi() { Real r; mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }
Real const_ln2() { Real r; mpfr_const_log2(r.raw(), MPFR_RNDN); return r; }
Real const_euler() { Real r; mpfr_const_euler(r.raw(), MPFR_RNDN); return r; }

Real pow2(long e) {
  PrecScope ps(MPFR_PREC_MIN);
  Real r(1L);
  return ldexp(r, e);
}

}  // namespace lav::hp
