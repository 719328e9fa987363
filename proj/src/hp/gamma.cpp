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
#include "hp/gamma.hpp"

#include <cmath>

#include "hp/bernoulli.hpp"
#include "hp/errors.hpp"

namespace lav::hp {

namespace {

bool is_nonpositive_integer(const Complex& z) {
  return z.im.is_zero() && z.re.is_integer() && z.re.sign() <= 0;
}

// Principal log with the upper-half-plane limit on the negative real axis
// (Im := +pi there), so the downward recurrence stays on one branch.
Complex clog_upper(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() < 0) {
    return {log(-z.re), const_pi()};
  }
  return log(z);
}

// Stirling series at w, valid here because the caller shifted w to
// Re w >= max(shift floor, |Im w|), i.e. |arg w| <= pi/4.
Complex stirling_lngamma(const Complex& w, long pw) {
  Complex lw = log(w);
  Complex main = (w - Complex(0.5)) * lw - w + Complex((log(const_pi() * 2L)) / 2L);
  long main_exp = exp2_scale(main);
  Complex r = 1L / w;
  Complex r2 = r * r;
  Complex rp = r;  // r^{2k-1}
  Complex acc;
  long prev_exp = 1L << 40;
  for (long k = 1; k < 4000; ++k) {
    Complex term = rp * (bernoulli_2k(k) / ((2 * k) * (2 * k - 1)));
    long te = exp2_scale(term);
    if (te < main_exp - pw - 6) break;
    if (te > prev_exp) {
      // divergent regime reached before convergence; shift was too small
      throw PrecisionLossError("log_gamma: Stirling series failed to converge");
    }
    prev_exp = te;
    acc = acc + term;
    rp = rp * r2;
  }
  return main + acc;
}

}  // namespace

Complex log_gamma(const Complex& z, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
  if (z.im.is_zero() && z.re.sign() > 0) {
    PrecScope ps(ctx.bits + 32);
    return Complex(lngamma_real(z.re));
  }
  long pw = ctx.bits + 96 + ctx.bits / 8;
  PrecScope ps(pw);
  double im = std::abs(z.im.to_double());
  double target = std::max(0.115 * static_cast<double>(pw) + 16.0, im);
  long n = 0;
  double re = z.re.to_double();
  if (re < target) n = static_cast<long>(std::ceil(target - re));
  Complex log_sum;
  for (long k = 0; k < n; ++k) log_sum = log_sum + clog_upper(z + k);
  Complex w = z + n;
  return stirling_lngamma(w, pw) - log_sum;
}

Complex reciprocal_gamma(const Complex& z, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(z)) return Complex(0.0);
  PrecScope ps(ctx.bits + 48);
  if (z.re >= 0.5) return exp(-log_gamma(z, ctx));
  // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi
  Complex s = sin(Complex(const_pi()) * z);
  return s * exp(log_gamma(1L - z, ctx)) / const_pi();
}

namespace {

Complex gamma_upper_series(const Complex& a, const Complex& z, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(a))
    throw PoleError("gamma_upper: Gamma(a) pole on the series route");
  double zm = abs(z).to_double();
  long guard = static_cast<long>(std::ceil(zm * 1.4426950408889634)) + 48;
  for (int attempt = 0; attempt < 4; ++attempt) {
    long pw = ctx.bits + guard;
    PrecScope ps(pw);
    // gamma(a,z) = z^a e^{-z} sum_k z^k / (a (a+1) ... (a+k))
    Complex t = 1L / a;
    Complex sum = t;
    long k = 1;
    while (true) {
      t = t * z / (a + k);
      sum = sum + t;
      if (exp2_scale(t) < exp2_scale(sum) - pw + 4) break;
      if (++k > ctx.max_terms) throw ConvergenceError("gamma_upper: series max_terms exceeded");
    }
    Complex lower = exp(a * log(z) - z) * sum;
    Complex whole = exp(log_gamma(a, ctx.with_bits(pw)));
    Complex res = whole - lower;
    long big = exp2_scale(whole) > exp2_scale(lower) ? exp2_scale(whole) : exp2_scale(lower);
    long lost = big - exp2_scale(res);
    if (lost <= guard - 40) return res;
    guard = lost + 64;  // cancellation deeper than the |z| model; retry
  }
  throw ConvergenceError("gamma_upper: cancellation guard retries exhausted");
}

Complex gamma_upper_cf_impl(const Complex& a, const Complex& z, const PrecisionContext& ctx) {
  long pw = ctx.bits + 48;
  PrecScope ps(pw);
  // Gamma(a,z) = e^{-z} z^a / (z+1-a - 1(1-a)/(z+3-a - 2(2-a)/(z+5-a - ...)))
  Real tiny = pow2(-2 * pw - 64);
  auto nudge = [&](Complex& c) {
    if (abs(c) < tiny) c = Complex(tiny);
  };
  Complex b0 = z + 1L - a;
  nudge(b0);
  Complex f = b0, c = b0, d;
  for (long j = 1; j <= ctx.max_terms; ++j) {
    Complex aj = Complex(static_cast<double>(-j)) * (Complex(static_cast<long>(j)) - a);
    Complex bj = b0 + 2 * j;
    d = bj + aj * d;
    nudge(d);
    d = 1L / d;
    c = bj + aj / c;
    nudge(c);
    Complex delta = c * d;
    f = f * delta;
    if (abs(delta - 1L) < pow2(-pw + 4)) {
      return exp(a * log(z) - z) / f;
    }
  }
  throw ConvergenceError("gamma_upper: continued fraction max_terms exceeded");
}

}  // namespace

Complex gamma_upper_cf(const Complex& a, const Complex& z, const PrecisionContext& ctx) {
  if (!(z.re > 0.0)) throw DomainError("gamma_upper: requires Re z > 0");
  return gamma_upper_cf_impl(a, z, ctx);
}

Complex gamma_upper(const Complex& a, const Complex& z, const PrecisionContext& ctx) {
  if (!(z.re > 0.0)) throw DomainError("gamma_upper: requires Re z > 0");
  if (abs(z) <= abs(a) + 4L) return gamma_upper_series(a, z, ctx);
  return gamma_upper_cf_impl(a, z, ctx);
}

}  // namespace lav::hp
