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
#include "theta/theta.hpp"

#include "hp/errors.hpp"

namespace lav::theta {

using hp::PrecScope;

namespace {

struct PsiSum {
  Complex value;
  long terms = 0;
  Real tail;  // bound on |sum_{n>N}|, no factor 2
};

// Direct summation of sum_{n>=1} e^{-pi n^2 x}. Caller guarantees Re x > 0.
PsiSum psi_direct(const Complex& x, const PrecisionContext& ctx) {
  PrecScope ps(hp::working_prec() + 16);
  Real pi = hp::const_pi();
  Complex q1 = hp::exp(Complex(-pi) * x);           // e^{-pi x}
  Complex q2 = q1 * q1;                             // e^{-2 pi x}
  Real em = hp::exp(-pi * x.re);                    // |q1|
  Real geom = 1 / (1 - em);                         // 1/(1 - e^{-pi Re x})

  Complex term = q1;       // n = 1
  Complex ratio = q1 * q2; // term_{n+1} = term_n * e^{-pi(2n+1)x}
  Real mag = em;           // |term|
  Real mag_ratio = em * em * em;
  Complex sum = term;
  long n = 1;
  while (true) {
    // tail over n > N is bounded by |e^{-pi (N+1)^2 Re x}| * geom
    Real next_mag = mag * mag_ratio;
    if (next_mag * geom < ctx.eps * hp::abs(sum) * hp::pow2(-4)) {
      return {sum, n, next_mag * geom};
    }
    if (n >= ctx.max_terms)
      throw ConvergenceError("theta: max_terms exceeded (Re z too small?)");
    term = term * ratio;
    ratio = ratio * q2;
    mag = next_mag;
    mag_ratio = mag_ratio * em * em;
    sum = sum + term;
    ++n;
  }
}

ThetaValue theta_direct(const Complex& z, const PrecisionContext& ctx) {
  PsiSum p = psi_direct(z, ctx);
  ThetaValue tv;
  tv.value = p.value * 2L + 1L;
  tv.terms_used = p.terms;
  tv.tail_bound = p.tail * 2L;
  return tv;
}

}  // namespace

ThetaValue theta(const Complex& z, const PrecisionContext& ctx) {
  if (!(z.re > 0.0)) throw DomainError("theta: requires Re z > 0");
  // Summation cost grows like 1/sqrt(Re z); moving to 1/z is worth it
  // whenever that improves the real part.
  Real inv_re = z.re / (z.re * z.re + z.im * z.im);
  if (z.re < 0.1 && inv_re > z.re * 2L) {
    Complex inv = 1L / z;
    ThetaValue inner = theta_direct(inv, ctx);
    Complex root = hp::sqrt(z);  // theta(z) = theta(1/z) / sqrt(z)
    ThetaValue tv;
    tv.value = inner.value / root;
    tv.terms_used = inner.terms_used;
    tv.tail_bound = inner.tail_bound / hp::abs(root);
    return tv;
  }
  return theta_direct(z, ctx);
}

Complex psi(const Complex& x, const PrecisionContext& ctx) {
  if (!(x.re > 0.0)) throw DomainError("psi: requires Re x > 0");
  Real inv_re = x.re / (x.re * x.re + x.im * x.im);
  if (x.re < 0.1 && inv_re > x.re * 2L) {
    ThetaValue tv = theta(x, ctx);
    return (tv.value - 1L) / 2L;
  }
  return psi_direct(x, ctx).value;
}

Real theta_functional_check(const Complex& z, const PrecisionContext& ctx) {
  if (!(z.re > 0.0)) throw DomainError("theta_functional_check: requires Re z > 0");
  Complex inv = 1L / z;
  if (!(inv.re > 0.0)) throw DomainError("theta_functional_check: requires Re 1/z > 0");
  ThetaValue lhs = theta_direct(inv, ctx);
  ThetaValue rhs = theta_direct(z, ctx);
  return hp::abs(lhs.value - hp::sqrt(z) * rhs.value);
}

}  // namespace lav::theta
