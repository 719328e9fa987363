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
#include "core/identities.hpp"

#include <cmath>

#include "core/zeta.hpp"
#include "hp/errors.hpp"
#include "hp/gamma.hpp"
#include "hp/quadrature.hpp"

namespace lav::core {

using hp::PrecScope;

namespace {

// pi^{-s/2} Gamma(s/2) zeta(s)
Complex completed_zeta(const Complex& s, const PrecisionContext& ctx) {
  Complex lg = hp::log_gamma(s / 2L, ctx);
  return hp::exp(lg - s / 2L * hp::log(hp::const_pi())) * zeta_oracle(s, ctx);
}

}  // namespace

Real verify_decomposition(const EvalPoint& p, const PrecisionContext& ctx) {
  if (p.s.is_zero()) throw PoleError("verify_decomposition: s = 0");
  if (p.s.im.is_zero() && p.s.re == Real(1.0))
    throw PoleError("verify_decomposition: s = 1");
  if (!(p.tau.re > 0.0)) throw DomainError("verify_decomposition: Re tau > 0 required");
  long pw = ctx.bits + 32;
  PrecScope ps(pw);
  PrecisionContext cw = ctx.with_bits(pw);
  Complex lhs = completed_zeta(p.s, cw);
  Complex lam_s = lambda_value({p.s, p.tau}, ctx);
  Complex lam_dual = lambda_value({1L - p.s, 1L / p.tau}, ctx);
  Real num = hp::abs(lhs - (lam_s + lam_dual));
  Real den = hp::abs(lhs);
  Real lam_mag = hp::abs(lam_s);
  if (den * 100L < lam_mag) den = hp::max(den, lam_mag);
  return num / den;
}

Real mellin_barnes_check(const EvalPoint& p, const Real& c, const PrecisionContext& ctx) {
  if (p.s.is_zero()) throw PoleError("mellin_barnes_check: s = 0");
  if (!(c > hp::max(p.s.re, Real(1.0))))
    throw DomainError("mellin_barnes_check: requires c > max(Re s, 1)");
  if (!(p.tau.re > 0.0)) throw DomainError("mellin_barnes_check: Re tau > 0 required");
  long pw = ctx.bits + 24;
  PrecScope ps(pw);
  PrecisionContext cw = ctx.with_bits(pw);

  Complex log_tau = hp::log(p.tau);
  Real lnpi = hp::log(hp::const_pi());
  Complex lam = lambda_value(p, ctx);
  Complex ts2 = hp::exp(p.s / 2L * log_tau);
  Complex target = lam + ts2 / p.s;

  // integrand along z = c + iy
  auto h = [&](const Real& y) {
    Complex z{c, y};
    Complex lg = hp::log_gamma(z / 2L, cw);
    Complex w = hp::exp(lg - z / 2L * Complex(lnpi) - z / 2L * log_tau);
    return w * zeta_oracle(z, cw) / (z - p.s);
  };

  double t_center = p.s.im.to_double();
  double T = std::max(48.0, 4.0 / M_PI * (static_cast<double>(pw) * M_LN2 + 24.0));
  T = std::max(T, std::abs(t_center) + 40.0);
  Real scale = hp::max(hp::abs(target), hp::abs(lam));
  Real abs_tol = ctx.eps * scale * hp::pow2(-4);

  for (int round = 0;; ++round) {
    if (round >= 8)
      throw ConvergenceError("mellin_barnes_check: insufficient T within refinement cap");
    // decay e^{-pi|y|/4}: verify the actual endpoint magnitudes
    Real edge = hp::max(hp::abs(h(Real(T))), hp::abs(h(Real(-T))));
    Real tail = edge * Real(8.0 / M_PI);
    if (tail < abs_tol) break;
    T *= 1.3;
  }

  auto rate = [&](double y) {
    double r = 0.8 + 0.5 * std::log(2.0 + std::abs(y) / 2.0) + 0.5 * std::abs(log_tau.im.to_double());
    r += 2.0 / (0.3 + std::abs(y - t_center));
    return std::min(r, 8.0);
  };
  std::vector<Real> bounds = hp::rate_panels(-T, T, rate, hp::quad_phase_budget(hp::quad_order(pw), pw));
  hp::QuadResult q = hp::integrate_panels(h, bounds, abs_tol, hp::quad_order(pw), pw, ctx.max_terms);

  // (1/(2 pi i)) dz = dy / (2 pi)
  Complex integral = ts2 * q.value / (2L * hp::const_pi());
  return hp::abs(target - integral);
}

}  // namespace lav::core
