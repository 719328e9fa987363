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
#include "core/lambda.hpp"

#include <cmath>

#include "hp/errors.hpp"
#include "hp/gamma.hpp"
#include "hp/quadrature.hpp"
#include "theta/theta.hpp"

namespace lav::core {

using hp::PrecScope;
using hp::QuadResult;

namespace {

void require_not_pole(const Complex& s) {
  if (s.is_zero()) throw PoleError("Lambda: simple pole at s = 0");
}

bool is_trivial_zero(const Complex& s) {
  if (!s.im.is_zero() || !s.re.is_integer() || s.re.sign() >= 0) return false;
  long n = s.re.to_long();
  return n % 2 == 0;  // s = -2, -4, ...
}

// integral_0^inf e^{u s/2} psi(tau e^u) du, adaptive, with certification.
QuadResult lambda_integral(const Complex& s, const Complex& tau, const PrecisionContext& ctx,
                           bool derivative_weight) {
  double osc = std::abs(s.im.to_double()) / 2.0;
  double growth = s.re.to_double() / 2.0;
  double decay = M_PI * tau.re.to_double();
  auto g = [&](const Real& u) {
    Complex arg{u * s.re / 2L, u * s.im / 2L};
    Complex v = hp::exp(arg) * theta::psi(tau * hp::exp(u), ctx);
    if (derivative_weight) v = v * (u / 2L);
    return v;
  };
  return hp::log_domain_integral(g, Real(0.0), osc, growth, decay, ctx);
}

long scan_guard(double t_abs_max) {
  return 12 + static_cast<long>(std::ceil(std::log2(2.0 + t_abs_max)));
}

}  // namespace

LambdaValue lambda_completed(const EvalPoint& p, const PrecisionContext& ctx) {
  require_not_pole(p.s);
  if (!(p.tau.re > 0.0)) throw DomainError("Lambda: requires Re tau > 0");
  long pw = ctx.bits + 16 + scan_guard(std::abs(p.s.im.to_double()));
  PrecScope ps(pw);
  PrecisionContext cw = ctx.with_bits(pw);
  QuadResult I = lambda_integral(p.s, p.tau, cw, false);
  Complex core = I.value - 1L / p.s;
  // at a zero of Lambda the relative scale collapses; certify against the
  // natural scale of the two combined terms there
  Real scale = hp::max(hp::abs(core),
                       hp::max(hp::abs(I.value), 1L / hp::abs(p.s)) * hp::pow2(-24));
  if (!(I.err_abs <= ctx.eps * scale * 8L))
    throw PrecisionLossError("lambda_completed: integral not certifiable at ctx.bits");
  Complex value = hp::exp(p.s / 2L * hp::log(p.tau)) * core;
  LambdaValue lv;
  lv.value = value;
  lv.log_modulus = hp::log(hp::abs(value));
  lv.phase = hp::arg(value);
  lv.route = Route::quadrature;
  return lv;
}

Complex lambda_series_value(const EvalPoint& p, const PrecisionContext& ctx) {
  require_not_pole(p.s);
  if (!(p.tau.re > 0.0)) throw DomainError("Lambda: requires Re tau > 0");
  long pw = ctx.bits + 48;
  PrecScope ps(pw);
  PrecisionContext cw = ctx.with_bits(pw);
  const Complex& s = p.s;
  Complex a = s / 2L;
  Real pi = hp::const_pi();
  Real lnpi = hp::log(pi);
  // distance of a to the nearest non-positive integer decides the
  // incomplete-gamma route (the Gamma(a) path is unusable near its poles)
  double are = a.re.to_double(), aim = std::abs(a.im.to_double());
  double dist = std::hypot(are - std::round(std::min(are, 0.0)), aim);
  if (are > 0.25) dist = 1.0;
  bool force_cf = dist < 0.25;

  Complex acc = -hp::exp(s / 2L * hp::log(p.tau)) / s;
  long quiet = 0;
  for (long n = 1;; ++n) {
    Complex z = pi * static_cast<double>(n) * static_cast<double>(n) * p.tau;
    Complex inc = force_cf ? hp::gamma_upper_cf(a, z, cw) : hp::gamma_upper(a, z, cw);
    Complex term = inc * hp::exp(Complex(-lnpi / 2L) * s - s * hp::log(Real(static_cast<double>(n))));
    acc = acc + term;
    if (hp::exp2_scale(term) < hp::exp2_scale(acc) - pw + 8) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
    if (n > 64 && n * n > ctx.max_terms)
      throw ConvergenceError("lambda_series: max_terms exceeded");
  }
  return acc;
}

Complex l_function_series(const EvalPoint& p, const PrecisionContext& ctx) {
  require_not_pole(p.s);
  if (is_trivial_zero(p.s)) return Complex(0.0);
  // L = Lambda * pi^{s/2} / Gamma(s/2); assembled from the series form
  long pw = ctx.bits + 48;
  PrecScope ps(pw);
  Complex lam = lambda_series_value(p, ctx);
  Complex a = p.s / 2L;
  Complex lg = hp::log_gamma(a, ctx.with_bits(pw));
  return lam * hp::exp(a * hp::log(hp::const_pi()) - lg);
}

Complex lambda_value(const EvalPoint& p, const PrecisionContext& ctx) {
  double t = std::abs(p.s.im.to_double());
  if (t <= 50.0) return lambda_series_value(p, ctx);
  return lambda_completed(p, ctx).value;
}

Complex l_function_value(const EvalPoint& p, const PrecisionContext& ctx) {
  double t = std::abs(p.s.im.to_double());
  if (t <= 50.0) return l_function_series(p, ctx);
  long pw = ctx.bits + 48;
  PrecScope ps(pw);
  Complex lam = lambda_completed(p, ctx).value;
  Complex a = p.s / 2L;
  // near the Gamma poles divide via the entire reciprocal instead
  if (a.re < 0.5) {
    return lam * hp::exp(a * hp::log(hp::const_pi())) *
           hp::reciprocal_gamma(a, ctx.with_bits(pw));
  }
  return lam * hp::exp(a * hp::log(hp::const_pi()) - hp::log_gamma(a, ctx.with_bits(pw)));
}

Complex lambda_derivative(const EvalPoint& p, const PrecisionContext& ctx) {
  require_not_pole(p.s);
  long pw = ctx.bits + 16 + scan_guard(std::abs(p.s.im.to_double()));
  PrecScope ps(pw);
  PrecisionContext cw = ctx.with_bits(pw);
  QuadResult I = lambda_integral(p.s, p.tau, cw, false);
  QuadResult Id = lambda_integral(p.s, p.tau, cw, true);
  Complex log_tau = hp::log(p.tau);
  Complex ts2 = hp::exp(p.s / 2L * log_tau);
  Complex lambda = ts2 * (I.value - 1L / p.s);
  return log_tau / 2L * lambda + ts2 * (1L / (p.s * p.s) + Id.value);
}

// --- LambdaPlan ---

LambdaPlan LambdaPlan::build(const Complex& tau, double sigma_min, double sigma_max,
                             double t_abs_max, const PrecisionContext& ctx) {
  if (!(tau.re > 0.0)) throw DomainError("LambdaPlan: requires Re tau > 0");
  LambdaPlan plan;
  plan.tau_ = tau;
  plan.sigma_min_ = sigma_min;
  plan.sigma_max_ = sigma_max;
  plan.t_max_ = t_abs_max;
  plan.pw_ = ctx.bits + 16 + scan_guard(t_abs_max);
  PrecScope ps(plan.pw_);
  plan.log_tau_ = hp::log(tau);
  PrecisionContext cw = ctx.with_bits(plan.pw_);

  long m = hp::quad_order(plan.pw_);
  double budget = hp::quad_phase_budget(m, plan.pw_) * 0.7;
  double osc = t_abs_max / 2.0;
  double growth = std::max(1.0, sigma_max / 2.0);
  double decay = M_PI * tau.re.to_double();
  double umax = 0;
  {
    // same truncation solve as the adaptive route
    double target = (static_cast<double>(plan.pw_) + 16.0) * M_LN2;
    double u = std::log((target + 20.0) / decay + 1.0);
    for (int i = 0; i < 60; ++i) {
      double un = std::log((target + 20.0 + growth * std::max(u, 0.0)) / decay);
      if (!(un > u)) break;
      u = un;
    }
    umax = std::max(u, 1.0);
  }
  auto rate = [&](double u) { return osc + growth + decay * std::exp(u); };
  std::vector<Real> bounds = hp::rate_panels(0.0, umax, rate, budget);
  bounds.front() = Real(0.0);

  auto rule = hp::legendre_rule(m, plan.pw_);
  for (size_t i = 0; i + 1 < bounds.size(); ++i) {
    Real mid = (bounds[i] + bounds[i + 1]) / 2L;
    Real half = (bounds[i + 1] - bounds[i]) / 2L;
    for (long j = 0; j < m; ++j) {
      Real u = mid + half * rule->x[static_cast<size_t>(j)];
      Complex w = Complex(rule->w[static_cast<size_t>(j)] * half) *
                  theta::psi(tau * hp::exp(u), cw);
      plan.u_.push_back(std::move(u));
      plan.w_.push_back(std::move(w));
    }
  }

  // verify the fixed grid against the certified adaptive route
  const Complex i_unit{Real(0.0), Real(1.0)};
  std::vector<Complex> probes{
      Complex(sigma_max, t_abs_max), Complex(sigma_min, t_abs_max),
      Complex((sigma_min + sigma_max) / 2, std::max(1.0, t_abs_max / 2)), Complex(sigma_max, 0.25)};
  for (const Complex& s : probes) {
    Complex got = plan.lambda(s);
    Complex want = lambda_completed({s, tau}, ctx).value;
    if (!(hp::abs(got - want) <= ctx.eps * hp::abs(want) * 64L))
      throw PrecisionLossError("LambdaPlan: fixed grid failed verification against adaptive route");
  }
  return plan;
}

Complex LambdaPlan::integral(const Complex& s, Complex* deriv) const {
  PrecScope ps(pw_);
  Real sig2 = s.re / 2L, t2 = s.im / 2L;
  Complex acc, dacc;
  Real er, sn, cs;
  for (size_t i = 0; i < u_.size(); ++i) {
    er = hp::exp(u_[i] * sig2);
    hp::sin_cos(sn, cs, u_[i] * t2);
    Real ec = er * cs, es = er * sn;
    const Complex& w = w_[i];
    Real vre = w.re * ec - w.im * es;
    Real vim = w.re * es + w.im * ec;
    if (deriv) {
      Real uh = u_[i] / 2L;
      dacc.re = dacc.re + vre * uh;
      dacc.im = dacc.im + vim * uh;
    }
    acc.re = acc.re + vre;
    acc.im = acc.im + vim;
  }
  if (deriv) *deriv = dacc;
  return acc;
}

Complex LambdaPlan::lambda(const Complex& s) const {
  PrecScope ps(pw_);
  Complex I = integral(s, nullptr);
  return hp::exp(s / 2L * log_tau_) * (I - 1L / s);
}

Complex LambdaPlan::s_lambda(const Complex& s) const {
  PrecScope ps(pw_);
  Complex I = integral(s, nullptr);
  return hp::exp(s / 2L * log_tau_) * (s * I - 1L);
}

std::pair<Complex, Complex> LambdaPlan::lambda_and_derivative(const Complex& s) const {
  PrecScope ps(pw_);
  Complex Id;
  Complex I = integral(s, &Id);
  Complex ts2 = hp::exp(s / 2L * log_tau_);
  Complex lam = ts2 * (I - 1L / s);
  Complex dlam = log_tau_ / 2L * lam + ts2 * (1L / (s * s) + Id);
  return {lam, dlam};
}

}  // namespace lav::core
