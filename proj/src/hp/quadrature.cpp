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
#include "hp/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "hp/errors.hpp"

namespace lav::hp {

namespace {

std::mutex g_rule_mu;
std::map<std::pair<long, long>, std::shared_ptr<const LegendreRule>> g_rules;

std::shared_ptr<const LegendreRule> build_rule(long m, long prec) {
  long pn = prec + 32;
  PrecScope ps(pn);
  auto rule = std::make_shared<LegendreRule>();
  rule->m = m;
  rule->prec = prec;
  rule->x.resize(static_cast<size_t>(m));
  rule->w.resize(static_cast<size_t>(m));
  for (long i = 0; i < (m + 1) / 2; ++i) {
    Real x(std::cos(M_PI * (static_cast<double>(i) + 0.75) / (static_cast<double>(m) + 0.5)));
    Real pm, pm1;
    for (int it = 0; it < 90; ++it) {
      Real p0(1L), p1 = x;
      for (long k = 2; k <= m; ++k) {
        Real p = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p;
      }
      pm = p1;
      pm1 = p0;
      Real dp = m * (x * pm - pm1) / (x * x - 1L);
      Real dx = pm / dp;
      x = x - dx;
      if (dx.is_zero() || dx.exp2() < -(prec + 24)) break;
    }
    Real p0(1L), p1 = x;
    for (long k = 2; k <= m; ++k) {
      Real p = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p;
    }
    Real dp = m * (x * p1 - p0) / (x * x - 1L);
    Real w = 2L / ((1L - x * x) * dp * dp);
    rule->x[static_cast<size_t>(i)] = -x;  // ascending order: seeds start near +1
    rule->w[static_cast<size_t>(i)] = w;
    rule->x[static_cast<size_t>(m - 1 - i)] = x;
    rule->w[static_cast<size_t>(m - 1 - i)] = w;
  }
  return rule;
}

}  // namespace

std::shared_ptr<const LegendreRule> legendre_rule(long m, long prec) {
  {
    std::lock_guard<std::mutex> lock(g_rule_mu);
    auto it = g_rules.find({m, prec});
    if (it != g_rules.end()) return it->second;
  }
  auto rule = build_rule(m, prec);
  std::lock_guard<std::mutex> lock(g_rule_mu);
  g_rules.emplace(std::make_pair(m, prec), rule);
  return rule;
}

long quad_order(long prec) {
  long m = 16 + prec / 8;
  return m > 256 ? 256 : m;
}

double quad_phase_budget(long m, long prec) {
  // Panel error model (phi / 4m)^{2m}: solve for 2^-(prec+12), with margin.
  double phi = 4.0 * static_cast<double>(m) *
               std::pow(2.0, -static_cast<double>(prec + 12) / (2.0 * static_cast<double>(m))) * 0.75;
  return phi < 0.5 ? 0.5 : phi;
}

namespace {

struct EvalBudget {
  long used = 0;
  long cap = 0;
  void charge(long n) {
    used += n;
    if (used > cap) throw ConvergenceError("quadrature: refinement limit (max_terms) exceeded");
  }
};

Complex eval_gl(const Integrand& g, const Real& a, const Real& b, const LegendreRule& rule,
                EvalBudget& budget) {
  budget.charge(rule.m);
  Real mid = (a + b) / 2L, half = (b - a) / 2L;
  Complex acc;
  for (size_t i = 0; i < rule.x.size(); ++i) {
    Complex v = g(mid + half * rule.x[i]);
    acc.re = acc.re + rule.w[i] * v.re;
    acc.im = acc.im + rule.w[i] * v.im;
  }
  return acc * half;
}

struct CertOut {
  Complex value;
  Real err;
};

CertOut certify(const Integrand& g, const Real& a, const Real& b, const Complex& coarse,
                const Real& tol, const LegendreRule& rule, EvalBudget& budget, int depth) {
  Real mid = (a + b) / 2L;
  Complex left = eval_gl(g, a, mid, rule, budget);
  Complex right = eval_gl(g, mid, b, rule, budget);
  Complex fine = left + right;
  Real diff = abs(fine - coarse);
  if (diff <= tol || depth >= 48) return {fine, diff};
  Real half_tol = tol / 2L;
  CertOut l = certify(g, a, mid, left, half_tol, rule, budget, depth + 1);
  CertOut r = certify(g, mid, b, right, half_tol, rule, budget, depth + 1);
  return {l.value + r.value, l.err + r.err};
}

}  // namespace

QuadResult integrate_panels(const Integrand& g, const std::vector<Real>& bounds,
                            const Real& abs_tol, long m, long prec, long max_evals) {
  auto rule = legendre_rule(m, prec);
  EvalBudget budget{0, max_evals};
  size_t n = bounds.size() - 1;
  Real tol = abs_tol / static_cast<long>(n);
  Complex total;
  Real err;
  for (size_t i = 0; i < n; ++i) {
    Complex coarse = eval_gl(g, bounds[i], bounds[i + 1], *rule, budget);
    CertOut c = certify(g, bounds[i], bounds[i + 1], coarse, tol, *rule, budget, 0);
    total = total + c.value;
    err = err + c.err;
  }
  return {total, err, budget.used};
}

std::vector<Real> rate_panels(double u0, double u1, const std::function<double(double)>& rate,
                              double budget) {
  std::vector<Real> bounds;
  bounds.emplace_back(u0);
  double u = u0;
  while (u < u1) {
    double d = budget / std::max(rate(u), 1e-6);
    d = budget / std::max(0.5 * (rate(u) + rate(std::min(u + d, u1))), 1e-6);
    if (d > 1.5) d = 1.5;
    if (d < 1e-3) d = 1e-3;
    u += d;
    if (u > u1 - 1e-9) u = u1;
    bounds.emplace_back(u);
  }
  return bounds;
}

namespace {

// Solve decay * e^u - growth*u >= target (nats) for the truncation point.
double solve_umax(double u0, double growth, double decay, double target) {
  double u = std::log((target + 20.0) / decay + 1.0);
  for (int i = 0; i < 60; ++i) {
    double un = std::log((target + 20.0 + std::max(growth, 0.0) * std::max(u, 0.0)) / decay);
    if (!(un > u)) break;
    u = un;
  }
  if (u < u0 + 0.5) u = u0 + 0.5;
  return u;
}

}  // namespace

QuadResult log_domain_integral(const Integrand& g, const Real& u0, double osc, double growth,
                               double decay, const PrecisionContext& ctx, bool open_left) {
  if (!(decay > 0)) throw DomainError("log_domain_integral: decay rate must be positive");
  long pw = ctx.bits + 24;
  PrecScope ps(pw);
  long m = quad_order(pw);
  double budget = quad_phase_budget(m, pw);
  double u0d = u0.to_double();
  double umax = solve_umax(u0d, growth, decay, (static_cast<double>(pw) + 16.0) * M_LN2);
  double arate = std::abs(osc) + std::abs(growth);
  auto rate = [&](double u) { return arate + decay * std::exp(u); };

  std::vector<Real> bounds = rate_panels(u0d, umax, rate, budget);
  bounds.front() = u0;  // the left endpoint must be exact, not its double image

  auto rule = legendre_rule(m, pw);
  EvalBudget budget_evals{0, ctx.max_terms};

  // rough pass fixes the absolute tolerance scale
  Complex rough;
  for (size_t i = 0; i + 1 < bounds.size(); ++i)
    rough = rough + eval_gl(g, bounds[i], bounds[i + 1], *rule, budget_evals);
  Real scale = max(abs(rough), pow2(-3 * pw));
  Real abs_tol = ctx.eps * scale * pow2(-3);

  QuadResult res = integrate_panels(g, bounds, abs_tol, m, pw,
                                    ctx.max_terms - budget_evals.used);
  res.evals += budget_evals.used;

  if (open_left) {
    long quiet = 0;
    for (long k = 0; k < 3 * pw; ++k) {
      std::vector<Real> b2{u0 - (k + 1), u0 - k};
      QuadResult piece = integrate_panels(g, b2, abs_tol / 8L, m, pw, ctx.max_terms - res.evals);
      res.value = res.value + piece.value;
      res.err_abs = res.err_abs + piece.err_abs;
      res.evals += piece.evals;
      if (abs(piece.value) < abs_tol / 8L) {
        if (++quiet >= 2) {
          res.err_abs = res.err_abs + abs(piece.value) * 2L;
          break;
        }
      } else {
        quiet = 0;
      }
      if (k == 3 * pw - 1) throw ConvergenceError("log_domain_integral: left extension did not settle");
    }
  }

  // Tail: |g(u)| <= C exp(growth*u - decay*e^u) with C measured near umax.
  Real ggrowth(growth), gdecay(decay);
  for (int round = 0; round < 64; ++round) {
    Real umr = bounds.back();
    Real c_est;
    for (double off : {0.1, 0.6, 1.3}) {
      Real uu = umr - Real(off);
      Real mag = abs(g(uu));
      res.evals += 1;
      Real envelope = exp(gdecay * exp(uu) - ggrowth * uu);
      c_est = max(c_est, mag * envelope);
    }
    c_est = c_est * 4L;
    Real xm = exp(umr);
    Real denom = gdecay - max(Real(0.0), ggrowth - 1L) / xm;
    if (denom > 0.0) {
      Real tail = c_est * pow(xm, ggrowth - 1L) * exp(-gdecay * xm) / denom;
      if (tail < abs_tol) {
        res.err_abs = res.err_abs + tail;
        return res;
      }
    }
    std::vector<Real> b2{umr, umr + Real(0.5)};
    QuadResult piece = integrate_panels(g, b2, abs_tol / 8L, m, pw, ctx.max_terms - res.evals);
    res.value = res.value + piece.value;
    res.err_abs = res.err_abs + piece.err_abs;
    res.evals += piece.evals;
    bounds.push_back(b2.back());
  }
  throw ConvergenceError("log_domain_integral: tail bound did not certify");
}

QuadResult integrate_decaying(const Integrand& f, const Real& lower, double osc_freq,
                              double decay, const PrecisionContext& ctx) {
  if (lower.sign() < 0) throw DomainError("integrate_decaying: lower must be >= 0");
  PrecScope ps(ctx.bits + 24);
  auto g = [&f](const Real& u) {
    Real x = exp(u);
    Complex v = f(x);
    return Complex{v.re * x, v.im * x};
  };
  if (lower.is_zero()) {
    return log_domain_integral(g, Real(0.0), osc_freq, 1.0, decay, ctx, /*open_left=*/true);
  }
  return log_domain_integral(g, log(lower), osc_freq, 1.0, decay, ctx, /*open_left=*/false);
}

}  // namespace lav::hp
