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
#include "product/hadamard.hpp"

#include <cmath>
#include <sstream>

#include "core/rs.hpp"
#include "hp/errors.hpp"
#include "hp/quadrature.hpp"
#include "theta/theta.hpp"

namespace lav::product {

using hp::PrecScope;

Real alpha_constant(const PrecisionContext& ctx) {
  PrecScope ps(ctx.bits + 16);
  auto f = [&ctx](const Real& y) {
    Complex p = theta::psi(Complex(y), ctx.with_bits(hp::working_prec()));
    return Complex(p.re / y);
  };
  return hp::integrate_decaying(f, Real(1.0), 0.0, M_PI, ctx).value.re;
}

ProductConstants product_constants(const PrecisionContext& ctx) {
  ProductConstants k;
  k.alpha = alpha_constant(ctx);
  {
    PrecScope ps(ctx.bits + 16);
    k.a_const = theta::theta(Complex(1.0), ctx).value.re;
  }
  k.b0 = atlas::refine_zero(Complex(11.3, 0.02), ctx).b.re;
  return k;
}

Complex partial_product(const Complex& s, const std::vector<atlas::ZeroRecord>& zeros,
                        long cutoff_pairs, const ProductConstants& k,
                        const PrecisionContext& ctx) {
  if (s.is_zero()) throw PoleError("partial_product: s = 0");
  PrecScope ps(ctx.bits + 16);
  Complex acc = -hp::exp(Complex(-k.alpha) * s) / s;
  long pairs = 0;
  for (const auto& z : zeros) {
    if (z.b.im.is_zero()) {
      // the real factor (1 - s/b0) e^{s/b0}
      Complex w = s / Complex(z.b.re);
      acc = acc * (1L - w) * hp::exp(w);
      continue;
    }
    if (pairs >= cutoff_pairs) break;
    ++pairs;
    // (1 - s/b)(1 - s/conj b) e^{s/b + s/conj b} = (1 - p s + q s^2) e^{p s}
    Real mod2 = z.b.re * z.b.re + z.b.im * z.b.im;
    Real p = 2L * z.b.re / mod2;
    Real q = 1L / mod2;
    Complex quad = 1L - s * p + s * s * q;
    acc = acc * quad * hp::exp(s * p);
  }
  return acc;
}

namespace {

Real principal_arg_step(const Complex& from, const Complex& to) { return hp::arg(to / from); }

}  // namespace

ArgTrack arg_track(double t_max, const PrecisionContext& ctx) {
  if (!(t_max > 0)) throw DomainError("arg_track: t_max must be positive");
  ArgTrack track;
  long bits = std::max<long>(ctx.bits, 128);
  auto plan = std::make_shared<core::LambdaPlan>(
      core::LambdaPlan::build(Complex(1.0), 0.3, 0.7, t_max + 1.0, ctx.with_bits(bits)));
  track.plan = plan;
  PrecScope ps(plan->prec());

  Real pi = hp::const_pi();
  double t = 0.0;
  Complex prev = plan->lambda(Complex(0.5, 0.0));
  if (!(prev.re < 0.0)) throw ConvergenceError("arg_track: Lambda(1/2) must be negative");
  Real arg_acc = pi;  // anchor: Lambda(1/2) < 0
  track.t.push_back(0.0);
  track.arg.push_back(arg_acc);
  track.a.push_back(pi / 2L - arg_acc);

  Real min_mag = hp::abs(prev);
  while (t < t_max) {
    double step = std::min(0.1, 1.0 / (2.0 * std::log(2.0 + t)));
    double tn = std::min(t + step, t_max);
    for (;;) {
      Complex cur = plan->lambda(Complex(0.5, tn));
      if (hp::abs(cur) < hp::pow2(-plan->prec() / 2))
        throw ConvergenceError("arg_track: |Lambda| vanished on the critical line");
      Real d = principal_arg_step(prev, cur);
      if (hp::abs(d) < pi / 2L) {
        arg_acc = arg_acc + d;
        prev = cur;
        t = tn;
        track.t.push_back(t);
        track.arg.push_back(arg_acc);
        track.a.push_back(pi / 2L - arg_acc);
        min_mag = hp::min(min_mag, hp::abs(cur));
        break;
      }
      tn = t + (tn - t) / 2;  // densify
      if (tn - t < 1e-9) throw ConvergenceError("arg_track: step failure");
    }
  }
  return track;
}

Real ArgTrack::a_at(double t_query) const {
  if (t.empty() || !plan) throw DomainError("ArgTrack: empty track");
  if (t_query < t.front() || t_query > t.back() + 1e-12)
    throw DomainError("ArgTrack: query outside the tracked range");
  // nearest anchor below
  auto it = std::lower_bound(t.begin(), t.end(), t_query);
  size_t idx = it == t.begin() ? 0 : static_cast<size_t>(it - t.begin()) - 1;
  PrecScope ps(plan->prec());
  Complex anchor_val = plan->lambda(Complex(0.5, t[idx]));
  Complex cur = plan->lambda(Complex(0.5, t_query));
  Real d = principal_arg_step(anchor_val, cur);
  Real pi = hp::const_pi();
  if (!(hp::abs(d) < pi / 2L))
    throw ConvergenceError("ArgTrack: anchor too far from query (grid not dense enough)");
  return pi / 2L - (arg[idx] + d);
}

std::string ArgTrack::to_csv() const {
  std::ostringstream out;
  out << "t,arg,a\n";
  char buf[64];
  for (size_t i = 0; i < t.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", t[i]);
    out << buf << "," << arg[i].str() << "," << a[i].str() << "\n";
  }
  return out.str();
}

ASeriesValue a_series(const Real& t, const std::vector<atlas::ZeroRecord>& zeros,
                      const ProductConstants& k, const PrecisionContext& ctx) {
  PrecScope ps(ctx.bits + 16);
  Real pi = hp::const_pi();
  Complex s{Real(0.5), t};
  Real acc = -pi / 2L + k.alpha * t + hp::atan(2L * t);
  Real last;
  for (const auto& z : zeros) {
    if (z.b.im.is_zero()) {
      Complex w = 1L - s / Complex(z.b.re);
      acc = acc - (hp::arg(w) + t / z.b.re);
      continue;
    }
    // n and -n jointly: arg(1-s/b) + arg(1-s/conj b) + Im(s/b + s/conj b)
    Complex w1 = 1L - s / z.b;
    Complex w2 = 1L - s / hp::conj(z.b);
    Real mod2 = z.b.re * z.b.re + z.b.im * z.b.im;
    Real pair = hp::arg(w1) + hp::arg(w2) + t * (2L * z.b.re) / mod2;
    acc = acc - pair;
    last = hp::abs(pair);
  }
  return {acc, last};
}

Real u_function(const Real& t, const ArgTrack& track, const PrecisionContext& ctx) {
  if (!(t > 0.0)) throw DomainError("u_function: t must be positive");
  PrecScope ps(ctx.bits + 16);
  Real z = core::z_from_l(t, ctx);
  Real a = track.a_at(t.to_double());
  // near a zero of a (equivalently of Z) take the derivative ratio
  if (hp::abs(a) > 1e-5) return z / a;
  Real h(1e-4);
  Real zp = core::z_from_l(t + h, ctx), zm = core::z_from_l(t - h, ctx);
  Real ap = track.a_at((t + h).to_double()), am = track.a_at((t - h).to_double());
  return (zp - zm) / (ap - am);
}

}  // namespace lav::product
