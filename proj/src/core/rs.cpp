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
#include "core/rs.hpp"

#include <cmath>

#include "core/zeta.hpp"
#include "hp/errors.hpp"
#include "hp/gamma.hpp"

namespace lav::core {

using hp::PrecScope;

namespace {

hp::Complex half_quarter_lngamma(const Real& t, const PrecisionContext& ctx) {
  return hp::log_gamma(Complex{Real(0.25), t / 2L}, ctx);
}

}  // namespace

Real riemann_siegel_theta(const Real& t, const PrecisionContext& ctx) {
  PrecScope ps(ctx.bits + 32);
  Complex lg = half_quarter_lngamma(t, ctx);
  return lg.im - t / 2L * hp::log(hp::const_pi());
}

Real log_f_modulus(const Real& t, const PrecisionContext& ctx) {
  PrecScope ps(ctx.bits + 32);
  Complex lg = half_quarter_lngamma(t, ctx);
  return lg.re - hp::log(hp::const_pi()) / 4L;
}

long z_bits_threshold(double t) {
  return static_cast<long>(std::ceil(M_PI * std::abs(t) / (4.0 * M_LN2))) + 64;
}

Real z_from_l(const Real& t, const PrecisionContext& ctx) {
  if (ctx.bits < z_bits_threshold(t.to_double()))
    throw PrecisionLossError("z_from_l: ctx.bits below the pi t / (4 ln 2) + 64 threshold");
  PrecScope ps(ctx.bits + 32);
  LambdaValue lv = lambda_completed({Complex{Real(0.5), t}, Complex(1.0)}, ctx);
  Real logf = log_f_modulus(t, ctx);
  return 2L * lv.value.re * hp::exp(-logf);
}

Real z_reference(const Real& t, const PrecisionContext& ctx) {
  PrecScope ps(ctx.bits + 32);
  Real th = riemann_siegel_theta(t, ctx);
  Complex z = zeta_oracle(Complex{Real(0.5), t}, ctx);
  Real sn, cs;
  hp::sin_cos(sn, cs, th);
  return cs * z.re - sn * z.im;
}

XiTriple xi_and_Xi(const Complex& z, const PrecisionContext& ctx) {
  PrecScope ps(ctx.bits + 32);
  Complex s = Complex(0.5) + hp::mul_i(z);
  Complex s_neg = 1L - s;  // = 1/2 - iz
  if (s.is_zero() || s_neg.is_zero()) throw PoleError("xi_and_Xi: s = 0 endpoint");
  // s(s-1)/2 is invariant under s -> 1-s, so both F values share it
  Complex pref = s * (s - 1L) / 2L;
  Complex f_pos = pref * lambda_value({s, Complex(1.0)}, ctx);
  Complex f_neg = pref * lambda_value({s_neg, Complex(1.0)}, ctx);
  XiTriple out;
  out.F = f_pos;
  out.Xi = f_pos + f_neg;
  out.xi = out.Xi;
  return out;
}

}  // namespace lav::core
