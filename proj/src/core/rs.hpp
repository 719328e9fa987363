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
#ifndef LAVRIK_CORE_RS_HPP
#define LAVRIK_CORE_RS_HPP

// Riemann-Siegel side: on s = 1/2 + it write pi^{-s/2} Gamma(s/2) =
// f(t) e^{i vartheta(t)} with f > 0; then Z(t) = 2 Re Lambda(1/2+it) / f(t).

#include "core/lambda.hpp"
#include "hp/complexval.hpp"
#include "hp/prec.hpp"

namespace lav::core {

// vartheta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi; continuous, odd,
// vartheta(0) = 0 (log_gamma is the analytic branch, so no unwrapping).
Real riemann_siegel_theta(const Real& t, const PrecisionContext& ctx);

// log f(t); log-carried since f(t) ~ t^{-1/4} e^{-pi t/4}.
Real log_f_modulus(const Real& t, const PrecisionContext& ctx);

// Minimum bits for Z(t) work at height t: pi t / (4 ln 2) + 64.
long z_bits_threshold(double t);

// Z(t) reconstructed from Lambda on the critical line. Throws
// PrecisionLossError when ctx.bits is below the threshold.
Real z_from_l(const Real& t, const PrecisionContext& ctx);

// e^{i vartheta} zeta(1/2+it) via the Euler-Maclaurin oracle; the
// independent reference for z_from_l.
Real z_reference(const Real& t, const PrecisionContext& ctx);

struct XiTriple {
  Complex xi;  // xi(1/2 + iz) = Xi(z)
  Complex Xi;
  Complex F;   // F(z) = (s(s-1)/2) Lambda(s), s = 1/2 + iz
};

// F from the one-sided entire part; Xi(z) = F(z) + F(-z).
XiTriple xi_and_Xi(const Complex& z, const PrecisionContext& ctx);

}  // namespace lav::core

#endif
