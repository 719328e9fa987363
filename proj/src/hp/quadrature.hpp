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
#ifndef LAVRIK_HP_QUADRATURE_HPP
#define LAVRIK_HP_QUADRATURE_HPP

// Adaptive Gauss-Legendre panel quadrature. Semi-infinite decaying
// oscillatory integrands go through the substitution x = e^u: the integrand
// x^{c} psi(tau x) oscillates uniformly in log x, so panels are sized by a
// per-panel phase budget derived from the rule order and target precision.

#include <functional>
#include <memory>
#include <vector>

#include "hp/complexval.hpp"
#include "hp/prec.hpp"

namespace lav::hp {

struct LegendreRule {
  long m = 0;
  long prec = 0;
  std::vector<Real> x;  // nodes on (-1, 1)
  std::vector<Real> w;
};

// Cached; thread-safe.
std::shared_ptr<const LegendreRule> legendre_rule(long m, long prec);

// Rule order and per-panel phase budget (radians) for a target precision.
long quad_order(long prec);
double quad_phase_budget(long m, long prec);

using Integrand = std::function<Complex(const Real&)>;

struct QuadResult {
  Complex value;
  Real err_abs;    // accumulated certification defects + tail bound
  long evals = 0;  // integrand evaluations
};

// Certified integration over the initial panels [bounds[i], bounds[i+1]]:
// each panel is accepted when one bisection changes it by less than its
// share of abs_tol, otherwise split recursively.
QuadResult integrate_panels(const Integrand& g, const std::vector<Real>& bounds,
                            const Real& abs_tol, long m, long prec, long max_evals);

// integral_{lower}^{inf} f(x) dx with |f(x)| <= C e^{-decay x}; oscillation
// frequency of f in log x bounded by osc_freq. lower = 0 is allowed for f
// bounded near 0 (the log-substituted integrand then decays like e^u on the
// left and panels are extended until negligible).
QuadResult integrate_decaying(const Integrand& f, const Real& lower, double osc_freq,
                              double decay, const PrecisionContext& ctx);

// integral_{u0}^{inf} g(u) du with |g(u)| <= C exp(growth*u - decay*e^u) and
// oscillation rate <= osc in u; the engine behind integrate_decaying and the
// Lambda quadrature route. open_left extends the domain to -inf.
QuadResult log_domain_integral(const Integrand& g, const Real& u0, double osc, double growth,
                               double decay, const PrecisionContext& ctx, bool open_left = false);

// Initial panel boundaries on [u0, u1] with cumulative local rate
// integral bounded by the phase budget per panel.
std::vector<Real> rate_panels(double u0, double u1, const std::function<double(double)>& rate,
                              double budget);

}  // namespace lav::hp

#endif
