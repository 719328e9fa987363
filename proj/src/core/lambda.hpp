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
#ifndef LAVRIK_CORE_LAMBDA_HPP
#define LAVRIK_CORE_LAMBDA_HPP

// Lambda(tau,s) = pi^{-s/2} Gamma(s/2) L(tau,s), evaluated two independent
// ways:
//   quadrature: tau^{s/2} (-1/s + integral_1^inf x^{s/2-1} psi(tau x) dx)
//   series:     -tau^{s/2}/s + pi^{-s/2} sum_n Gamma(s/2, pi n^2 tau) n^{-s}
// Lambda is meromorphic with a single simple pole at s = 0 (residue -1);
// L(tau,s) is entire with trivial zeros at s = -2, -4, ...

#include <utility>
#include <vector>

#include "hp/complexval.hpp"
#include "hp/prec.hpp"

namespace lav::core {

using hp::Complex;
using hp::Real;

struct EvalPoint {
  Complex s;
  Complex tau{1.0};
};

enum class Route { series, quadrature };

struct LambdaValue {
  Complex value;
  Real log_modulus;
  Real phase;
  Route route = Route::quadrature;
};

// Direct quadrature of the defining integral; certified to ctx.eps relative.
LambdaValue lambda_completed(const EvalPoint& p, const PrecisionContext& ctx);

// L(tau,s) by the incomplete-gamma series; exactly 0 at s = -2n.
Complex l_function_series(const EvalPoint& p, const PrecisionContext& ctx);

// Lambda by the series route (no Gamma division, so no pole juggling).
Complex lambda_series_value(const EvalPoint& p, const PrecisionContext& ctx);

// Route picked by |Im s| (series up to 50, quadrature above).
Complex lambda_value(const EvalPoint& p, const PrecisionContext& ctx);
Complex l_function_value(const EvalPoint& p, const PrecisionContext& ctx);

// d Lambda / ds, by differentiating the defining integral under the sign.
Complex lambda_derivative(const EvalPoint& p, const PrecisionContext& ctx);

// Shared fixed-node quadrature for scanning many s over one box: theta
// values are computed once per node at build time, each eval then costs one
// real exp + sincos per node. Verified against the adaptive route at build.
class LambdaPlan {
 public:
  static LambdaPlan build(const Complex& tau, double sigma_min, double sigma_max,
                          double t_abs_max, const PrecisionContext& ctx);

  Complex lambda(const Complex& s) const;
  Complex s_lambda(const Complex& s) const;  // s*Lambda via tau^{s/2}(-1 + s I); regular at 0
  std::pair<Complex, Complex> lambda_and_derivative(const Complex& s) const;

  long prec() const { return pw_; }
  double sigma_max() const { return sigma_max_; }
  double t_abs_max() const { return t_max_; }

 private:
  Complex integral(const Complex& s, Complex* deriv) const;

  Complex tau_;
  Complex log_tau_;
  long pw_ = 0;
  double sigma_min_ = 0, sigma_max_ = 0, t_max_ = 0;
  std::vector<Real> u_;        // nodes in u = log x
  std::vector<Complex> w_;     // GL weight * panel half-width * psi(tau e^u)
};

}  // namespace lav::core

#endif
