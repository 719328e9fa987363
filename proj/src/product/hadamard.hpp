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
#ifndef LAVRIK_PRODUCT_HADAMARD_HPP
#define LAVRIK_PRODUCT_HADAMARD_HPP

// The product side: Lambda(s) = -e^{-alpha s}/s prod (1 - s/b_n) e^{s/b_n},
// the continuous argument along the critical line, a(t) = pi/2 - arg, and
// u(t) with Z = u * a.

#include <memory>
#include <string>
#include <vector>

#include "atlas/atlas.hpp"
#include "core/lambda.hpp"

namespace lav::product {

using core::Complex;
using core::Real;

struct ProductConstants {
  Real alpha;  // integral_1^inf psi(y) dy/y ~ 0.0109065592
  Real a_const;  // A = theta(1) = 1 + 2 sum e^{-pi n^2}
  Real b0;
};

// alpha via the oscillation-free decaying quadrature; relative error <= eps.
Real alpha_constant(const PrecisionContext& ctx);

ProductConstants product_constants(const PrecisionContext& ctx);

// Truncated Hadamard product with conjugate pairs multiplied jointly so
// every paired factor has real coefficients. zeros: atlas order (b0 first).
Complex partial_product(const Complex& s, const std::vector<atlas::ZeroRecord>& zeros,
                        long cutoff_pairs, const ProductConstants& k,
                        const PrecisionContext& ctx);

// Continuous determination of arg Lambda(1/2+it) anchored at arg(0) = pi,
// sampled with step min(0.1, 1/(2 log(2+t))), densified so each increment
// stays under pi/2. a(t) = pi/2 - arg attached.
struct ArgTrack {
  std::vector<double> t;
  std::vector<Real> arg;
  std::vector<Real> a;

  // a at arbitrary t <= t_max: fresh Lambda eval unwrapped modulo 2 pi
  // against the nearest grid anchor.
  Real a_at(double t_query) const;
  std::string to_csv() const;

  // shared evaluation plan, kept so a_at can re-anchor
  std::shared_ptr<const core::LambdaPlan> plan;
};

ArgTrack arg_track(double t_max, const PrecisionContext& ctx);

// Truncated series -pi/2 + alpha t + arctan 2t - sum [arg(1 - s/b_n) +
// Im(s/b_n)], args in (-pi, pi). Returns value and the magnitude of the last
// pair term (the series converges slowly; callers measure that).
struct ASeriesValue {
  Real value;
  Real last_term;
};
ASeriesValue a_series(const Real& t, const std::vector<atlas::ZeroRecord>& zeros,
                      const ProductConstants& k, const PrecisionContext& ctx);

// u(t) = Z(t)/a(t) > 0 for t > 0; at zeros of a the limit Z'/a' by central
// differences. ctx.bits must clear the z_from_l threshold for t.
Real u_function(const Real& t, const ArgTrack& track, const PrecisionContext& ctx);

}  // namespace lav::product

#endif
