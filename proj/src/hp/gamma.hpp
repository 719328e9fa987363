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
#ifndef LAVRIK_HP_GAMMA_HPP
#define LAVRIK_HP_GAMMA_HPP

#include "hp/complexval.hpp"
#include "hp/prec.hpp"

namespace lav::hp {

// Principal branch of log Gamma(z) (the analytic continuation that is real
// on the positive reals). For negative real non-integer z the value is the
// limit from the upper half-plane. Throws PoleError at 0, -1, -2, ...
Complex log_gamma(const Complex& z, const PrecisionContext& ctx);

// Upper incomplete gamma Gamma(a, z), Re z > 0. Uses the lower series
// Gamma(a) - z^a e^{-z} sum z^k / (a (a+1) ... (a+k)) for |z| <= |a| + 4
// (with guard bits absorbing the Gamma(a) - gamma(a,z) cancellation),
// a continued fraction otherwise.
Complex gamma_upper(const Complex& a, const Complex& z, const PrecisionContext& ctx);

// Continued-fraction route only (valid for a at non-positive integers too,
// e.g. E_1(z) = Gamma(0, z)). Exposed for route-agreement checks.
Complex gamma_upper_cf(const Complex& a, const Complex& z, const PrecisionContext& ctx);

// 1/Gamma(z), entire; reflection-based for Re z < 0.5 so zeros at the poles
// of Gamma come out exact-ish instead of overflowing.
Complex reciprocal_gamma(const Complex& z, const PrecisionContext& ctx);

}  // namespace lav::hp

#endif
