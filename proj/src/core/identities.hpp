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
#ifndef LAVRIK_CORE_IDENTITIES_HPP
#define LAVRIK_CORE_IDENTITIES_HPP

#include "core/lambda.hpp"

namespace lav::core {

// Relative residual of the splitting identity
//   pi^{-s/2} Gamma(s/2) zeta(s) = Lambda(tau,s) + Lambda(1/tau, 1-s),
// left side via the Euler-Maclaurin oracle. Normalized by |lhs| except when
// lhs is anomalously small (near a zeta zero), then by max(|lhs|, |Lambda|).
Real verify_decomposition(const EvalPoint& p, const PrecisionContext& ctx);

// Absolute residual of the contour representation: Lambda(tau,s) + tau^{s/2}/s
// against the vertical-line integral of pi^{-z/2}Gamma(z/2)zeta(z)
// tau^{-z/2}/(z-s) / (2 pi i), c > max(Re s, 1). The truncation height T is
// raised until the e^{-pi |Im z|/4} decay certifies the tail.
Real mellin_barnes_check(const EvalPoint& p, const Real& c, const PrecisionContext& ctx);

}  // namespace lav::core

#endif
