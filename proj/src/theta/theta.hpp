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
#ifndef LAVRIK_THETA_THETA_HPP
#define LAVRIK_THETA_THETA_HPP

// theta(z) = sum_{n in Z} e^{-pi n^2 z} on Re z > 0, psi(x) = (theta(x)-1)/2,
// and the z -> 1/z functional equation residual.

#include "hp/complexval.hpp"
#include "hp/prec.hpp"

namespace lav::theta {

using hp::Complex;
using hp::Real;

struct ThetaValue {
  Complex value;
  long terms_used = 0;
  Real tail_bound;  // certified: 2 e^{-pi N^2 Re z} / (1 - e^{-pi Re z})
};

ThetaValue theta(const Complex& z, const PrecisionContext& ctx);

// sum_{n>=1} e^{-pi n^2 x}; summed directly (no 1 +, so no cancellation
// when theta is close to 1).
Complex psi(const Complex& x, const PrecisionContext& ctx);

// |theta(1/z) - sqrt(z) theta(z)|, both sides by direct summation.
Real theta_functional_check(const Complex& z, const PrecisionContext& ctx);

}  // namespace lav::theta

#endif
