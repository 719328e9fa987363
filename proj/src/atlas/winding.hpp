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
#ifndef LAVRIK_ATLAS_WINDING_HPP
#define LAVRIK_ATLAS_WINDING_HPP

// Argument-principle zero counting for the entire function s*Lambda(s):
// accumulate phase increments of g = s*Lambda along a rectangle boundary,
// bisecting steps until every |delta arg| < pi/2.

#include "core/lambda.hpp"
#include "hp/errors.hpp"

namespace lav::atlas {

using core::Complex;
using core::Real;

struct Box {
  double s0, s1, t0, t1;
  bool contains(double re, double im, double pad = 0.0) const {
    return re >= s0 - pad && re <= s1 + pad && im >= t0 - pad && im <= t1 + pad;
  }
};

// A zero sits on (or hopelessly near) the walked boundary.
struct BoundaryZeroError : ConvergenceError {
  explicit BoundaryZeroError(const std::string& what) : ConvergenceError(what) {}
};

// Accumulated phase did not close to an integer multiple of 2 pi.
struct NonClosureError : ConvergenceError {
  explicit NonClosureError(const std::string& what) : ConvergenceError(what) {}
};

// SearchRegion per the atlas contract: rectangle + boundary sampling
// resolution; step0 <= 0 picks min(0.25, 1/log(2+t)).
struct SearchRegion {
  Box box;
  double step0 = 0.0;
};

long winding_number(const core::LambdaPlan& plan, const SearchRegion& region);

// Retries with the box nudged by half a grid step when the boundary walk
// trips over a zero.
long winding_number_perturbed(const core::LambdaPlan& plan, SearchRegion region);

}  // namespace lav::atlas

#endif
