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
#ifndef LAVRIK_HP_PREC_HPP
#define LAVRIK_HP_PREC_HPP

#include "hp/errors.hpp"
#include "hp/real.hpp"

namespace lav {

// Working precision plus truncation tolerances, threaded through every
// evaluation. Immutable after construction; safe to share across threads.
struct PrecisionContext {
  long bits = 128;
  hp::Real eps;             // target relative truncation error
  long max_terms = 4000000; // cap for series / quadrature refinement

  static PrecisionContext make(long bits, long eps_exp2 = 0, long max_terms = 4000000) {
    if (bits < 64) throw DomainError("PrecisionContext: bits must be >= 64");
    if (eps_exp2 == 0) eps_exp2 = -bits + 8;
    if (eps_exp2 > -33) throw DomainError("PrecisionContext: eps must be < 2^-32");
    if (max_terms <= 0) throw DomainError("PrecisionContext: max_terms must be positive");
    PrecisionContext c;
    c.bits = bits;
    c.eps = hp::pow2(eps_exp2);
    c.max_terms = max_terms;
    return c;
  }

  PrecisionContext with_bits(long b) const { return make(b, 0, max_terms); }
};

}  // namespace lav

#endif
