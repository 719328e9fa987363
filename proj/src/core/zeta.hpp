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
#ifndef LAVRIK_CORE_ZETA_HPP
#define LAVRIK_CORE_ZETA_HPP

#include "hp/complexval.hpp"
#include "hp/prec.hpp"

namespace lav::core {

// zeta(s) by Euler-Maclaurin with a rigorous Backlund remainder test:
// the correction order adapts, the term count N doubles if the test fails.
// Independent of the Lambda evaluation paths; this is the cross-check oracle.
hp::Complex zeta_oracle(const hp::Complex& s, const PrecisionContext& ctx);

}  // namespace lav::core

#endif
