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
#ifndef LAVRIK_HP_BERNOULLI_HPP
#define LAVRIK_HP_BERNOULLI_HPP

#include "hp/real.hpp"

namespace lav::hp {

// B_{2k} rounded to the current working precision. Backed by an exact
// rational cache (tangent-number recurrence, integer arithmetic only, so no
// cancellation); thread-safe, grows on demand.
Real bernoulli_2k(long k);

}  // namespace lav::hp

#endif
