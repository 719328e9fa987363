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
#ifndef LAVRIK_HP_ERRORS_HPP
#define LAVRIK_HP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lav {

// Evaluation outside a kernel's domain (wrong half-plane, pole hit, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : DomainError {
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

// The requested result cannot be certified at the configured precision.
struct PrecisionLossError : std::runtime_error {
  explicit PrecisionLossError(const std::string& what) : std::runtime_error(what) {}
};

// A series / continued fraction / quadrature hit its refinement cap.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lav

#endif
