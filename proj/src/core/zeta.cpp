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
#include "core/zeta.hpp"

#include <cmath>

#include "hp/bernoulli.hpp"
#include "hp/errors.hpp"

namespace lav::core {

using hp::Complex;
using hp::PrecScope;
using hp::Real;

hp::Complex zeta_oracle(const hp::Complex& s, const PrecisionContext& ctx) {
  if (s.im.is_zero() && s.re == Real(1.0)) throw PoleError("zeta: pole at s = 1");
  long pw = ctx.bits + 32;
  PrecScope ps(pw);
  double t_abs = std::abs(s.im.to_double());
  double sigma = s.re.to_double();
  long kmax = std::min<long>(std::max<long>(pw * 35 / 100, 12), 800);
  long n = std::max<long>({static_cast<long>(std::ceil(3.0 + t_abs / 2.0)),
                           static_cast<long>(std::ceil((t_abs + 2.0 * static_cast<double>(kmax)) / 4.0)),
                           16});
  Real tol_rel = ctx.eps * hp::pow2(-6);

  for (int attempt = 0; attempt < 5; ++attempt, n *= 2) {
    Complex sum;
    for (long j = 1; j < n; ++j) {
      sum = sum + hp::exp(-(s * hp::log(Real(static_cast<double>(j)))));
    }
    Real nr(static_cast<double>(n));
    Complex npow_s = hp::exp(-(s * hp::log(nr)));  // N^{-s}
    sum = sum + npow_s / 2L + npow_s * nr / (s - 1L);

    // correction terms B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
    Complex poch = s;               // (s)_1
    Complex npow = npow_s / nr;     // N^{-s-1}
    Real fact(2.0);                 // (2k)!
    Complex acc = sum;
    bool certified = false;
    for (long k = 1; k <= kmax; ++k) {
      Complex term = poch * npow * (hp::bernoulli_2k(k) / fact);
      // Backlund: remainder after adding terms 1..k-1 is bounded by
      // |term_k| * |s + 2k - 1| / (sigma + 2k - 1)
      double denom = sigma + 2.0 * static_cast<double>(k) - 1.0;
      if (denom > 0) {
        Real bound = hp::abs(term) * hp::abs(s + (2 * k - 1)) / Real(denom);
        if (bound <= tol_rel * hp::abs(acc)) {
          certified = true;
          break;
        }
      }
      acc = acc + term;
      poch = poch * (s + (2 * k - 1)) * (s + 2 * k);
      npow = npow / (nr * nr);
      fact = fact * ((2 * k + 1) * (2 * k + 2));
    }
    if (certified) return acc;
  }
  throw ConvergenceError("zeta: Euler-Maclaurin remainder test failed at max N");
}

}  // namespace lav::core
