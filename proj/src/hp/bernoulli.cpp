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
#include "hp/bernoulli.hpp"

#include <gmp.h>

#include <memory>
#include <mutex>
#include <vector>

namespace lav::hp {

namespace {

struct Rat {
  mpq_t v;
  Rat() { mpq_init(v); }
  ~Rat() { mpq_clear(v); }
  Rat(const Rat&) = delete;
  Rat& operator=(const Rat&) = delete;
};

struct RationalCache {
  std::mutex mu;
  std::vector<std::unique_ptr<Rat>> b2k;  // b2k[k] = B_{2k}, k >= 1 (index 0 unused)

  // Tangent numbers T_1..T_n by the integer triangle recurrence, then
  // B_{2k} = (-1)^{k-1} * 2k * T_k / (2^{2k} (2^{2k} - 1)).
  void grow(long want) {
    if (want < static_cast<long>(b2k.size())) return;
    long n = want + want / 2 + 8;
    std::vector<std::unique_ptr<Rat>> table;
    table.resize(static_cast<size_t>(n) + 1);

    std::vector<mpz_t> t(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) mpz_init(t[static_cast<size_t>(i)]);
    mpz_set_ui(t[1], 1);
    for (long k = 2; k <= n; ++k)
      mpz_mul_ui(t[static_cast<size_t>(k)], t[static_cast<size_t>(k - 1)],
                 static_cast<unsigned long>(k - 1));
    mpz_t tmp, den;
    mpz_init(tmp);
    mpz_init(den);
    for (long k = 2; k <= n; ++k) {
      for (long j = k; j <= n; ++j) {
        // T[j] = (j-k)*T[j-1] + (j-k+2)*T[j]
        mpz_mul_ui(tmp, t[static_cast<size_t>(j - 1)], static_cast<unsigned long>(j - k));
        mpz_mul_ui(t[static_cast<size_t>(j)], t[static_cast<size_t>(j)],
                   static_cast<unsigned long>(j - k + 2));
        mpz_add(t[static_cast<size_t>(j)], t[static_cast<size_t>(j)], tmp);
      }
    }
    for (long k = 1; k <= n; ++k) {
      auto r = std::make_unique<Rat>();
      mpz_mul_ui(tmp, t[static_cast<size_t>(k)], static_cast<unsigned long>(2 * k));
      if (k % 2 == 0) mpz_neg(tmp, tmp);
      mpz_set_ui(den, 1);
      mpz_mul_2exp(den, den, static_cast<mp_bitcnt_t>(2 * k));
      mpz_sub_ui(den, den, 1);
      mpz_mul_2exp(den, den, static_cast<mp_bitcnt_t>(2 * k));
      mpq_set_num(r->v, tmp);
      mpq_set_den(r->v, den);
      mpq_canonicalize(r->v);
      table[static_cast<size_t>(k)] = std::move(r);
    }
    mpz_clear(den);
    mpz_clear(tmp);
    for (long i = 0; i <= n; ++i) mpz_clear(t[static_cast<size_t>(i)]);
    b2k = std::move(table);
  }
};

RationalCache& cache() {
  static RationalCache c;
  return c;
}

}  // namespace

Real bernoulli_2k(long k) {
  if (k == 0) return Real(1L);
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  c.grow(k);
  Real r;
  mpfr_set_q(r.raw(), c.b2k[static_cast<size_t>(k)]->v, MPFR_RNDN);
  return r;
}

}  // namespace lav::hp
