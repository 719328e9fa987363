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
#include <random>

#include "doctest.h"
#include "hp/errors.hpp"
#include "theta/theta.hpp"

using namespace lav;
using hp::Complex;
using hp::PrecScope;
using hp::Real;

// A = theta(1) = 1 + 2 sum e^{-pi n^2}
static const char* kA = "1.0864348112133080145753161215102234570702057072452";

TEST_CASE("theta(1) equals the constant A") {
  auto ctx = PrecisionContext::make(192);
  PrecScope ps(192);
  auto tv = theta::theta(Complex(1.0), ctx);
  Real want = Real::parse(kA);
  CHECK(hp::abs(tv.value.re - want) <= hp::pow2(-160));
  CHECK(tv.value.im.is_zero());
  CHECK(tv.tail_bound <= ctx.eps * hp::abs(tv.value));
  CHECK(tv.terms_used <= ctx.max_terms);
}

TEST_CASE("theta(20) dominant term") {
  // the margin over 2 e^{-20 pi} is the next term e^{-80 pi} ~ 1e-82
  // relative, so the open interval needs ~400 bits to resolve strictly
  auto ctx = PrecisionContext::make(400);
  PrecScope ps(400);
  Real gap = theta::psi(Complex(20.0), ctx).re * 2L;
  Real e20pi = hp::exp(-20L * hp::const_pi());
  CHECK(gap > 2L * e20pi);
  CHECK(gap < 3L * e20pi);
}

TEST_CASE("psi values and theta consistency") {
  auto ctx = PrecisionContext::make(192);
  PrecScope ps(192);
  // psi(1) = (A - 1)/2
  Real want = (Real::parse(kA) - 1L) / 2L;
  Complex p1 = theta::psi(Complex(1.0), ctx);
  CHECK(hp::abs(p1.re - want) <= hp::pow2(-160));
  // 2 psi(1) + 1 = theta(1)
  auto tv = theta::theta(Complex(1.0), ctx);
  CHECK(hp::abs(p1 * 2L + 1L - tv.value) <= hp::pow2(-180));
  // one-term truncation gap at x = 10
  Complex p10 = theta::psi(Complex(10.0), ctx);
  Real pi = hp::const_pi();
  CHECK(hp::abs(p10.re - hp::exp(-10L * pi)) < hp::exp(-30L * pi));
}

TEST_CASE("theta functional equation") {
  auto ctx = PrecisionContext::make(160);
  PrecScope ps(160);
  CHECK(theta::theta_functional_check(Complex(1.0), ctx) <= hp::pow2(-150));
  auto t4 = theta::theta(Complex(0.25), ctx);
  CHECK(theta::theta_functional_check(Complex(4.0), ctx) <= ctx.eps * hp::abs(t4.value));
  auto t1i = theta::theta(1L / Complex(1.0, 1.0), ctx);
  CHECK(theta::theta_functional_check(Complex(1.0, 1.0), ctx) <= ctx.eps * hp::abs(t1i.value));
}

TEST_CASE("theta: conjugation, monotonicity, domain") {
  auto ctx = PrecisionContext::make(128);
  PrecScope ps(128);
  Complex z(0.7, 1.3);
  auto a = theta::theta(z, ctx);
  auto b = theta::theta(hp::conj(z), ctx);
  CHECK(hp::abs(hp::conj(b.value) - a.value) <= hp::pow2(-118) * hp::abs(a.value));

  Real prev;
  bool first = true;
  for (double x : {0.05, 0.3, 0.8, 1.5, 3.0, 7.0, 15.0}) {
    auto tv = theta::theta(Complex(x), ctx);
    if (!first) CHECK(tv.value.re < prev);
    prev = tv.value.re;
    first = false;
  }
  CHECK_THROWS_AS(theta::theta(Complex(-1.0, 2.0), ctx), DomainError);
  CHECK_THROWS_AS(theta::psi(Complex(0.0), ctx), DomainError);
}

TEST_CASE("functional equation residual over random right half-plane samples") {
  auto ctx = PrecisionContext::make(128);
  PrecScope ps(128);
  std::mt19937_64 rng(907u);
  std::uniform_real_distribution<double> ur(0.15, 6.0), ui(-4.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    Complex z(ur(rng), ui(rng));
    auto lhs = theta::theta(1L / z, ctx);
    CHECK(theta::theta_functional_check(z, ctx) < ctx.eps * hp::abs(lhs.value));
  }
}

TEST_CASE("small Re z goes through the inversion") {
  auto ctx = PrecisionContext::make(128);
  PrecScope ps(128);
  // would need ~10^4 direct terms at Re z = 1e-4; the inversion keeps it trivial
  auto tv = theta::theta(Complex(1e-4), ctx);
  CHECK(tv.terms_used < 200);
  // theta(z) ~ z^{-1/2} for z -> 0+
  CHECK(hp::abs(tv.value.re - 100L) < 1e-6);
}
