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
#include "hp/bernoulli.hpp"
#include "hp/errors.hpp"
#include "hp/gamma.hpp"
#include "hp/quadrature.hpp"

using namespace lav;
using hp::Complex;
using hp::PrecScope;
using hp::Real;

namespace {

bool close_rel(const Complex& got, const Complex& want, const Real& tol) {
  return hp::abs(got - want) <= tol * hp::max(hp::abs(want), hp::pow2(-100000));
}

bool close_abs(const Real& got, const Real& want, const Real& tol) {
  return hp::abs(got - want) <= tol;
}

// Independent log Gamma: one fixed large shift, then the Stirling series to
// a fixed deep order. Slower than the library path but shares none of its
// shift/order decisions.
Complex lngamma_oracle(const Complex& z, long bits) {
  PrecScope ps(bits + 160);
  long n = 600 + static_cast<long>(hp::abs(z.im).to_double());
  Complex logs;
  for (long k = 0; k < n; ++k) logs = logs + hp::log(z + k);
  Complex w = z + n;
  Complex lw = hp::log(w);
  Complex acc = (w - Complex(0.5)) * lw - w + Complex(hp::log(hp::const_pi() * 2L) / 2L);
  Complex r = 1L / w, r2 = r * r, rp = r;
  for (long k = 1; k <= 80; ++k) {
    acc = acc + rp * (hp::bernoulli_2k(k) / ((2 * k) * (2 * k - 1)));
    rp = rp * r2;
  }
  return acc - logs;
}

std::mt19937_64 rng(20260810u);

Complex random_complex(double re_lo, double re_hi, double im_lo, double im_hi) {
  std::uniform_real_distribution<double> ur(re_lo, re_hi), ui(im_lo, im_hi);
  return Complex(ur(rng), ui(rng));
}

}  // namespace

TEST_CASE("Real: parse / print round trip") {
  PrecScope ps(192);
  Real x = Real::parse("-3.14159265358979323846264338327950288419716939937510");
  CHECK(x < 0.0);
  Real y = Real::parse(x.str());
  CHECK(x == y);
  CHECK(Real::parse("0").is_zero());
  CHECK_THROWS_AS(Real::parse("not a number"), std::invalid_argument);
}

TEST_CASE("PrecisionContext invariants") {
  CHECK_THROWS_AS(PrecisionContext::make(32), DomainError);
  CHECK_THROWS_AS(PrecisionContext::make(128, -10), DomainError);
  auto ctx = PrecisionContext::make(128);
  CHECK(ctx.eps == hp::pow2(-120));
}

TEST_CASE("Bernoulli numbers: exact small cases") {
  PrecScope ps(160);
  struct Case {
    long k;
    long num, den;
  } cases[] = {{1, 1, 6}, {2, -1, 30}, {3, 1, 42}, {4, -1, 30},
               {5, 5, 66}, {6, -691, 2730}, {7, 7, 6}, {8, -3617, 510},
               {10, -174611, 330}};
  for (const auto& c : cases) {
    Real want = Real(c.num) / c.den;
    CHECK(hp::abs(hp::bernoulli_2k(c.k) - want) <= hp::pow2(-150) * hp::abs(want));
  }
}

TEST_CASE("log_gamma: exact and oracle values") {
  auto ctx = PrecisionContext::make(256);
  PrecScope ps(256);
  CHECK(hp::abs(hp::log_gamma(Complex(1.0), ctx).re) <= hp::pow2(-250));
  CHECK(close_rel(hp::log_gamma(Complex(0.5), ctx),
                  Complex(hp::log(hp::const_pi()) / 2L), hp::pow2(-240)));
  // Gamma(5) = 24
  CHECK(close_rel(hp::log_gamma(Complex(5.0), ctx), Complex(hp::log(Real(24.0))),
                  hp::pow2(-240)));

  for (const Complex& z : {Complex(0.25, 50.0), Complex(7.5, -3.0), Complex(-4.3, 0.6),
                           Complex(0.25, 500.0), Complex(-0.75, -12.0)}) {
    Complex want = lngamma_oracle(z, 256);
    CHECK(close_rel(hp::log_gamma(z, ctx), want, hp::pow2(-244)));
  }
  CHECK_THROWS_AS(hp::log_gamma(Complex(0.0), ctx), PoleError);
  CHECK_THROWS_AS(hp::log_gamma(Complex(-3.0), ctx), PoleError);
}

TEST_CASE("log_gamma: conjugation symmetry and precision monotonicity") {
  auto ctx = PrecisionContext::make(192);
  PrecScope ps(192);
  for (int i = 0; i < 6; ++i) {
    Complex z = random_complex(-8.0, 12.0, 0.1, 40.0);
    Complex a = hp::log_gamma(z, ctx);
    Complex b = hp::log_gamma(hp::conj(z), ctx);
    CHECK(hp::abs(hp::conj(b) - a) <= hp::pow2(-184) * hp::abs(a));
    Complex hi = hp::log_gamma(z, PrecisionContext::make(192 + 64));
    CHECK(hp::abs(hi - a) <= hp::pow2(-176) * hp::abs(a));
  }
}

TEST_CASE("gamma_upper: closed forms and recurrence") {
  auto ctx = PrecisionContext::make(192);
  PrecScope ps(192);
  // Gamma(1, z) = e^{-z}
  CHECK(close_rel(hp::gamma_upper(Complex(1.0), Complex(1.0), ctx),
                  Complex(hp::exp(Real(-1.0))), hp::pow2(-184)));
  CHECK(close_rel(hp::gamma_upper(Complex(1.0), Complex(2.5, 1.0), ctx),
                  hp::exp(Complex(-2.5, -1.0)), hp::pow2(-184)));
  // Gamma(a+1, z) = a Gamma(a, z) + z^a e^{-z}
  for (int i = 0; i < 8; ++i) {
    Complex a = random_complex(-3.0, 6.0, -5.0, 5.0);
    Complex z = random_complex(0.3, 9.0, -6.0, 6.0);
    Complex lhs = hp::gamma_upper(a + 1L, z, ctx);
    Complex rhs = hp::gamma_upper(a, z, ctx) * a + hp::exp(a * hp::log(z) - z);
    CHECK(hp::abs(lhs - rhs) <= hp::pow2(-170) * hp::max(hp::abs(lhs), Real(1.0)));
  }
  CHECK_THROWS_AS(hp::gamma_upper(Complex(-2.0), Complex(1.0), ctx), PoleError);
  CHECK_THROWS_AS(hp::gamma_upper(Complex(1.0), Complex(-1.0), ctx), DomainError);
}

TEST_CASE("gamma_upper: quadrature oracle at a = 1/4 + 50i, z = pi") {
  auto ctx = PrecisionContext::make(192);
  // oracle at doubled precision: integral_0^inf (z+x)^{a-1} e^{-(z+x)} dx
  auto ctx2 = PrecisionContext::make(420);
  PrecScope ps(420);
  Complex a(0.25, 50.0);
  Complex z = Complex(hp::const_pi());
  auto f = [&](const Real& x) { return hp::exp((a - 1L) * hp::log(z + Complex(x)) - (z + Complex(x))); };
  Complex want = hp::integrate_decaying(f, Real(0.0), 52.0, 1.0, ctx2).value;
  Complex got = hp::gamma_upper(a, z, ctx);
  CHECK(hp::abs(got - want) <= hp::pow2(-180) * hp::abs(want));
}

TEST_CASE("gamma_upper: series and continued-fraction routes agree on the overlap") {
  auto ctx = PrecisionContext::make(160);
  PrecScope ps(160);
  for (const Complex& a : {Complex(2.5, 6.0), Complex(-1.5, 3.0), Complex(4.0, -8.0)}) {
    Real r = hp::abs(a) + 3L;  // inside the series window, CF still fine
    Complex z{r, Real(1.0)};
    Complex s = hp::gamma_upper(a, z, ctx);
    Complex c = hp::gamma_upper_cf(a, z, ctx);
    CHECK(hp::abs(s - c) <= ctx.eps * hp::abs(s));
  }
}

TEST_CASE("integrate_decaying: closed forms") {
  auto ctx = PrecisionContext::make(192);
  PrecScope ps(192);
  Real pi = hp::const_pi();
  // integral_1^inf e^{-pi x} dx = e^{-pi}/pi
  auto f1 = [&](const Real& x) { return Complex(hp::exp(-pi * x)); };
  Complex v1 = hp::integrate_decaying(f1, Real(1.0), 0.0, 3.1, ctx).value;
  CHECK(close_rel(v1, Complex(hp::exp(-pi) / pi), hp::pow2(-182)));
  // integral_0^inf x e^{-x} dx = 1
  auto f2 = [&](const Real& x) { return Complex(x * hp::exp(-x)); };
  Complex v2 = hp::integrate_decaying(f2, Real(0.0), 0.0, 1.0, ctx).value;
  CHECK(close_rel(v2, Complex(1.0), hp::pow2(-182)));
  CHECK_THROWS_AS(hp::integrate_decaying(f2, Real(-1.0), 0.0, 1.0, ctx), DomainError);
}

TEST_CASE("integrate_decaying: oscillatory self-consistency across precisions") {
  // x^{-3/4} cos(50 log x) e^{-pi x} on [1, inf)
  auto eval = [&](long bits) {
    auto ctx = PrecisionContext::make(bits);
    PrecScope ps(bits + 8);
    Real pi = hp::const_pi();
    auto f = [&](const Real& x) {
      Real lx = hp::log(x);
      return Complex(hp::pow(x, Real(-0.75)) * hp::cos(50L * lx) * hp::exp(-pi * x));
    };
    return hp::integrate_decaying(f, Real(1.0), 50.0, 3.1, ctx).value;
  };
  Complex lo = eval(128), hi = eval(192);
  CHECK(hp::abs(lo - hi) <= hp::pow2(-116) * hp::abs(hi));
}

TEST_CASE("kernel conjugation symmetry") {
  auto ctx = PrecisionContext::make(128);
  PrecScope ps(128);
  for (int i = 0; i < 5; ++i) {
    Complex a = random_complex(0.3, 5.0, 0.5, 8.0);
    Complex z = random_complex(0.5, 12.0, 0.1, 6.0);
    Complex g = hp::gamma_upper(a, z, ctx);
    Complex gc = hp::gamma_upper(hp::conj(a), hp::conj(z), ctx);
    CHECK(hp::abs(hp::conj(gc) - g) <= hp::pow2(-118) * hp::abs(g));
  }
}
