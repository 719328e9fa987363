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
#include "atlas/winding.hpp"

#include <cmath>
#include <vector>

namespace lav::atlas {

using hp::PrecScope;

namespace {

struct Walker {
  const core::LambdaPlan& plan;
  double total = 0.0;  // accumulated phase, double is plenty for < 1e-3 closure
  long evals = 0;

  Complex g(double re, double im) {
    ++evals;
    return plan.s_lambda(Complex(re, im));
  }

  static double phase_step(const Complex& from, const Complex& to) {
    return hp::arg(to / from).to_double();
  }

  // phase along the segment a -> b given endpoint values, refining until
  // each step turns by less than pi/2
  void segment(double ax, double ay, const Complex& ga, double bx, double by, const Complex& gb,
               int depth) {
    double d = phase_step(ga, gb);
    if (std::abs(d) < M_PI / 2) {
      total += d;
      return;
    }
    if (depth > 42 || (std::abs(ax - bx) < 1e-13 && std::abs(ay - by) < 1e-13))
      throw BoundaryZeroError("winding: phase step would not settle; zero on or near boundary");
    double mx = (ax + bx) / 2, my = (ay + by) / 2;
    Complex gm = g(mx, my);
    segment(ax, ay, ga, mx, my, gm, depth + 1);
    segment(mx, my, gm, bx, by, gb, depth + 1);
  }

  void edge(double ax, double ay, double bx, double by, double step, Complex& carry, bool first) {
    double len = std::hypot(bx - ax, by - ay);
    long n = std::max<long>(2, static_cast<long>(std::ceil(len / step)));
    Complex prev = first ? g(ax, ay) : carry;
    for (long i = 1; i <= n; ++i) {
      double x = ax + (bx - ax) * static_cast<double>(i) / static_cast<double>(n);
      double y = ay + (by - ay) * static_cast<double>(i) / static_cast<double>(n);
      Complex cur = g(x, y);
      segment(ax + (bx - ax) * static_cast<double>(i - 1) / static_cast<double>(n),
              ay + (by - ay) * static_cast<double>(i - 1) / static_cast<double>(n), prev, x, y, cur,
              0);
      prev = cur;
    }
    carry = prev;
  }
};

}  // namespace

long winding_number(const core::LambdaPlan& plan, const SearchRegion& region) {
  const Box& b = region.box;
  double tmax = std::max(std::abs(b.t0), std::abs(b.t1));
  double step = region.step0 > 0 ? region.step0 : std::min(0.25, 1.0 / std::log(2.0 + tmax));
  Walker w{plan};
  Complex carry;
  w.edge(b.s0, b.t0, b.s1, b.t0, step, carry, true);
  w.edge(b.s1, b.t0, b.s1, b.t1, step, carry, false);
  w.edge(b.s1, b.t1, b.s0, b.t1, step, carry, false);
  w.edge(b.s0, b.t1, b.s0, b.t0, step, carry, false);
  double turns = w.total / (2 * M_PI);
  double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-3)
    throw NonClosureError("winding: total phase is not an integer multiple of 2 pi");
  return static_cast<long>(rounded);
}

long winding_number_perturbed(const core::LambdaPlan& plan, SearchRegion region) {
  double tmax = std::max(std::abs(region.box.t0), std::abs(region.box.t1));
  double step = region.step0 > 0 ? region.step0 : std::min(0.25, 1.0 / std::log(2.0 + tmax));
  for (int attempt = 0;; ++attempt) {
    try {
      return winding_number(plan, region);
    } catch (const ConvergenceError&) {
      if (attempt >= 4) throw;
      double nudge = step / 2;
      region.box.s0 -= nudge;
      region.box.s1 += nudge;
      region.box.t0 -= nudge;
      region.box.t1 += nudge;
    }
  }
}

}  // namespace lav::atlas
