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
#ifndef LAVRIK_XRAY_XRAY_HPP
#define LAVRIK_XRAY_XRAY_HPP

// X-ray plots: the level sets Im f = 0 (f real: thick lines) and Re f = 0
// (f imaginary: thin lines) of a complex function on a rectangle, extracted
// by marching squares and polished by 1-D secant refinement.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "atlas/atlas.hpp"
#include "core/lambda.hpp"

namespace lav::xray {

using core::Complex;
using core::Real;

enum class Selector { L, Lambda, SLambda, Xi };

Selector selector_from_name(const std::string& name);

struct Rect {
  double x0, x1, y0, y1;
};

struct SignGrid {
  Rect region{};
  long nx = 0, ny = 0;
  Selector which = Selector::Lambda;
  long prec_bits = 64;
  // row-major, node (i,j) at x0 + i dx, y0 + j dy
  std::vector<std::int8_t> sign_re, sign_im;
  std::vector<double> val_re, val_im;  // saturated to +-1e300 for huge cells
  std::vector<std::uint8_t> masked;    // pole disk / failed evaluations
  long failures = 0;

  size_t idx(long i, long j) const { return static_cast<size_t>(j * nx + i); }
  double x_of(long i) const { return region.x0 + (region.x1 - region.x0) * static_cast<double>(i) / static_cast<double>(nx - 1); }
  double y_of(long j) const { return region.y0 + (region.y1 - region.y0) * static_cast<double>(j) / static_cast<double>(ny - 1); }
};

// Grid scan at 64 bits (escalated automatically when |f| underflows that);
// full ctx precision is only spent in curve refinement.
SignGrid sign_grid(Selector which, const Rect& region, long nx, long ny,
                   const PrecisionContext& ctx, long workers = 0);

enum class CurveKind { real_line, imaginary_line };  // thick / thin

struct XRayCurve {
  CurveKind kind = CurveKind::real_line;
  bool refined = false;
  std::vector<std::complex<double>> points;
};

std::vector<XRayCurve> extract_curves(const SignGrid& grid, bool refine,
                                      const PrecisionContext& ctx);

struct RenderOptions {
  double thick_width = 1.6;
  double thin_width = 0.55;
  double scale = 4.0;  // SVG units per coordinate unit
};

std::string render_svg(const std::vector<XRayCurve>& curves, const Rect& region,
                       const std::vector<atlas::ZeroRecord>* zeros, const RenderOptions& opt);
std::string render_csv(const std::vector<XRayCurve>& curves);
std::vector<XRayCurve> parse_csv(const std::string& csv);

// the scan/refine evaluator, exposed for tests
Complex eval_selector(Selector which, const Complex& s, const PrecisionContext& ctx);

}  // namespace lav::xray

#endif
