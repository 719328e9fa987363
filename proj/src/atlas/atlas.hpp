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
#ifndef LAVRIK_ATLAS_ATLAS_HPP
#define LAVRIK_ATLAS_ATLAS_HPP

// Enumeration and certification of the zeros b_n of s*Lambda(s): one real
// zero b_0 ~ 11.2517, the rest conjugate pairs in Re s >= b_0. Only the
// upper-half representative of each pair is stored; b_{-n} = conj(b_n).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "atlas/winding.hpp"
#include "core/lambda.hpp"

namespace lav::atlas {

struct ZeroRecord {
  long n = -1;          // 0 = real zero; n >= 1 upper-half pair member
  Complex b;
  Real residual;        // |s Lambda(s)| at b
  Box cert_box;         // winding-1 certificate
  long bits = 0;
  bool warn_multiple = false;  // Newton convergence looked linear
};

// Newton refinement from a seed inside a winding-1 box, then a shrunk-box
// winding certificate. Final polish runs at 2.2x ctx.bits so a re-evaluation
// at doubled precision shows the residual collapsing.
ZeroRecord refine_zero(const Complex& seed, const PrecisionContext& ctx);

struct EnumerateOptions {
  long workers = 0;              // 0 = hardware concurrency
  std::string resume_path;       // JSONL to extend (may equal out_path)
  std::string out_path;          // JSONL written incrementally + rewritten sorted
  std::function<void(const ZeroRecord&)> on_zero;  // progress callback
};

struct AtlasResult {
  std::vector<ZeroRecord> zeros;  // sorted: b0 first, then |b| ascending
  long boxes_scanned = 0;
  long resumed = 0;               // records taken from the resume file
  double sigma_bound = 0;
};

// All zeros with 0 < Im b <= t_max plus b0. The right edge comes from the
// empirical gamma / log(gamma/2pi) >= 2 beta / pi law padded by 1.5 and is
// then validated by a winding walk over the wider box.
AtlasResult enumerate_zeros(double t_max, const PrecisionContext& ctx,
                            const EnumerateOptions& opt = {});

// Argument-principle count over the full search region; equals zeros.size()
// for a complete atlas (b0 included when the region reaches below t = 0).
long region_winding_total(double t_max, double sigma_bound, const PrecisionContext& ctx);

struct StatsRow {
  double x;
  long n_empirical;
  double n_formula;
  double residual;  // R = empirical - formula
};

struct ZeroLawRow {
  long n;
  double beta, gamma;
  double gamma_law_residual;  // gamma - beta log(beta / 4 pi)
  bool inequality_ok;         // gamma / log(gamma/2pi) >= 2 beta / pi
};

struct ZeroStats {
  std::vector<StatsRow> counts;
  std::vector<ZeroLawRow> laws;
};

// N(x) = x/4pi log(x/2pi) - x/4pi + sqrt(same) + R against the empirical
// counts; throws DomainError when x exceeds the certified coverage t_max.
ZeroStats zero_stats(const std::vector<ZeroRecord>& zeros, const std::vector<double>& x_grid,
                     double t_max_covered);

struct HalfplaneReport {
  bool ok = true;
  double min_re = 0;
  std::vector<long> violations;  // indices into zeros
};

// min Re b >= b0 - 1e-6 and every stored zero in the (closed) first quadrant.
HalfplaneReport verify_halfplane(const std::vector<ZeroRecord>& zeros);

// JSONL row: {"n":..,"re":"..","im":"..","residual":"..","bits":..,"box":[..]}
std::string zero_to_jsonl(const ZeroRecord& z);
std::vector<ZeroRecord> load_jsonl(const std::string& path);
void save_jsonl(const std::string& path, const std::vector<ZeroRecord>& zeros);

}  // namespace lav::atlas

#endif
