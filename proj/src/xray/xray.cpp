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
#include "xray/xray.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "hp/errors.hpp"
#include "hp/gamma.hpp"

namespace lav::xray {

using hp::PrecScope;

Selector selector_from_name(const std::string& name) {
  if (name == "L") return Selector::L;
  if (name == "Lambda") return Selector::Lambda;
  if (name == "sLambda") return Selector::SLambda;
  if (name == "xi" || name == "Xi") return Selector::Xi;
  throw DomainError("unknown function selector '" + name + "'");
}

namespace {

// plan-backed evaluator for one rectangle; xi needs Lambda at 1-s too, so
// the plan's sigma span covers the reflected rectangle as well
class Evaluator {
 public:
  Evaluator(Selector which, const Rect& r, const PrecisionContext& ctx)
      : which_(which), ctx_(ctx) {
    double x0 = r.x0, x1 = r.x1;
    double tmax = std::max(std::abs(r.y0), std::abs(r.y1));
    if (which == Selector::Xi) {
      x0 = std::min(x0, 1.0 - r.x1);
      x1 = std::max(x1, 1.0 - r.x0);
    }
    plan_ = std::make_shared<core::LambdaPlan>(
        core::LambdaPlan::build(Complex(1.0), x0 - 0.2, x1 + 0.2, tmax + 0.5, ctx));
  }

  Complex operator()(const Complex& s) const {
    PrecScope ps(plan_->prec());
    switch (which_) {
      case Selector::Lambda:
        return plan_->lambda(s);
      case Selector::SLambda:
        return plan_->s_lambda(s);
      case Selector::L: {
        if (hp::abs(s) < 1e-12) return Complex(-0.5);  // limit of s Lambda pi^{s/2}/ (s Gamma(s/2))
        Complex g = plan_->s_lambda(s);
        Complex w = s / 2L;
        return g * hp::exp(w * hp::log(hp::const_pi())) * hp::reciprocal_gamma(w, ctx_) / s;
      }
      case Selector::Xi: {
        // (s-1)/2 * sLambda(s) - s/2 * (1-s)Lambda(1-s): pole-free
        Complex g1 = plan_->s_lambda(s);
        Complex g2 = plan_->s_lambda(1L - s);
        return (s - 1L) / 2L * g1 - s / 2L * g2;
      }
    }
    return Complex(0.0);
  }

  long prec() const { return plan_->prec(); }

 private:
  Selector which_;
  PrecisionContext ctx_;
  std::shared_ptr<core::LambdaPlan> plan_;
};

double saturate(const Real& v) {
  if (v.is_zero()) return 0.0;
  double d = v.to_double();
  if (std::isfinite(d)) return d;
  return v.sign() > 0 ? 1e300 : -1e300;
}

std::int8_t sgn(const Real& v) { return static_cast<std::int8_t>(v.sign()); }

}  // namespace

SignGrid sign_grid(Selector which, const Rect& region, long nx, long ny,
                   const PrecisionContext& ctx, long workers) {
  if (nx < 2 || ny < 2) throw DomainError("sign_grid: need nx, ny >= 2");
  SignGrid g;
  g.region = region;
  g.nx = nx;
  g.ny = ny;
  g.which = which;
  g.prec_bits = 64;
  size_t n = static_cast<size_t>(nx * ny);
  g.sign_re.assign(n, 0);
  g.sign_im.assign(n, 0);
  g.val_re.assign(n, 0.0);
  g.val_im.assign(n, 0.0);
  g.masked.assign(n, 0);

  PrecisionContext scan_ctx = PrecisionContext::make(64);
  Evaluator scan(which, region, scan_ctx);
  Evaluator precise(which, region, ctx.bits > 96 ? ctx : ctx.with_bits(128));

  if (workers <= 0) workers = static_cast<long>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  std::atomic<long> next_row{0};
  std::atomic<long> failures{0};

  auto run_rows = [&]() {
    for (;;) {
      long j = next_row.fetch_add(1);
      if (j >= ny) return;
      long row_scale = -(1L << 40);
      for (long i = 0; i < nx; ++i) {
        Complex s(g.x_of(i), g.y_of(j));
        if (which == Selector::Lambda && hp::abs(s) < 0.1) {
          g.masked[g.idx(i, j)] = 1;  // pole disk
          continue;
        }
        try {
          Complex v = scan(s);
          size_t k = g.idx(i, j);
          g.sign_re[k] = sgn(v.re);
          g.sign_im[k] = sgn(v.im);
          g.val_re[k] = saturate(v.re);
          g.val_im[k] = saturate(v.im);
          long e = hp::exp2_scale(v);
          if (e > row_scale) row_scale = e;
        } catch (const std::exception&) {
          g.masked[g.idx(i, j)] = 1;
          failures.fetch_add(1);
        }
      }
      // nodes far below the row's scale get a precise second pass so the
      // stored sign is trustworthy
      for (long i = 0; i < nx; ++i) {
        size_t k = g.idx(i, j);
        if (g.masked[k]) continue;
        long e = std::max(std::abs(g.val_re[k]), std::abs(g.val_im[k])) > 0
                     ? static_cast<long>(std::log2(std::max(std::abs(g.val_re[k]),
                                                            std::abs(g.val_im[k])) + 1e-300))
                     : -(1L << 40);
        if (e < row_scale - 40) {
          try {
            Complex v = precise(Complex(g.x_of(i), g.y_of(j)));
            g.sign_re[k] = sgn(v.re);
            g.sign_im[k] = sgn(v.im);
            g.val_re[k] = saturate(v.re);
            g.val_im[k] = saturate(v.im);
          } catch (const std::exception&) {
            g.masked[k] = 1;
            failures.fetch_add(1);
          }
        }
      }
    }
  };

  std::vector<std::thread> pool;
  for (long w = 0; w < workers; ++w) pool.emplace_back(run_rows);
  for (auto& th : pool) th.join();
  g.failures = failures.load();
  return g;
}

namespace {

struct Crossing {
  double x, y;
  long i0, j0, i1, j1;  // bracketing grid nodes
};

// marching squares over one component; component = 0 -> Re (imaginary_line
// curves), 1 -> Im (real_line curves)
std::vector<XRayCurve> march_component(const SignGrid& g, int component, const Evaluator& ev) {
  const auto& sign = component == 0 ? g.sign_re : g.sign_im;
  const auto& val = component == 0 ? g.val_re : g.val_im;
  auto inside = [&](size_t k) { return sign[k] >= 0; };

  // edge ids: horizontal edge (i,j)->(i+1,j): j*nx+i; vertical +nx*ny
  const long hbase = 0, vbase = g.nx * g.ny;
  std::map<long, Crossing> cross;
  std::map<long, std::vector<long>> adj;

  auto edge_cross = [&](long id, long i0, long j0, long i1, long j1) {
    auto it = cross.find(id);
    if (it != cross.end()) return;
    double a = val[g.idx(i0, j0)], b = val[g.idx(i1, j1)];
    double t = (a == b) ? 0.5 : a / (a - b);
    t = std::clamp(t, 0.0, 1.0);
    Crossing c;
    c.x = g.x_of(i0) + (g.x_of(i1) - g.x_of(i0)) * t;
    c.y = g.y_of(j0) + (g.y_of(j1) - g.y_of(j0)) * t;
    c.i0 = i0;
    c.j0 = j0;
    c.i1 = i1;
    c.j1 = j1;
    cross[id] = c;
  };

  auto link = [&](long e1, long e2) {
    adj[e1].push_back(e2);
    adj[e2].push_back(e1);
  };

  for (long j = 0; j + 1 < g.ny; ++j) {
    for (long i = 0; i + 1 < g.nx; ++i) {
      size_t k00 = g.idx(i, j), k10 = g.idx(i + 1, j), k11 = g.idx(i + 1, j + 1),
             k01 = g.idx(i, j + 1);
      if (g.masked[k00] || g.masked[k10] || g.masked[k11] || g.masked[k01]) continue;
      int c00 = inside(k00), c10 = inside(k10), c11 = inside(k11), c01 = inside(k01);
      int config = (c00 << 0) | (c10 << 1) | (c11 << 2) | (c01 << 3);
      if (config == 0 || config == 15) continue;
      long eb = hbase + j * g.nx + i;              // bottom
      long et = hbase + (j + 1) * g.nx + i;        // top
      long el = vbase + j * g.nx + i;              // left
      long er = vbase + j * g.nx + (i + 1);        // right
      auto mk = [&](long id) {
        if (id == eb) edge_cross(id, i, j, i + 1, j);
        else if (id == et) edge_cross(id, i, j + 1, i + 1, j + 1);
        else if (id == el) edge_cross(id, i, j, i, j + 1);
        else edge_cross(id, i + 1, j, i + 1, j + 1);
      };
      auto seg = [&](long a, long b) {
        mk(a);
        mk(b);
        link(a, b);
      };
      switch (config) {
        case 1: case 14: seg(el, eb); break;
        case 2: case 13: seg(eb, er); break;
        case 3: case 12: seg(el, er); break;
        case 4: case 11: seg(er, et); break;
        case 6: case 9:  seg(eb, et); break;
        case 7: case 8:  seg(el, et); break;
        case 5: case 10: {
          // saddle: decide by the cell center sign
          Complex v = ev(Complex((g.x_of(i) + g.x_of(i + 1)) / 2, (g.y_of(j) + g.y_of(j + 1)) / 2));
          int mid = (component == 0 ? v.re.sign() : v.im.sign()) >= 0;
          bool same_as_00 = (mid == c00);
          if (config == 5) {
            if (same_as_00) { seg(el, et); seg(eb, er); }
            else { seg(el, eb); seg(er, et); }
          } else {
            if (same_as_00) { seg(el, eb); seg(er, et); }
            else { seg(el, et); seg(eb, er); }
          }
          break;
        }
        default: break;
      }
    }
  }

  // walk chains: endpoints (degree 1) first, then leftover loops
  std::map<long, bool> used;
  std::vector<XRayCurve> out;
  auto walk = [&](long start) {
    XRayCurve c;
    c.kind = component == 0 ? CurveKind::imaginary_line : CurveKind::real_line;
    long prev = -1, cur = start;
    while (cur >= 0 && !used[cur]) {
      used[cur] = true;
      const Crossing& cr = cross[cur];
      c.points.emplace_back(cr.x, cr.y);
      long nxt = -1;
      for (long nb : adj[cur])
        if (nb != prev && !used[nb]) {
          nxt = nb;
          break;
        }
      prev = cur;
      cur = nxt;
    }
    return c;
  };
  std::vector<std::pair<long, Crossing>> items(cross.begin(), cross.end());
  for (const auto& [id, c] : items)
    if (adj[id].size() == 1 && !used[id]) {
      XRayCurve cv = walk(id);
      if (cv.points.size() >= 2) out.push_back(std::move(cv));
    }
  for (const auto& [id, c] : items)
    if (!used[id]) {
      XRayCurve cv = walk(id);
      if (cv.points.size() >= 2) {
        cv.points.push_back(cv.points.front());  // close the loop
        out.push_back(std::move(cv));
      }
    }

  return out;
}

}  // namespace

std::vector<XRayCurve> extract_curves(const SignGrid& grid, bool refine,
                                      const PrecisionContext& ctx) {
  Evaluator scan(grid.which, grid.region, PrecisionContext::make(64));
  Evaluator precise(grid.which, grid.region, ctx.bits >= 96 ? ctx : ctx.with_bits(128));

  std::vector<XRayCurve> curves;
  auto re_curves = march_component(grid, 0, scan);
  auto im_curves = march_component(grid, 1, scan);
  curves.insert(curves.end(), re_curves.begin(), re_curves.end());
  curves.insert(curves.end(), im_curves.begin(), im_curves.end());

  if (!refine) return curves;

  double dx = (grid.region.x1 - grid.region.x0) / static_cast<double>(grid.nx - 1);
  double dy = (grid.region.y1 - grid.region.y0) / static_cast<double>(grid.ny - 1);
  PrecScope ps(ctx.bits >= 96 ? ctx.bits : 128);
  for (auto& cv : curves) {
    int component = cv.kind == CurveKind::imaginary_line ? 0 : 1;
    for (auto& p : cv.points) {
      // every vertex lies on one grid edge: snap to it and bisect between
      // the edge's endpoints
      double fx = (p.real() - grid.region.x0) / dx;
      double fy = (p.imag() - grid.region.y0) / dy;
      bool on_vertical_edge = std::abs(fx - std::round(fx)) < std::abs(fy - std::round(fy));
      Complex a, b;
      if (on_vertical_edge) {
        double x = grid.region.x0 + std::round(fx) * dx;
        double ylo = grid.region.y0 + std::floor(fy) * dy;
        a = Complex(x, ylo);
        b = Complex(x, ylo + dy);
      } else {
        double y = grid.region.y0 + std::round(fy) * dy;
        double xlo = grid.region.x0 + std::floor(fx) * dx;
        a = Complex(xlo, y);
        b = Complex(xlo + dx, y);
      }
      auto comp = [&](const Complex& s) {
        Complex v = precise(s);
        return component == 0 ? v.re : v.im;
      };
      Real fa = comp(a);
      if (fa.sign() == comp(b).sign()) continue;  // not bracketed (saturated cell); keep
      Complex lo = a, hi = b;
      for (int it = 0; it < 80; ++it) {
        Complex mid = (lo + hi) / 2L;
        Complex v = precise(mid);
        Real fm = component == 0 ? v.re : v.im;
        if (hp::abs(fm) < 1e-8 * (hp::abs(v) + Real(1e-30)) || it == 79) {
          p = {mid.re.to_double(), mid.im.to_double()};
          break;
        }
        if (fm.sign() == fa.sign()) {
          lo = mid;
          fa = fm;
        } else {
          hi = mid;
        }
      }
    }
    cv.refined = true;
  }
  return curves;
}

std::string render_svg(const std::vector<XRayCurve>& curves, const Rect& region,
                       const std::vector<atlas::ZeroRecord>* zeros, const RenderOptions& opt) {
  double w = (region.x1 - region.x0) * opt.scale;
  double h = (region.y1 - region.y0) * opt.scale;
  auto X = [&](double x) { return (x - region.x0) * opt.scale; };
  auto Y = [&](double y) { return (region.y1 - y) * opt.scale; };
  char buf[160];
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 %.2f %.2f\" "
                "width=\"%.0f\" height=\"%.0f\">\n",
                w, h, w, h);
  out << buf;
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& cv : curves) {
    bool thick = cv.kind == CurveKind::real_line;
    std::snprintf(buf, sizeof buf,
                  "<polyline class=\"%s\" fill=\"none\" stroke=\"%s\" stroke-width=\"%.2f\" points=\"",
                  thick ? "thick" : "thin", thick ? "#000000" : "#808080",
                  thick ? opt.thick_width : opt.thin_width);
    out << buf;
    for (const auto& p : cv.points) {
      std::snprintf(buf, sizeof buf, "%.4f,%.4f ", X(p.real()), Y(p.imag()));
      out << buf;
    }
    out << "\"/>\n";
  }
  if (zeros) {
    for (const auto& z : *zeros) {
      double re = z.b.re.to_double(), im = z.b.im.to_double();
      if (re < region.x0 || re > region.x1 || im < region.y0 || im > region.y1) continue;
      std::snprintf(buf, sizeof buf,
                    "<circle class=\"zero\" cx=\"%.4f\" cy=\"%.4f\" r=\"%.2f\" fill=\"#c01010\"/>\n",
                    X(re), Y(im), opt.scale * 0.45);
      out << buf;
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_csv(const std::vector<XRayCurve>& curves) {
  std::ostringstream out;
  out << "kind,idx,re,im\n";
  char buf[96];
  for (size_t i = 0; i < curves.size(); ++i) {
    const char* kind = curves[i].kind == CurveKind::real_line ? "real" : "imaginary";
    for (const auto& p : curves[i].points) {
      std::snprintf(buf, sizeof buf, "%s,%zu,%.17g,%.17g\n", kind, i, p.real(), p.imag());
      out << buf;
    }
  }
  return out.str();
}

std::vector<XRayCurve> parse_csv(const std::string& csv) {
  std::vector<XRayCurve> out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  long cur_idx = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kind, idx_s, re_s, im_s;
    std::getline(ls, kind, ',');
    std::getline(ls, idx_s, ',');
    std::getline(ls, re_s, ',');
    std::getline(ls, im_s, ',');
    long idx = std::stol(idx_s);
    if (idx != cur_idx) {
      XRayCurve c;
      c.kind = kind == "real" ? CurveKind::real_line : CurveKind::imaginary_line;
      out.push_back(c);
      cur_idx = idx;
    }
    out.back().points.emplace_back(std::stod(re_s), std::stod(im_s));
  }
  return out;
}

Complex eval_selector(Selector which, const Complex& s, const PrecisionContext& ctx) {
  double x = s.re.to_double(), y = s.im.to_double();
  Rect r{x - 1, x + 1, y - 1, y + 1};
  Evaluator ev(which, r, ctx);
  return ev(s);
}

}  // namespace lav::xray
