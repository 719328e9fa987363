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
#include "atlas/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "json.hpp"

namespace lav::atlas {

using hp::PrecScope;

namespace {

constexpr double kSigmaLow = 10.05;   // b0 - 1.2, fixed left edge of every scan
constexpr double kBoxStep = 2.0;
constexpr double kTBand = 64.0;
constexpr double kSigmaBand = 32.0;
constexpr long kScanBits = 96;

double sigma_bound_from_law(double t_max) {
  // gamma / log(gamma/2pi) >= 2 beta / pi  =>  beta <= pi gamma / (2 log(gamma/2pi))
  if (t_max < 20.0) return 18.0;
  double beta = M_PI * t_max / (2.0 * std::log(t_max / (2.0 * M_PI)));
  return std::max(18.0, 1.5 * beta);
}

// lazily-built plans per (scan|refine, sigma band, t band)
class PlanBank {
 public:
  PlanBank(const PrecisionContext& ctx, double sigma_hi, double t_max)
      : ctx_(ctx), sigma_hi_(sigma_hi), t_max_(t_max) {}

  const core::LambdaPlan& get(bool refine, double sigma, double t) {
    long si = static_cast<long>(std::max(0.0, sigma - kSigmaLow) / kSigmaBand);
    long ti = static_cast<long>(std::max(0.0, t) / kTBand);
    Key key{refine, si, ti};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = plans_.find(key);
      if (it != plans_.end()) return *it->second;
    }
    double smax = std::min(kSigmaLow + (static_cast<double>(si) + 1) * kSigmaBand, sigma_hi_ + 12.0);
    double tmax = std::min((static_cast<double>(ti) + 1) * kTBand, t_max_ + 4.0);
    auto plan = std::make_shared<core::LambdaPlan>(core::LambdaPlan::build(
        Complex(1.0), kSigmaLow - 0.5, smax + 0.5, tmax + 1.0,
        refine ? ctx_ : ctx_.with_bits(kScanBits)));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = plans_.emplace(key, std::move(plan));
    return *it->second;
  }

 private:
  using Key = std::tuple<bool, long, long>;
  PrecisionContext ctx_;
  double sigma_hi_, t_max_;
  std::mutex mu_;
  std::map<Key, std::shared_ptr<core::LambdaPlan>> plans_;
};

struct NewtonOut {
  Complex b;
  bool warn_multiple = false;
};

NewtonOut newton_on_plan(const core::LambdaPlan& plan, const Complex& seed, long target_bits) {
  PrecScope ps(plan.prec() + 8);  // iterate above the plan's own precision
  Complex s = seed;
  double prev_step = 0;
  int linearish = 0;
  NewtonOut out;
  for (int it = 0; it < 60; ++it) {
    auto [lam, dlam] = plan.lambda_and_derivative(s);
    Complex f = s * lam;
    Complex df = lam + s * dlam;
    Complex step = f / df;
    s = s - step;
    double mag = hp::abs(step).to_double();
    if (hp::abs(s - seed) > 2.0)
      throw ConvergenceError("refine_zero: Newton iterate left the certified box");
    if (prev_step > 0 && mag > 0.25 * prev_step && mag < prev_step) ++linearish;
    prev_step = mag;
    if (mag == 0.0 || hp::abs(step) <= hp::pow2(-target_bits) * hp::max(hp::abs(s), Real(1.0))) break;
    if (it == 59) throw ConvergenceError("refine_zero: Newton did not converge");
  }
  out.b = s;
  out.warn_multiple = linearish >= 3;
  return out;
}

// final polish + residual at ~2.2x precision through the adaptive route
ZeroRecord polish_zero(const Complex& rough, const PrecisionContext& ctx, bool warn) {
  long hi_bits = ctx.bits * 2 + ctx.bits / 5;
  PrecisionContext hi = ctx.with_bits(hi_bits);
  PrecScope ps(hi_bits);
  Complex s = rough;
  for (int it = 0; it < 6; ++it) {
    Complex lam = core::lambda_completed({s}, hi).value;
    Complex dlam = core::lambda_derivative({s}, hi);
    Complex f = s * lam;
    Complex step = f / (lam + s * dlam);
    s = s - step;
    if (hp::abs(step) <= hp::pow2(-hi_bits + 8) * hp::max(hp::abs(s), Real(1.0))) break;
  }
  if (hp::abs(s.im) < hp::pow2(-ctx.bits / 2)) s.im = Real(0.0);  // the real zero
  ZeroRecord z;
  z.b = s;
  // residual quoted at ctx.bits: re-evaluating at doubled precision then
  // shows the expected >= 2^{bits/2} collapse
  z.residual = hp::abs(s * core::lambda_completed({s}, ctx).value);
  z.bits = ctx.bits;
  z.warn_multiple = warn;
  return z;
}

void certify_zero(ZeroRecord& z, const core::LambdaPlan& plan) {
  double re = z.b.re.to_double(), im = z.b.im.to_double();
  double r = std::max(1e-5, 1e-6 * std::hypot(re, im));
  SearchRegion reg{{re - r, re + r, im - r, im + r}, r / 4};
  long w = winding_number(plan, reg);
  if (w != 1) throw ConvergenceError("refine_zero: shrunk-box winding certificate failed");
  z.cert_box = reg.box;
}

}  // namespace

ZeroRecord refine_zero(const Complex& seed, const PrecisionContext& ctx) {
  double re = seed.re.to_double(), im = std::abs(seed.im.to_double());
  auto plan = core::LambdaPlan::build(Complex(1.0), re - 3.0, re + 3.0, im + 3.0, ctx);
  NewtonOut nw = newton_on_plan(plan, seed, ctx.bits - 10);
  ZeroRecord z = polish_zero(nw.b, ctx, nw.warn_multiple);
  certify_zero(z, plan);
  return z;
}

long region_winding_total(double t_max, double sigma_bound, const PrecisionContext& ctx) {
  PlanBank bank(ctx.with_bits(kScanBits), sigma_bound, std::max(t_max, 1.0));
  const core::LambdaPlan& plan = bank.get(false, sigma_bound, std::max(t_max, 1.0));
  SearchRegion reg{{kSigmaLow, sigma_bound, -0.31, std::max(t_max, 0.35)}, 0.0};
  return winding_number_perturbed(plan, reg);
}

// --- serialization ---

std::string zero_to_jsonl(const ZeroRecord& z) {
  nlohmann::ordered_json j;
  j["n"] = z.n;
  j["re"] = z.b.re.str();
  j["im"] = z.b.im.str();
  j["residual"] = z.residual.str(12);
  j["bits"] = z.bits;
  j["box"] = {z.cert_box.s0, z.cert_box.s1, z.cert_box.t0, z.cert_box.t1};
  return j.dump();
}

std::vector<ZeroRecord> load_jsonl(const std::string& path) {
  std::vector<ZeroRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    ZeroRecord z;
    z.n = j.at("n").get<long>();
    z.bits = j.at("bits").get<long>();
    long prec = std::max<long>(z.bits * 2 + z.bits / 5 + 16, 128);
    z.b = Complex(Real::parse(j.at("re").get<std::string>(), prec),
                  Real::parse(j.at("im").get<std::string>(), prec));
    z.residual = Real::parse(j.at("residual").get<std::string>(), 64);
    auto bx = j.at("box");
    z.cert_box = Box{bx.at(0).get<double>(), bx.at(1).get<double>(), bx.at(2).get<double>(),
                     bx.at(3).get<double>()};
    out.push_back(std::move(z));
  }
  return out;
}

void save_jsonl(const std::string& path, const std::vector<ZeroRecord>& zeros) {
  std::ofstream out(path, std::ios::trunc);
  for (const auto& z : zeros) out << zero_to_jsonl(z) << "\n";
}

// --- enumeration ---

namespace {

void sort_and_number(std::vector<ZeroRecord>& zeros) {
  std::sort(zeros.begin(), zeros.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    bool ra = a.b.im.is_zero(), rb = b.b.im.is_zero();
    if (ra != rb) return ra;  // b0 first
    Real ma = hp::abs(a.b), mb = hp::abs(b.b);
    if (ma != mb) return ma < mb;
    return a.b.im < b.b.im;  // deterministic tie-break: Im ascending
  });
  // drop near-duplicates from perturbed/overlapping boxes
  std::vector<ZeroRecord> dedup;
  for (auto& z : zeros) {
    bool dup = false;
    for (auto it = dedup.rbegin(); it != dedup.rend(); ++it) {
      if (hp::abs(it->b - z.b) < 1e-7) {
        dup = true;
        break;
      }
    }
    if (!dup) dedup.push_back(std::move(z));
  }
  zeros = std::move(dedup);
  for (size_t i = 0; i < zeros.size(); ++i) zeros[i].n = static_cast<long>(i);
}

}  // namespace

AtlasResult enumerate_zeros(double t_max, const PrecisionContext& ctx,
                            const EnumerateOptions& opt) {
  AtlasResult result;
  long workers = opt.workers > 0 ? opt.workers
                                 : static_cast<long>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  std::vector<ZeroRecord> kept;
  double resume_floor = 0.2;
  bool already_covered = false;
  if (!opt.resume_path.empty()) {
    auto prior = load_jsonl(opt.resume_path);
    double max_im = 0;
    for (auto& z : prior)
      if (!z.b.im.is_zero()) max_im = std::max(max_im, z.b.im.to_double());
    if (!prior.empty() && t_max <= max_im) {
      // a completed file already covers the request: no recomputation
      already_covered = true;
      for (auto& z : prior) {
        if (z.b.im.to_double() <= t_max + 1e-12) kept.push_back(std::move(z));
        ++result.resumed;
      }
    } else {
      resume_floor = std::max(0.2, max_im - 0.5);
      for (auto& z : prior) {
        double im = z.b.im.to_double();
        if (im <= resume_floor + 1e-12 && z.bits >= ctx.bits) {
          kept.push_back(std::move(z));
          ++result.resumed;
        }
      }
    }
  }

  std::ofstream shard;
  if (!opt.out_path.empty() && !already_covered)
    shard.open(opt.out_path + ".partial", std::ios::trunc);
  std::mutex sink_mu;
  auto emit = [&](const ZeroRecord& z) {
    std::lock_guard<std::mutex> lock(sink_mu);
    kept.push_back(z);
    if (shard.is_open()) shard << zero_to_jsonl(z) << "\n" << std::flush;
    if (opt.on_zero) opt.on_zero(z);
  };

  // the unique real zero
  {
    bool have = false;
    for (auto& z : kept)
      if (z.b.im.is_zero()) have = true;
    if (!have) {
      ZeroRecord b0 = refine_zero(Complex(11.3, 0.02), ctx);
      b0.b.im = Real(0.0);
      emit(b0);
    }
  }

  if (already_covered) {
    sort_and_number(kept);
    result.zeros = std::move(kept);
    result.sigma_bound = sigma_bound_from_law(std::max(t_max, 1.0));
    if (!opt.out_path.empty() && opt.out_path != opt.resume_path)
      save_jsonl(opt.out_path, result.zeros);
    return result;
  }

  if (t_max <= 0) {
    sort_and_number(kept);
    result.zeros = std::move(kept);
    result.sigma_bound = sigma_bound_from_law(1.0);
    if (!opt.out_path.empty()) save_jsonl(opt.out_path, result.zeros);
    return result;
  }

  double sigma_hi = sigma_bound_from_law(t_max);
  PlanBank bank(ctx, sigma_hi * 1.35, t_max);

  // validate the empirical right edge with a winding walk on the wider box
  for (int widen = 0;; ++widen) {
    const auto& plan = bank.get(false, sigma_hi * 1.3, t_max);
    long w = winding_number_perturbed(
        plan, SearchRegion{{sigma_hi, std::min(sigma_hi * 1.3, plan.sigma_max() - 1.0), 0.2, t_max}, 0.0});
    if (w == 0) break;
    if (widen >= 2)
      throw ConvergenceError("enumerate_zeros: zeros beyond the padded sigma bound");
    sigma_hi *= 1.3;
  }
  result.sigma_bound = sigma_hi;
  // and the band under the lowest conjugate pairs
  {
    const auto& plan = bank.get(false, sigma_hi, 1.0);
    long w = winding_number_perturbed(plan, SearchRegion{{kSigmaLow, sigma_hi, 0.02, 0.2}, 0.0});
    if (w != 0) throw ConvergenceError("enumerate_zeros: unexpected zero below t = 0.2");
  }

  struct Task {
    Box box;
    long count = -1;  // -1: not yet walked
  };
  std::deque<Task> queue;
  for (double s0 = kSigmaLow; s0 < sigma_hi; s0 += kBoxStep) {
    double s1 = std::min(s0 + kBoxStep, sigma_hi);
    for (double t0 = resume_floor; t0 < t_max; t0 += kBoxStep) {
      queue.push_back({Box{s0, s1, t0, std::min(t0 + kBoxStep, t_max)}, -1});
    }
  }

  std::mutex queue_mu;
  std::atomic<long> boxes_scanned{0};
  std::atomic<bool> failed{false};
  std::string failure;

  auto worker = [&]() {
    for (;;) {
      Task task;
      {
        std::lock_guard<std::mutex> lock(queue_mu);
        if (queue.empty() || failed.load()) return;
        task = queue.front();
        queue.pop_front();
      }
      try {
        const auto& scan_plan =
            bank.get(false, task.box.s1, std::max(std::abs(task.box.t0), std::abs(task.box.t1)));
        long cnt = task.count >= 0
                       ? task.count
                       : winding_number_perturbed(scan_plan, SearchRegion{task.box, 0.0});
        boxes_scanned.fetch_add(1);
        if (cnt == 0) continue;
        double w = task.box.s1 - task.box.s0, h = task.box.t1 - task.box.t0;
        if (cnt == 1 && w <= kBoxStep + 0.6 && h <= kBoxStep + 0.6) {
          const auto& refine_plan = bank.get(true, task.box.s1, std::abs(task.box.t1));
          Complex seed((task.box.s0 + task.box.s1) / 2, (task.box.t0 + task.box.t1) / 2);
          NewtonOut nw = newton_on_plan(refine_plan, seed, ctx.bits - 10);
          if (!task.box.contains(nw.b.re.to_double(), nw.b.im.to_double(), 0.2)) {
            // center was in another basin: seed from the |g| minimum on a 5x5 grid
            Real best;
            Complex best_seed = seed;
            bool first = true;
            for (int i = 1; i < 5; ++i)
              for (int j = 1; j < 5; ++j) {
                Complex p(task.box.s0 + w * i / 5.0, task.box.t0 + h * j / 5.0);
                Real mag = hp::abs(refine_plan.s_lambda(p));
                if (first || mag < best) {
                  best = mag;
                  best_seed = p;
                  first = false;
                }
              }
            nw = newton_on_plan(refine_plan, best_seed, ctx.bits - 10);
            if (!task.box.contains(nw.b.re.to_double(), nw.b.im.to_double(), 0.2))
              throw ConvergenceError("enumerate_zeros: refined zero escaped its box");
          }
          ZeroRecord z = polish_zero(nw.b, ctx, nw.warn_multiple);
          certify_zero(z, refine_plan);
          emit(z);
          continue;
        }
        // split and re-queue; children counts must add up to the parent's
        if (w < 0.05 && h < 0.05)
          throw ConvergenceError("enumerate_zeros: unresolvable zero cluster (suspected multiple)");
        double sm = (task.box.s0 + task.box.s1) / 2, tm = (task.box.t0 + task.box.t1) / 2;
        Box kids[4] = {{task.box.s0, sm, task.box.t0, tm},
                       {sm, task.box.s1, task.box.t0, tm},
                       {task.box.s0, sm, tm, task.box.t1},
                       {sm, task.box.s1, tm, task.box.t1}};
        long sum = 0;
        Task sub[4];
        for (int i = 0; i < 4; ++i) {
          sub[i].box = kids[i];
          sub[i].count = winding_number_perturbed(scan_plan, SearchRegion{kids[i], 0.0});
          sum += sub[i].count;
        }
        if (sum != cnt)
          throw ConvergenceError(
              "enumerate_zeros: child winding counts disagree with parent (suspected missed zero)");
        std::lock_guard<std::mutex> lock(queue_mu);
        for (int i = 0; i < 4; ++i)
          if (sub[i].count > 0) queue.push_back(sub[i]);
      } catch (const std::exception& e) {
        failed.store(true);
        std::lock_guard<std::mutex> lock(queue_mu);
        failure = e.what();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  for (long i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed.load()) throw ConvergenceError("enumerate_zeros: " + failure);

  sort_and_number(kept);
  result.zeros = std::move(kept);
  result.boxes_scanned = boxes_scanned.load();
  if (!opt.out_path.empty()) {
    save_jsonl(opt.out_path, result.zeros);
    std::remove((opt.out_path + ".partial").c_str());
  }
  return result;
}

ZeroStats zero_stats(const std::vector<ZeroRecord>& zeros, const std::vector<double>& x_grid,
                     double t_max_covered) {
  ZeroStats st;
  for (double x : x_grid) {
    if (x > t_max_covered + 1e-9)
      throw DomainError("zero_stats: x exceeds the certified atlas coverage");
    long n_emp = 0;
    for (const auto& z : zeros)
      if (hp::abs(z.b).to_double() <= x) ++n_emp;
    double main = x / (4 * M_PI) * std::log(x / (2 * M_PI)) - x / (4 * M_PI);
    double formula = main + std::sqrt(std::max(main, 0.0));
    st.counts.push_back({x, n_emp, formula, static_cast<double>(n_emp) - formula});
  }
  for (const auto& z : zeros) {
    if (z.b.im.is_zero()) continue;
    double beta = z.b.re.to_double(), gamma = z.b.im.to_double();
    double law = gamma - beta * std::log(beta / (4 * M_PI));
    bool ok = gamma / std::log(gamma / (2 * M_PI)) >= 2 * beta / M_PI;
    st.laws.push_back({z.n, beta, gamma, law, ok});
  }
  return st;
}

HalfplaneReport verify_halfplane(const std::vector<ZeroRecord>& zeros) {
  HalfplaneReport rep;
  const double b0_ref = 11.251709081461711;
  bool first = true;
  for (const auto& z : zeros) {
    double re = z.b.re.to_double();
    if (first || re < rep.min_re) rep.min_re = re;
    first = false;
    bool in_quadrant = re > 0 && z.b.im.sign() >= 0;
    if (re < b0_ref - 1e-6 || !in_quadrant) {
      rep.ok = false;
      rep.violations.push_back(z.n);
    }
  }
  return rep;
}

}  // namespace lav::atlas
