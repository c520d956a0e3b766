#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "hhc/eval.hpp"
#include "hhc/quaternary.hpp"
#include "hhc/threads.hpp"

namespace hhc {

/// Sampling convention stated in every report: the squared-numerator ratio,
/// whose supremum for the original Hilbert curve is the known limit 6.
inline constexpr const char* kDilationConvention = "max |f(ti)-f(tj)|^2 / |ti-tj|";

struct DilationMode {
  bool exhaustive = true;
  std::uint64_t samples = 0;   // sampled mode only
  std::uint64_t seed = 0;      // sampled mode only

  static DilationMode Exhaustive() { return {true, 0, 0}; }
  static DilationMode Sampled(std::uint64_t n, std::uint64_t seed) { return {false, n, seed}; }

  std::string to_string() const {
    if (exhaustive) return "exhaustive";
    return "sampled(" + std::to_string(samples) + ", " + std::to_string(seed) + ")";
  }
};

/// Estimate of the squared dilation factor of one curve at one order:
/// the maximum over examined index pairs of |f(t_i)-f(t_j)|^2 / |t_i-t_j|
/// with t_i = (i+1/2)/4^k, so the points are exactly the order-k cell centers.
struct DilationReport {
  CurveId curve;
  int order = 0;
  double estimate = 0.0;
  std::uint64_t argmax_i = 0;
  std::uint64_t argmax_j = 0;
  DilationMode mode;

  /// Decimal estimate with 12 significant digits, as serialized.
  std::string estimate_string() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", estimate);
    return buf;
  }

  std::string to_json() const {
    std::string s = "{";
    s += "\"convention\": \"" + std::string(kDilationConvention) + "\", ";
    s += "\"curve\": \"" + std::string(curve.name()) + "\", ";
    s += "\"nu\": " + std::to_string(curve.nu) + ", ";
    s += "\"order\": " + std::to_string(order) + ", ";
    s += "\"estimate\": \"" + estimate_string() + "\", ";
    s += "\"argmax_i\": " + std::to_string(argmax_i) + ", ";
    s += "\"argmax_j\": " + std::to_string(argmax_j) + ", ";
    s += "\"mode\": \"" + mode.to_string() + "\"";
    s += "}";
    return s;
  }
};

namespace detail {

/// Candidate maximum with the deterministic tie-break (smallest (i, j)).
struct DilationBest {
  std::int64_t dist2 = -1;  // squared distance numerator, units 1/2^(2k+2)
  std::uint64_t di = 1;     // index separation j - i
  std::uint64_t i = 0, j = 0;

  // ratio = dist2 / (4 * di); cross-multiplied comparison stays exact.
  bool better_than(const DilationBest& o) const {
    if (o.dist2 < 0) return dist2 >= 0;
    if (dist2 < 0) return false;
    const __int128 lhs = static_cast<__int128>(dist2) * static_cast<__int128>(o.di);
    const __int128 rhs = static_cast<__int128>(o.dist2) * static_cast<__int128>(di);
    if (lhs != rhs) return lhs > rhs;
    return i < o.i || (i == o.i && j < o.j);
  }
};

/// All 4^k curve points as integer numerators over 2^(k+1).
inline std::vector<std::pair<std::int64_t, std::int64_t>> curve_points_scaled(CurveId nu, int k) {
  const std::uint64_t total = std::uint64_t{1} << (2 * k);
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  pts.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    const DyadicVec2 p = eval(nu, k, quaternary_from_index(i, k));
    // Cell centers always carry the full denominator 2^(k+1).
    pts.emplace_back(p.x.num << (k + 1 - p.x.exp), p.y.num << (k + 1 - p.y.exp));
  }
  return pts;
}

inline DilationBest scan_rows(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts,
                              std::uint64_t row_begin, std::uint64_t row_end) {
  DilationBest best;
  const std::uint64_t n = pts.size();
  for (std::uint64_t i = row_begin; i < row_end; ++i)
    for (std::uint64_t j = i + 1; j < n; ++j) {
      const std::int64_t dx = pts[i].first - pts[j].first;
      const std::int64_t dy = pts[i].second - pts[j].second;
      const DilationBest cand{dx * dx + dy * dy, j - i, i, j};
      if (cand.better_than(best)) best = cand;
    }
  return best;
}

}  // namespace detail

/// Computes the dilation estimate. Exhaustive mode scans all C(4^k, 2) pairs,
/// partitioned into contiguous row blocks combined in block order, so the
/// argmax (ties broken toward the smallest pair) is identical for any worker
/// count. Sampled mode draws `samples` pairs from a seeded generator.
/// Squared distances are exact integers; the single floating-point division
/// happens when the report is filled.
inline DilationReport dilation_estimate(CurveId nu, int k, const DilationMode& mode) {
  if (k < 1 || (nu.improper() && k < 2))
    throw std::invalid_argument("dilation_estimate: order too small for this curve");
  if (k > 12) throw std::invalid_argument("dilation_estimate: order > 12 not supported");
  const auto pts = detail::curve_points_scaled(nu, k);
  const std::uint64_t n = pts.size();

  detail::DilationBest best;
  if (mode.exhaustive) {
    const unsigned workers = worker_count();
    const std::uint64_t block = 256;
    const std::uint64_t num_blocks = (n + block - 1) / block;
    std::vector<detail::DilationBest> block_best(num_blocks);
    if (workers <= 1 || num_blocks <= 1) {
      for (std::uint64_t b = 0; b < num_blocks; ++b)
        block_best[b] = detail::scan_rows(pts, b * block, std::min(n, (b + 1) * block));
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::uint64_t b = w; b < num_blocks; b += workers)
            block_best[b] = detail::scan_rows(pts, b * block, std::min(n, (b + 1) * block));
        });
      for (auto& t : pool) t.join();
    }
    for (const auto& cand : block_best)
      if (cand.better_than(best)) best = cand;
  } else {
    std::mt19937_64 rng(mode.seed);
    for (std::uint64_t s = 0; s < mode.samples; ++s) {
      std::uint64_t i = rng() % n;
      std::uint64_t j = rng() % n;
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      const std::int64_t dx = pts[i].first - pts[j].first;
      const std::int64_t dy = pts[i].second - pts[j].second;
      const detail::DilationBest cand{dx * dx + dy * dy, j - i, i, j};
      if (cand.better_than(best)) best = cand;
    }
  }

  DilationReport report;
  report.curve = nu;
  report.order = k;
  report.mode = mode;
  if (best.dist2 >= 0) {
    report.estimate = static_cast<double>(best.dist2) / (4.0 * static_cast<double>(best.di));
    report.argmax_i = best.i;
    report.argmax_j = best.j;
  }
  return report;
}

struct DilationSurvey {
  std::vector<DilationReport> reports;
  double max_relative_spread = 0.0;  // (max - min) / max over the 12 estimates

  std::string to_json() const {
    std::string s = "{\"reports\": [";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) s += ", ";
      s += reports[i].to_json();
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", max_relative_spread);
    s += "], \"max_relative_spread\": \"";
    s += buf;
    s += "\"}";
    return s;
  }
};

/// Estimates for all twelve curves at one order (improper curves require
/// k >= 2). The spread across curves is reported, not asserted: equality in
/// the infinite limit is a conjecture.
inline DilationSurvey dilation_survey(int k, const DilationMode& mode) {
  if (k < 2) throw std::invalid_argument("dilation_survey: order must be >= 2 (improper curves)");
  DilationSurvey survey;
  double lo = 0.0, hi = 0.0;
  for (int nu = 0; nu < 12; ++nu) {
    survey.reports.push_back(dilation_estimate(CurveId(nu), k, mode));
    const double e = survey.reports.back().estimate;
    if (nu == 0) lo = hi = e;
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  survey.max_relative_spread = hi > 0 ? (hi - lo) / hi : 0.0;
  return survey;
}

}  // namespace hhc
