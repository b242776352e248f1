#include "blaschke_lab/circle_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "blaschke_lab/errors.hpp"

namespace blaschke_lab {

namespace {

constexpr std::size_t kRefinedCandidates = 8;
constexpr std::size_t kSubgridPoints = 32;
constexpr int kGoldenIterations = 80;
constexpr double kInvPhi = 0.6180339887498948482;

struct Tracker {
  const std::function<double(double)>& f;
  double best_value;
  double best_arg;
  std::size_t evaluations = 0;

  double operator()(double t) {
    const double v = f(t);
    ++evaluations;
    if (v > best_value) {
      best_value = v;
      best_arg = t;
    }
    return v;
  }
};

void refine(Tracker& eval, double lo, double hi, double center, std::size_t rounds) {
  double best_t = center;
  for (std::size_t round = 0; round < rounds; ++round) {
    const double step = (hi - lo) / static_cast<double>(kSubgridPoints - 1);
    double best_v = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < kSubgridPoints; ++i) {
      const double t = lo + step * static_cast<double>(i);
      const double v = eval(t);
      if (v > best_v) {
        best_v = v;
        best_t = t;
      }
    }
    lo = best_t - step;
    hi = best_t + step;
  }
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = eval(x1);
  double f2 = eval(x2);
  for (int it = 0; it < kGoldenIterations && hi - lo > 1e-16; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = eval(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = eval(x1);
    }
  }
}

}  // namespace

void CircleGrid::validate() const {
  if (base_count < kMinBaseCount) {
    throw Error(ErrorCode::InvalidArgument, "circle grid needs at least 256 base points");
  }
}

CircleGrid CircleGrid::with_args_of(std::span<const DiskPoint> points) const {
  CircleGrid out = *this;
  for (const auto& p : points) {
    if (p.value() != Complex(0.0, 0.0)) out.extra_args.push_back(std::arg(p.value()));
  }
  return out;
}

std::vector<double> CircleGrid::sample_args() const {
  validate();
  std::vector<double> args;
  args.reserve(base_count + extra_args.size());
  for (std::size_t k = 0; k < base_count; ++k) {
    args.push_back(kTwoPi * static_cast<double>(k) / static_cast<double>(base_count));
  }
  for (double t : extra_args) args.push_back(CirclePoint(t).arg());
  std::sort(args.begin(), args.end());
  args.erase(std::unique(args.begin(), args.end()), args.end());
  return args;
}

CircleExtremum circle_maximize(const CircleGrid& grid, const std::function<double(double)>& f) {
  const std::vector<double> args = grid.sample_args();
  const std::size_t n = args.size();
  std::vector<double> vals(n);
  Tracker eval{f, -std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i < n; ++i) vals[i] = eval(args[i]);
  const double grid_value = eval.best_value;

  // Local maxima of the cyclic sample sequence, largest first.
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < n; ++i) {
    const double left = vals[(i + n - 1) % n];
    const double right = vals[(i + 1) % n];
    if (vals[i] >= left && vals[i] >= right) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t x, std::size_t y) { return vals[x] > vals[y]; });
  if (peaks.size() > kRefinedCandidates) peaks.resize(kRefinedCandidates);

  for (std::size_t i : peaks) {
    double lo = args[(i + n - 1) % n];
    double hi = args[(i + 1) % n];
    if (i == 0) lo -= kTwoPi;
    if (i + 1 == n) hi += kTwoPi;
    refine(eval, lo, hi, args[i], grid.refinement_rounds);
  }

  CircleExtremum out;
  out.value = eval.best_value;
  out.at = CirclePoint(eval.best_arg);
  out.grid_value = grid_value;
  out.evaluations = eval.evaluations;
  return out;
}

CircleExtremum circle_minimize(const CircleGrid& grid, const std::function<double(double)>& f) {
  CircleExtremum out = circle_maximize(grid, [&](double t) { return -f(t); });
  out.value = -out.value;
  out.grid_value = -out.grid_value;
  return out;
}

}  // namespace blaschke_lab
