#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "blaschke_lab/geometry.hpp"

namespace blaschke_lab {

/// Discretization of the unit circle used for every supremum over the circle:
/// base_count equispaced arguments 2 pi k / base_count, plus extra_args that
/// are always sampled (typically the arguments of sequence points).
struct CircleGrid {
  std::size_t base_count = 4096;
  std::size_t refinement_rounds = 3;
  std::vector<double> extra_args;

  static constexpr std::size_t kMinBaseCount = 256;

  /// Throws InvalidArgument when base_count < 256.
  void validate() const;

  /// Copy with the arguments of the given points appended to extra_args.
  CircleGrid with_args_of(std::span<const DiskPoint> points) const;

  /// Sorted, de-duplicated sample arguments in [0, 2 pi).
  std::vector<double> sample_args() const;
};

struct CircleExtremum {
  double value = 0.0;
  CirclePoint at;
  double grid_value = 0.0;  // extremum over the grid alone, before refinement
  std::size_t evaluations = 0;
};

/// Estimates sup over the circle of f(arg). The grid is scanned, then the
/// eight largest local maxima are refined: each round lays a 32-point
/// subgrid over the bracket between the neighbouring samples and shrinks the
/// bracket around the best subgrid point; a golden-section pass finishes.
/// The result is the largest value ever evaluated, so it is never below the
/// plain grid maximum.
CircleExtremum circle_maximize(const CircleGrid& grid, const std::function<double(double)>& f);

/// Same estimator applied to -f.
CircleExtremum circle_minimize(const CircleGrid& grid, const std::function<double(double)>& f);

}  // namespace blaschke_lab
