#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "blaschke_lab/geometry.hpp"

namespace blaschke_lab {

/// Ordered, pairwise-distinct points of the disk (N >= 1). Two points closer
/// than kDuplicateTolerance in rho are treated as the same point.
class ZeroSequence {
 public:
  static constexpr double kDuplicateTolerance = 1e-13;

  explicit ZeroSequence(std::vector<DiskPoint> points);
  static ZeroSequence from_complex(std::span<const Complex> values);

  std::size_t size() const noexcept { return points_.size(); }
  std::span<const DiskPoint> points() const noexcept { return points_; }
  const DiskPoint& operator[](std::size_t i) const noexcept { return points_[i]; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// The first n points (1 <= n <= size()).
  ZeroSequence prefix(std::size_t n) const;

  /// inf over j != k of rho(a_j, a_k); 1 for a single point.
  double self_separation() const;

 private:
  std::vector<DiskPoint> points_;
};

/// lambda * prod_j b_j(z) with b_j(z) = (|a_j| / -a_j) (z - a_j) / (1 - conj(a_j) z),
/// and b_j(z) = z when a_j = 0. Evaluation is always factor by factor.
/// Degree 0 (no zeros) is allowed and is the constant lambda; it arises as the
/// cofactor of a single-zero product.
class BlaschkeProduct {
 public:
  explicit BlaschkeProduct(const ZeroSequence& zeros, CirclePoint rotation = CirclePoint{});
  static BlaschkeProduct constant(CirclePoint rotation = CirclePoint{});

  std::size_t degree() const noexcept { return zeros_.size(); }
  std::span<const DiskPoint> zeros() const noexcept { return zeros_; }
  CirclePoint rotation() const noexcept { return rotation_; }
  Complex lambda() const noexcept { return lambda_; }

  /// The unimodular constant |a_j| / -a_j of factor j (1 when a_j = 0).
  Complex unit(std::size_t j) const noexcept { return units_[j]; }

  /// b_j(z).
  Complex factor(std::size_t j, Complex z) const noexcept;

  /// B(z) for |z| <= 1; throws InvalidArgument outside the closed disk.
  Complex evaluate(Complex z) const;
  Complex operator()(Complex z) const { return evaluate(z); }

  /// B_j(z) = B(z) / b_j(z) for every j, computed from prefix and suffix
  /// products so that it is exact at z = a_j.
  std::vector<Complex> cofactor_values(Complex z) const;

  /// B'(z). When z coincides with a_j (within 1e-13) the caller must pass
  /// exclude = j; otherwise EvaluationAtZero is thrown.
  Complex derivative(Complex z, std::optional<std::size_t> exclude = std::nullopt) const;

  /// Product over the zeros other than a_j, same rotation. Indices are 0-based.
  BlaschkeProduct cofactor(std::size_t j) const;

 private:
  BlaschkeProduct(std::vector<DiskPoint> zeros, CirclePoint rotation);
  void check_closed_disk(Complex z) const;

  std::vector<DiskPoint> zeros_;
  std::vector<Complex> units_;
  CirclePoint rotation_;
  Complex lambda_{1.0, 0.0};
};

struct CarlesonEntry {
  std::size_t index = 0;
  double quantity = 0.0;  // (1 - |a_n|^2) |B'(a_n)|
};

struct CarlesonReport {
  std::vector<CarlesonEntry> per_zero;
  double delta = 1.0;  // min over per_zero
  std::size_t argmin = 0;
};

CarlesonReport carleson(const BlaschkeProduct& b);

}  // namespace blaschke_lab
