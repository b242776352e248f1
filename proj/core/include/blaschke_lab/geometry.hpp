#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace blaschke_lab {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// A point of the open unit disk. Construction rejects anything with
/// modulus at or beyond 1 - kBoundaryGuard, and non-finite input.
class DiskPoint {
 public:
  static constexpr double kBoundaryGuard = 1e-15;

  DiskPoint() = default;
  explicit DiskPoint(Complex z);
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

  Complex value() const noexcept { return z_; }
  operator Complex() const noexcept { return z_; }  // NOLINT(google-explicit-constructor)
  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }
  double modulus() const noexcept { return std::abs(z_); }

  /// 1 - |z|^2 and 1 - |z|, both free of cancellation near the circle.
  double one_minus_modulus_sq() const noexcept;
  double one_minus_modulus() const noexcept { return one_minus_modulus_sq() / (1.0 + modulus()); }

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  Complex z_{0.0, 0.0};
};

/// A point of the unit circle stored by its argument, normalized to [0, 2pi).
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(double arg);

  double arg() const noexcept { return arg_; }
  Complex value() const noexcept;

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

 private:
  double arg_ = 0.0;
};

struct EuclideanDisk {
  Complex center;
  double radius = 0.0;
};

/// 1 - conj(a) z with the real part formed by error-free products, so that the
/// result keeps its relative accuracy when conj(a) z is close to 1.
Complex one_minus_conj_product(Complex a, Complex z) noexcept;

/// |z - a| / |1 - conj(a) z| on raw complex values; callers guarantee |a| < 1.
double pseudohyperbolic_distance(Complex a, Complex z) noexcept;

double rho(DiskPoint a, DiskPoint z) noexcept;

/// (1 - |a|^2)(1 - |z|^2) / |1 - conj(a) z|^2, which equals 1 - rho(a, z)^2
/// but keeps full relative precision when rho is close to 1.
double one_minus_rho_squared(DiskPoint a, DiskPoint z) noexcept;

double beta(DiskPoint a, DiskPoint z) noexcept;

/// The disk automorphism (a - z) / (1 - conj(a) z). It is an involution.
DiskPoint mobius(DiskPoint a, DiskPoint z);

/// The set {w : rho(c, w) < r} is a Euclidean disk; returns its center and
/// radius. Requires 0 < r < 1.
EuclideanDisk pseudo_disk_to_euclidean(DiskPoint c, double r);

/// Worst slack (right side minus left side, minimized over all (j, k)) of the
/// four kernel inequalities that hold when every hyperbolic distance
/// beta(a_j, z_k) is at most r, with s = tanh(r):
///   lower:        1 - s <= (1 - s|z_k|) / (1 - |z_k|^2)
///   z_upper:      (1 - s|z_k|) / (1 - |z_k|^2) <= 1 / |1 - conj(a_j) z_k|
///   a_upper:      (1 - s|a_j|) / (1 - |a_j|^2) <= 1 / |1 - conj(a_j) z_k|
///   kernel_floor: (1 - |z_k|^2) / |1 - conj(a_j) z_k| >= 1 - s
struct KernelBoundsReport {
  double r = 0.0;
  double s = 0.0;
  double slack_lower = 0.0;
  double slack_z_upper = 0.0;
  double slack_a_upper = 0.0;
  double slack_kernel_floor = 0.0;
  std::size_t pairs_checked = 0;
};

/// sup over all (j, k) of beta(a_j, z_k).
double sup_beta(std::span<const DiskPoint> a, std::span<const DiskPoint> z);

/// Throws InvalidArgument if some beta(a_j, z_k) exceeds r, and
/// PrecisionViolation if an inequality fails by more than 1e-12.
KernelBoundsReport kernel_bounds_check(std::span<const DiskPoint> a,
                                       std::span<const DiskPoint> z, double r);

/// Same check with r = sup_beta(a, z).
KernelBoundsReport kernel_bounds_check(std::span<const DiskPoint> a,
                                       std::span<const DiskPoint> z);

}  // namespace blaschke_lab
