#include "blaschke_lab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "blaschke_lab/errors.hpp"

namespace blaschke_lab {

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
      std::abs(z) >= 1.0 - kBoundaryGuard) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "point " << z << " is not inside the disk guard |z| < 1 - " << kBoundaryGuard;
    throw Error(ErrorCode::InvalidPoint, msg.str());
  }
}

double DiskPoint::one_minus_modulus_sq() const noexcept {
  return one_minus_conj_product(z_, z_).real();
}

CirclePoint::CirclePoint(double arg) {
  double t = std::fmod(arg, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  // fmod of a value just below 0 can round up to exactly 2pi.
  if (t >= kTwoPi) t = 0.0;
  arg_ = t;
}

Complex CirclePoint::value() const noexcept {
  return {std::cos(arg_), std::sin(arg_)};
}

Complex one_minus_conj_product(Complex a, Complex z) noexcept {
  // conj(a) z = (ar zr + ai zi) + i (ar zi - ai zr)
  const double ar = a.real(), ai = a.imag(), zr = z.real(), zi = z.imag();
  const double p1 = ar * zr;
  const double e1 = std::fma(ar, zr, -p1);
  const double p2 = ai * zi;
  const double e2 = std::fma(ai, zi, -p2);
  const double s = p1 + p2;
  const double bb = s - p1;
  const double e3 = (p1 - (s - bb)) + (p2 - bb);
  const double re = (1.0 - s) - (e1 + e2 + e3);

  const double q1 = ar * zi;
  const double f1 = std::fma(ar, zi, -q1);
  const double q2 = ai * zr;
  const double f2 = std::fma(ai, zr, -q2);
  const double im = (q1 - q2) + (f1 - f2);
  return {re, -im};
}

double pseudohyperbolic_distance(Complex a, Complex z) noexcept {
  return std::abs(z - a) / std::abs(one_minus_conj_product(a, z));
}

double rho(DiskPoint a, DiskPoint z) noexcept {
  return pseudohyperbolic_distance(a.value(), z.value());
}

double one_minus_rho_squared(DiskPoint a, DiskPoint z) noexcept {
  const double den = std::norm(one_minus_conj_product(a.value(), z.value()));
  return a.one_minus_modulus_sq() * z.one_minus_modulus_sq() / den;
}

double beta(DiskPoint a, DiskPoint z) noexcept {
  return std::atanh(rho(a, z));
}

DiskPoint mobius(DiskPoint a, DiskPoint z) {
  const Complex av = a.value();
  const Complex zv = z.value();
  return DiskPoint((av - zv) / one_minus_conj_product(av, zv));
}

EuclideanDisk pseudo_disk_to_euclidean(DiskPoint c, double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "pseudohyperbolic radius must lie in (0, 1)");
  }
  const double s = c.modulus();
  const double r2 = r * r;
  const double den = 1.0 - r2 * s * s;
  const double p = (1.0 - r) * (1.0 + r) * s / den;
  const double radius = r * c.one_minus_modulus_sq() / den;
  // rho is rotation invariant, so the disk about |c| is rotated onto c.
  const Complex center = s > 0.0 ? p * (c.value() / s) : Complex(0.0, 0.0);
  return {center, radius};
}

double sup_beta(std::span<const DiskPoint> a, std::span<const DiskPoint> z) {
  double best = 0.0;
  for (const auto& aj : a) {
    for (const auto& zk : z) best = std::max(best, beta(aj, zk));
  }
  return best;
}

KernelBoundsReport kernel_bounds_check(std::span<const DiskPoint> a,
                                       std::span<const DiskPoint> z, double r) {
  constexpr double kTolerance = 1e-12;
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::InvalidArgument, "hyperbolic radius must be finite and >= 0");
  }
  const double sb = sup_beta(a, z);
  if (sb > r * (1.0 + 1e-12) + 1e-15) {
    throw Error(ErrorCode::InvalidArgument,
                "some beta(a_j, z_k) exceeds the stated hyperbolic radius");
  }

  KernelBoundsReport rep;
  rep.r = r;
  rep.s = std::tanh(r);
  const double s = rep.s;
  constexpr double inf = std::numeric_limits<double>::infinity();
  rep.slack_lower = rep.slack_z_upper = rep.slack_a_upper = rep.slack_kernel_floor = inf;

  for (const auto& aj : a) {
    const double ma = aj.modulus();
    const double a_side = (1.0 - s * ma) / aj.one_minus_modulus_sq();
    for (const auto& zk : z) {
      const double mz = zk.modulus();
      const double z_side = (1.0 - s * mz) / zk.one_minus_modulus_sq();
      const double kernel = 1.0 / std::abs(one_minus_conj_product(aj.value(), zk.value()));
      const double floor_side = zk.one_minus_modulus_sq() * kernel;

      // Slacks are taken relative to the larger side so that points near the
      // circle, where both sides are huge, are judged on the same scale.
      auto rel = [](double lhs, double rhs) {
        return (rhs - lhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
      };
      rep.slack_lower = std::min(rep.slack_lower, rel(1.0 - s, z_side));
      rep.slack_z_upper = std::min(rep.slack_z_upper, rel(z_side, kernel));
      rep.slack_a_upper = std::min(rep.slack_a_upper, rel(a_side, kernel));
      rep.slack_kernel_floor = std::min(rep.slack_kernel_floor, rel(1.0 - s, floor_side));
      ++rep.pairs_checked;
    }
  }

  const double worst = std::min({rep.slack_lower, rep.slack_z_upper, rep.slack_a_upper,
                                 rep.slack_kernel_floor});
  if (worst < -kTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "kernel inequality violated by " << -worst;
    throw Error(ErrorCode::PrecisionViolation, msg.str());
  }
  return rep;
}

KernelBoundsReport kernel_bounds_check(std::span<const DiskPoint> a,
                                       std::span<const DiskPoint> z) {
  return kernel_bounds_check(a, z, sup_beta(a, z));
}

}  // namespace blaschke_lab
