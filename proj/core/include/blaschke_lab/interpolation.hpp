#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "blaschke_lab/blaschke.hpp"
#include "blaschke_lab/circle_grid.hpp"
#include "blaschke_lab/target_vector.hpp"

namespace blaschke_lab {

enum class KernelSolveStatus { ok, ill_conditioned };

/// The element of K_B taking the values alpha_j at the zeros a_j of B.
///
/// The primary representation is the Lagrange form
///   f(z) = sum_j alpha_j (B_j(z) / B_j(a_j)) (1 - |a_j|^2) / (1 - conj(a_j) z).
/// The kernel form sum_j c_j (1 - |a_j|^2) / (1 - conj(a_j) z) is solved for
/// independently and kept as a cross-check; when the solve residual exceeds
/// 1e-6 * |alpha|_inf the status is ill_conditioned and kernel_coeffs is empty.
class InterpolantRep {
 public:
  const BlaschkeProduct& space() const noexcept { return space_; }
  const TargetVector& lagrange_coeffs() const noexcept { return alpha_; }
  std::span<const Complex> kernel_coeffs() const noexcept { return kernel_; }
  KernelSolveStatus kernel_status() const noexcept { return status_; }
  double kernel_residual() const noexcept { return kernel_residual_; }

  Complex evaluate(Complex z) const;
  Complex operator()(Complex z) const { return evaluate(z); }

  /// Kernel form; throws InvalidArgument when the cross-check was skipped.
  Complex evaluate_kernel(Complex z) const;

  /// L_j(z) for every j.
  std::vector<Complex> lagrange_basis(Complex z) const;

 private:
  friend InterpolantRep solve_kb(const BlaschkeProduct& b, const TargetVector& alpha);
  InterpolantRep(BlaschkeProduct b, TargetVector alpha);

  BlaschkeProduct space_;
  TargetVector alpha_;
  std::vector<Complex> inv_cofactor_at_zero_;  // 1 / B_j(a_j)
  std::vector<Complex> kernel_;
  KernelSolveStatus status_ = KernelSolveStatus::ok;
  double kernel_residual_ = 0.0;
};

/// Throws InvalidArgument unless alpha has one entry per zero of B.
InterpolantRep solve_kb(const BlaschkeProduct& b, const TargetVector& alpha);

/// M = sup over the circle of sum_j |L_j|, the norm of the interpolation map
/// from l_inf^N into K_B with the sup norm. Never below 1.
double lebesgue_constant(const BlaschkeProduct& b, const CircleGrid& grid = {});

/// The interpolant in K_{BC} of alpha on the zeros of B and beta on the zeros
/// of C, written as G = G1 + G2 where G1 carries the factor C and G2 the
/// factor B:
///   G1(z) = sum_j conj(tg_a[j]) s_j B_j(z) C(z) k_{a_j}(z)
///   G2(z) = sum_j conj(tg_z[j]) t_j B(z) C_j(z) k_{z_j}(z)
/// with k_w(z) = (1 - |w|^2) / (1 - conj(w) z), s_j, t_j the factor units of
/// B and C, and tg the tilde-gamma coefficients built from the normalized
/// targets alpha_j / C(a_j) and beta_j / B(z_j).
class UnionConstruction {
 public:
  const BlaschkeProduct& b() const noexcept { return b_; }
  const BlaschkeProduct& c() const noexcept { return c_; }
  const TargetVector& normalized_alpha() const noexcept { return alpha_n_; }
  const TargetVector& normalized_beta() const noexcept { return beta_n_; }

  /// Interlaced: entry 2j is the coefficient attached to a_j, entry 2j+1 to z_j.
  std::span<const Complex> tilde_gamma() const noexcept { return tilde_gamma_; }

  Complex g1(Complex z) const;
  Complex g2(Complex z) const;
  Complex evaluate(Complex z) const { return g1(z) + g2(z); }
  Complex operator()(Complex z) const { return evaluate(z); }

 private:
  friend UnionConstruction interpolate_union(const BlaschkeProduct&, const BlaschkeProduct&,
                                             const TargetVector&, const TargetVector&);
  UnionConstruction(BlaschkeProduct b, BlaschkeProduct c);

  BlaschkeProduct b_;
  BlaschkeProduct c_;
  TargetVector alpha_n_;
  TargetVector beta_n_;
  std::vector<Complex> tilde_gamma_;
};

/// Throws InvalidArgument on length mismatches, ZeroCollision when B and C
/// share a zero, SeparationTooSmall when the two zero sets come closer than
/// 1e-6 in rho.
UnionConstruction interpolate_union(const BlaschkeProduct& b, const BlaschkeProduct& c,
                                    const TargetVector& alpha, const TargetVector& beta);

double sup_norm(const InterpolantRep& f, const CircleGrid& grid = {});
double sup_norm(const UnionConstruction& g, const CircleGrid& grid = {});

struct IterationTrace {
  std::vector<double> residual_sup;  // entry m: sup_n |alpha_n - (f_0 + ... + f_{m-1})(z_n)|
  std::vector<double> bound_curve;   // entry m: |alpha|_inf (2 M nearness)^m
  double M_used = 0.0;
  double epsilon_used = 0.0;         // 1 - nearness
  bool converged = false;
  // nearness was at or past 1/(2M) but below 1.5/(2M): the contraction is
  // not guaranteed and bound_curve is informational only.
  bool beyond_guaranteed_radius = false;
  // residual_sup[m] <= 1.1 bound_curve[m] at every recorded step.
  bool bound_dominated = true;
};

struct NearbyResult {
  InterpolantRep interpolant;
  IterationTrace trace;
};

/// Interpolates alpha on Z by repeatedly correcting an interpolant on the
/// zeros of B. Throws ContractionViolated when nearness >= 1.5/(2M) and
/// MaxIterExceeded when tol is not reached.
NearbyResult nearby_iterate(const BlaschkeProduct& b, const ZeroSequence& z,
                            const TargetVector& alpha, std::size_t max_iter, double tol,
                            const CircleGrid& grid = {});

/// The N solutions in the disk of B(z) = a. Degree is capped at 40.
ZeroSequence frostman_shift_zeros(const BlaschkeProduct& b, DiskPoint a);

}  // namespace blaschke_lab
