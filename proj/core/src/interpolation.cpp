#include "blaschke_lab/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "blaschke_lab/errors.hpp"

namespace blaschke_lab {

namespace {

constexpr double kIllConditioned = 1e-6;
constexpr double kMinUnionSeparation = 1e-6;
// Contraction ratios past 1 are tolerated up to this factor, with a warning.
constexpr double kWarningBand = 1.5;
constexpr double kBoundFactor = 1.1;

// k_w(z) = (1 - |w|^2) / (1 - conj(w) z)
Complex kernel(const DiskPoint& w, Complex z) {
  return w.one_minus_modulus_sq() / one_minus_conj_product(w.value(), z);
}

std::vector<Complex> cofactors_at_own_zeros(const BlaschkeProduct& b) {
  const auto zeros = b.zeros();
  std::vector<Complex> out(zeros.size());
  for (std::size_t j = 0; j < zeros.size(); ++j) out[j] = b.cofactor_values(zeros[j].value())[j];
  return out;
}

}  // namespace

InterpolantRep::InterpolantRep(BlaschkeProduct b, TargetVector alpha)
    : space_(std::move(b)), alpha_(std::move(alpha)) {}

std::vector<Complex> InterpolantRep::lagrange_basis(Complex z) const {
  const auto zeros = space_.zeros();
  std::vector<Complex> basis = space_.cofactor_values(z);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    basis[j] *= inv_cofactor_at_zero_[j] * kernel(zeros[j], z);
  }
  return basis;
}

Complex InterpolantRep::evaluate(Complex z) const {
  const std::vector<Complex> basis = lagrange_basis(z);
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < basis.size(); ++j) sum += alpha_[j] * basis[j];
  return sum;
}

Complex InterpolantRep::evaluate_kernel(Complex z) const {
  if (status_ != KernelSolveStatus::ok) {
    throw Error(ErrorCode::InvalidArgument, "kernel form unavailable: the linear solve was ill-conditioned");
  }
  const auto zeros = space_.zeros();
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < zeros.size(); ++j) sum += kernel_[j] * kernel(zeros[j], z);
  return sum;
}

InterpolantRep solve_kb(const BlaschkeProduct& b, const TargetVector& alpha) {
  const std::size_t n = b.degree();
  if (alpha.size() != n) {
    std::ostringstream msg;
    msg << "expected " << n << " targets, got " << alpha.size();
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  InterpolantRep rep(b, alpha);
  rep.inv_cofactor_at_zero_ = cofactors_at_own_zeros(b);
  for (auto& v : rep.inv_cofactor_at_zero_) v = 1.0 / v;

  if (n == 0) return rep;
  const auto zeros = b.zeros();
  Eigen::MatrixXcd k(n, n);
  Eigen::VectorXcd rhs(n);
  for (std::size_t row = 0; row < n; ++row) {
    rhs(row) = alpha[row];
    for (std::size_t col = 0; col < n; ++col) k(row, col) = kernel(zeros[col], zeros[row].value());
  }
  const Eigen::VectorXcd c = k.partialPivLu().solve(rhs);
  const double residual = (k * c - rhs).cwiseAbs().maxCoeff();
  rep.kernel_residual_ = residual;
  if (!c.allFinite() || !(residual <= kIllConditioned * alpha.sup_norm())) {
    rep.status_ = KernelSolveStatus::ill_conditioned;
    return rep;
  }
  rep.kernel_.assign(c.data(), c.data() + n);
  return rep;
}

double lebesgue_constant(const BlaschkeProduct& b, const CircleGrid& grid) {
  if (b.degree() == 0) return 1.0;
  const InterpolantRep basis = solve_kb(b, TargetVector::zeros(b.degree()));
  const CircleExtremum ext = circle_maximize(grid.with_args_of(b.zeros()), [&](double t) {
    double s = 0.0;
    for (const auto& l : basis.lagrange_basis(CirclePoint(t).value())) s += std::abs(l);
    return s;
  });
  return std::max(1.0, ext.value);
}

UnionConstruction::UnionConstruction(BlaschkeProduct b, BlaschkeProduct c)
    : b_(std::move(b)), c_(std::move(c)) {}

Complex UnionConstruction::g1(Complex z) const {
  const auto zeros = b_.zeros();
  const std::vector<Complex> bj = b_.cofactor_values(z);
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    sum += std::conj(tilde_gamma_[2 * j]) * b_.unit(j) * bj[j] * kernel(zeros[j], z);
  }
  return sum * c_.evaluate(z);
}

Complex UnionConstruction::g2(Complex z) const {
  const auto zeros = c_.zeros();
  const std::vector<Complex> cj = c_.cofactor_values(z);
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    sum += std::conj(tilde_gamma_[2 * j + 1]) * c_.unit(j) * cj[j] * kernel(zeros[j], z);
  }
  return sum * b_.evaluate(z);
}

UnionConstruction interpolate_union(const BlaschkeProduct& b, const BlaschkeProduct& c,
                                    const TargetVector& alpha, const TargetVector& beta) {
  const std::size_t n = b.degree();
  if (c.degree() != n || alpha.size() != n || beta.size() != n) {
    throw Error(ErrorCode::InvalidArgument,
                "B, C, alpha and beta must all have the same length");
  }
  const auto a = b.zeros();
  const auto z = c.zeros();
  double sep = 1.0;
  for (const auto& aj : a) {
    for (const auto& zk : z) {
      const double d = rho(aj, zk);
      if (d < ZeroSequence::kDuplicateTolerance) {
        throw Error(ErrorCode::ZeroCollision, "B and C share a zero");
      }
      sep = std::min(sep, d);
    }
  }
  if (sep < kMinUnionSeparation) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "separation " << sep << " is below " << kMinUnionSeparation;
    throw Error(ErrorCode::SeparationTooSmall, msg.str());
  }

  UnionConstruction u(b, c);
  std::vector<Complex> an(n), bn(n);
  for (std::size_t j = 0; j < n; ++j) {
    an[j] = alpha[j] / c.evaluate(a[j].value());
    bn[j] = beta[j] / b.evaluate(z[j].value());
  }
  u.alpha_n_ = TargetVector(an);
  u.beta_n_ = TargetVector(bn);

  const std::vector<Complex> b_own = cofactors_at_own_zeros(b);
  const std::vector<Complex> c_own = cofactors_at_own_zeros(c);
  u.tilde_gamma_.resize(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    // The factor unit |a|/-a equals -conj(a)/|a|, so conj(tilde) * unit
    // collapses to gamma' / B_j(a_j) and G1(a_j) = alpha_j.
    u.tilde_gamma_[2 * j] = b.unit(j) * std::conj(an[j]) / std::conj(b_own[j]);
    u.tilde_gamma_[2 * j + 1] = c.unit(j) * std::conj(bn[j]) / std::conj(c_own[j]);
  }
  return u;
}

double sup_norm(const InterpolantRep& f, const CircleGrid& grid) {
  return circle_maximize(grid.with_args_of(f.space().zeros()), [&](double t) {
           return std::abs(f.evaluate(CirclePoint(t).value()));
         }).value;
}

double sup_norm(const UnionConstruction& g, const CircleGrid& grid) {
  const CircleGrid g2 = grid.with_args_of(g.b().zeros()).with_args_of(g.c().zeros());
  return circle_maximize(g2, [&](double t) { return std::abs(g.evaluate(CirclePoint(t).value())); })
      .value;
}

NearbyResult nearby_iterate(const BlaschkeProduct& b, const ZeroSequence& z,
                            const TargetVector& alpha, std::size_t max_iter, double tol,
                            const CircleGrid& grid) {
  const std::size_t n = b.degree();
  if (z.size() != n || alpha.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "Z and alpha must have one entry per zero of B");
  }
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");

  IterationTrace trace;
  trace.M_used = lebesgue_constant(b, grid);
  double near = 0.0;
  for (std::size_t j = 0; j < n; ++j) near = std::max(near, rho(b.zeros()[j], z[j]));
  trace.epsilon_used = 1.0 - near;
  const double ratio = 2.0 * trace.M_used * near;
  if (ratio >= kWarningBand) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "nearness " << near << " is not below 1.5/(2M) with M = " << trace.M_used;
    throw Error(ErrorCode::ContractionViolated, msg.str());
  }
  trace.beyond_guaranteed_radius = ratio >= 1.0;

  const double alpha_norm = alpha.sup_norm();
  const double noise_floor = 1e-13 * (1.0 + alpha_norm);
  TargetVector residual = alpha;
  TargetVector accumulated = TargetVector::zeros(n);
  std::vector<Complex> achieved(n);  // sum of f_i(z_n) so far

  auto record = [&](std::size_t m, double r) {
    trace.residual_sup.push_back(r);
    trace.bound_curve.push_back(alpha_norm * std::pow(ratio, static_cast<double>(m)));
    if (r > kBoundFactor * trace.bound_curve.back() + noise_floor) trace.bound_dominated = false;
  };

  record(0, alpha_norm);
  trace.converged = alpha_norm <= tol;
  for (std::size_t m = 1; m <= max_iter && !trace.converged; ++m) {
    const InterpolantRep f = solve_kb(b, residual);
    accumulated += residual;
    for (std::size_t j = 0; j < n; ++j) achieved[j] += f.evaluate(z[j].value());
    std::vector<Complex> next(n);
    for (std::size_t j = 0; j < n; ++j) next[j] = alpha[j] - achieved[j];
    residual = TargetVector(std::move(next));
    const double r = residual.sup_norm();
    record(m, r);
    trace.converged = r <= tol;
  }
  if (!trace.converged) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "residual " << trace.residual_sup.back() << " above tol after " << max_iter
        << " steps";
    throw Error(ErrorCode::MaxIterExceeded, msg.str());
  }
  // solve_kb is linear in the targets, so sum_m f_m = solve_kb(sum_m r_m).
  return {solve_kb(b, accumulated), std::move(trace)};
}

}  // namespace blaschke_lab
