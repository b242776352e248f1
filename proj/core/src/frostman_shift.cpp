#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "blaschke_lab/errors.hpp"
#include "blaschke_lab/interpolation.hpp"

namespace blaschke_lab {

namespace {

constexpr std::size_t kDegreeCap = 40;
constexpr double kResidualBound = 1e-8;
constexpr int kMaxPolishSteps = 200;

// Coefficients (lowest degree first) of
//   P(z) = lambda prod_j u_j (z - a_j) - a prod_j (1 - conj(a_j) z),
// whose roots are the solutions of B(z) = a.
std::vector<Complex> shifted_numerator(const BlaschkeProduct& b, Complex a) {
  const auto zeros = b.zeros();
  std::vector<Complex> p{b.lambda()};
  std::vector<Complex> q{Complex(1.0, 0.0)};
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    const Complex aj = zeros[j].value();
    p[0] *= b.unit(j);
    p.push_back(0.0);
    q.push_back(0.0);
    for (std::size_t k = p.size() - 1; k > 0; --k) {
      p[k] = p[k - 1] - aj * p[k];
      q[k] = q[k] - std::conj(aj) * q[k - 1];
    }
    p[0] = -aj * p[0];
  }
  for (std::size_t k = 0; k < p.size(); ++k) p[k] -= a * q[k];
  return p;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs) {
  const auto n = static_cast<Eigen::Index>(coeffs.size() - 1);
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  const Complex lead = coeffs.back();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i > 0) c(i, i - 1) = 1.0;
    c(i, n - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
  }
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + n};
}

// Newton correction P/P' for P = (B - a) q, computed on the factored form:
// P'/P = q'/q + B'/(B - a). B' comes from prefix and suffix products, so it
// stays finite at the zeros of B.
Complex newton_correction(const BlaschkeProduct& b, Complex a, Complex z) {
  const auto zeros = b.zeros();
  const std::size_t n = zeros.size();
  std::vector<Complex> f(n), df(n);
  Complex dq_over_q{0.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    const Complex aj = zeros[j].value();
    const Complex den = one_minus_conj_product(aj, z);
    f[j] = b.factor(j, z);
    df[j] = aj == Complex(0.0, 0.0) ? Complex(1.0, 0.0)
                                    : b.unit(j) * zeros[j].one_minus_modulus_sq() / (den * den);
    dq_over_q -= std::conj(aj) / den;
  }
  std::vector<Complex> prefix(n + 1);
  prefix[0] = b.lambda();
  for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] * f[j];
  Complex suffix{1.0, 0.0};
  Complex db{0.0, 0.0};
  for (std::size_t j = n; j-- > 0;) {
    db += prefix[j] * df[j] * suffix;
    suffix *= f[j];
  }
  const Complex h = prefix[n] - a;
  if (h == Complex(0.0, 0.0)) return {0.0, 0.0};
  return 1.0 / (dq_over_q + db / h);
}

// Simultaneous Newton with the Aberth repulsion term, which keeps two
// starting values from collapsing onto the same root.
void polish(const BlaschkeProduct& b, Complex a, std::vector<Complex>& roots) {
  const std::size_t n = roots.size();
  for (int step = 0; step < kMaxPolishSteps; ++step) {
    double largest = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex w = newton_correction(b, a, roots[k]);
      Complex repulsion{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k && roots[j] != roots[k]) repulsion += 1.0 / (roots[k] - roots[j]);
      }
      const Complex delta = w / (1.0 - w * repulsion);
      if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag())) continue;
      roots[k] -= delta;
      largest = std::max(largest, std::abs(delta));
    }
    if (largest <= 4.0 * std::numeric_limits<double>::epsilon()) break;
  }
}

}  // namespace

ZeroSequence frostman_shift_zeros(const BlaschkeProduct& b, DiskPoint a) {
  const std::size_t n = b.degree();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "a constant has no Frostman shift zeros");
  if (n > kDegreeCap) {
    std::ostringstream msg;
    msg << "degree " << n << " exceeds the cap of " << kDegreeCap;
    throw Error(ErrorCode::DegreeCapExceeded, msg.str());
  }

  std::vector<Complex> roots = companion_roots(shifted_numerator(b, a.value()));
  polish(b, a.value(), roots);

  std::vector<DiskPoint> points;
  points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex r = roots[k];
    const bool inside = std::isfinite(r.real()) && std::isfinite(r.imag()) &&
                        std::abs(r) < 1.0 - DiskPoint::kBoundaryGuard;
    const double residual = inside ? std::abs(b.evaluate(r) - a.value())
                                   : std::numeric_limits<double>::infinity();
    if (!(residual <= kResidualBound)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "root " << r << " has residual " << residual;
      throw Error(ErrorCode::RootVerificationFailed, msg.str());
    }
    points.emplace_back(r);
  }
  try {
    return ZeroSequence(std::move(points));
  } catch (const Error& e) {
    throw Error(ErrorCode::RootVerificationFailed, e.what());
  }
}

}  // namespace blaschke_lab
