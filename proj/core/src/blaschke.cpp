#include "blaschke_lab/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blaschke_lab/errors.hpp"

namespace blaschke_lab {

namespace {

constexpr double kCoincidence = 1e-13;
// |zeta| for zeta = (cos t, sin t) is 1 only up to rounding.
constexpr double kClosedDiskSlack = 1e-12;

Complex unit_for(const DiskPoint& a) {
  const double m = a.modulus();
  if (m == 0.0) return {1.0, 0.0};
  return -m / a.value();
}

}  // namespace

ZeroSequence::ZeroSequence(std::vector<DiskPoint> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "a zero sequence needs at least one point");
  }
  for (std::size_t j = 0; j < points_.size(); ++j) {
    for (std::size_t k = j + 1; k < points_.size(); ++k) {
      if (rho(points_[j], points_[k]) < kDuplicateTolerance) {
        std::ostringstream msg;
        msg << "points " << j << " and " << k << " coincide";
        throw Error(ErrorCode::DuplicatePoint, msg.str());
      }
    }
  }
}

ZeroSequence ZeroSequence::from_complex(std::span<const Complex> values) {
  std::vector<DiskPoint> pts;
  pts.reserve(values.size());
  for (const auto& v : values) pts.emplace_back(v);
  return ZeroSequence(std::move(pts));
}

ZeroSequence ZeroSequence::prefix(std::size_t n) const {
  if (n == 0 || n > points_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "prefix length out of range");
  }
  return ZeroSequence(std::vector<DiskPoint>(points_.begin(), points_.begin() + n));
}

double ZeroSequence::self_separation() const {
  double best = 1.0;
  for (std::size_t j = 0; j < points_.size(); ++j) {
    for (std::size_t k = j + 1; k < points_.size(); ++k) {
      best = std::min(best, rho(points_[j], points_[k]));
    }
  }
  return best;
}

BlaschkeProduct::BlaschkeProduct(const ZeroSequence& zeros, CirclePoint rotation)
    : BlaschkeProduct(std::vector<DiskPoint>(zeros.begin(), zeros.end()), rotation) {}

BlaschkeProduct::BlaschkeProduct(std::vector<DiskPoint> zeros, CirclePoint rotation)
    : zeros_(std::move(zeros)), rotation_(rotation), lambda_(rotation.value()) {
  units_.reserve(zeros_.size());
  for (const auto& a : zeros_) units_.push_back(unit_for(a));
}

BlaschkeProduct BlaschkeProduct::constant(CirclePoint rotation) {
  return BlaschkeProduct(std::vector<DiskPoint>{}, rotation);
}

Complex BlaschkeProduct::factor(std::size_t j, Complex z) const noexcept {
  const Complex a = zeros_[j].value();
  if (a == Complex(0.0, 0.0)) return z;
  return units_[j] * (z - a) / one_minus_conj_product(a, z);
}

void BlaschkeProduct::check_closed_disk(Complex z) const {
  if (!(std::abs(z) <= 1.0 + kClosedDiskSlack)) {
    throw Error(ErrorCode::InvalidArgument, "Blaschke products are evaluated on the closed disk only");
  }
}

Complex BlaschkeProduct::evaluate(Complex z) const {
  check_closed_disk(z);
  Complex acc = lambda_;
  for (std::size_t j = 0; j < zeros_.size(); ++j) acc *= factor(j, z);
  return acc;
}

std::vector<Complex> BlaschkeProduct::cofactor_values(Complex z) const {
  check_closed_disk(z);
  const std::size_t n = zeros_.size();
  std::vector<Complex> f(n);
  for (std::size_t j = 0; j < n; ++j) f[j] = factor(j, z);

  // out[j] = lambda * prod_{k<j} f_k * prod_{k>j} f_k
  std::vector<Complex> out(n);
  Complex prefix = lambda_;
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = prefix;
    prefix *= f[j];
  }
  Complex suffix{1.0, 0.0};
  for (std::size_t j = n; j-- > 0;) {
    out[j] *= suffix;
    suffix *= f[j];
  }
  return out;
}

Complex BlaschkeProduct::derivative(Complex z, std::optional<std::size_t> exclude) const {
  check_closed_disk(z);
  std::optional<std::size_t> hit;
  for (std::size_t j = 0; j < zeros_.size(); ++j) {
    if (std::abs(z - zeros_[j].value()) <= kCoincidence) {
      hit = j;
      break;
    }
  }

  if (hit) {
    if (!exclude || *exclude != *hit) {
      std::ostringstream msg;
      msg << "derivative requested at zero " << *hit << " without the matching exclude index";
      throw Error(ErrorCode::EvaluationAtZero, msg.str());
    }
    // B' = b_j' B_j + b_j B_j'; at z == a_j the second term vanishes and the
    // first is (|a_j| / -a_j) / (1 - |a_j|^2) * B_j(a_j).
    const std::size_t j = *hit;
    const Complex a = zeros_[j].value();
    const double w = zeros_[j].one_minus_modulus_sq();
    const Complex den = one_minus_conj_product(a, z);
    const Complex bj_prime = z == a ? units_[j] / w : units_[j] * w / (den * den);
    const Complex bj = factor(j, z);
    const BlaschkeProduct rest = cofactor(j);
    Complex total = bj_prime * rest.evaluate(z);
    if (bj != Complex(0.0, 0.0) && rest.degree() > 0) total += bj * rest.derivative(z);
    return total;
  }

  // B'/B = sum_j (1 - |a_j|^2) / ((z - a_j)(1 - conj(a_j) z))
  Complex log_derivative{0.0, 0.0};
  for (const auto& aj : zeros_) {
    const Complex a = aj.value();
    log_derivative += aj.one_minus_modulus_sq() / ((z - a) * one_minus_conj_product(a, z));
  }
  return evaluate(z) * log_derivative;
}

BlaschkeProduct BlaschkeProduct::cofactor(std::size_t j) const {
  if (j >= zeros_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "cofactor index out of range");
  }
  std::vector<DiskPoint> rest;
  rest.reserve(zeros_.size() - 1);
  for (std::size_t k = 0; k < zeros_.size(); ++k) {
    if (k != j) rest.push_back(zeros_[k]);
  }
  return BlaschkeProduct(std::move(rest), rotation_);
}

CarlesonReport carleson(const BlaschkeProduct& b) {
  CarlesonReport rep;
  rep.per_zero.reserve(b.degree());
  const auto zeros = b.zeros();
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    const double q = zeros[j].one_minus_modulus_sq() * std::abs(b.derivative(zeros[j].value(), j));
    rep.per_zero.push_back({j, q});
  }
  if (!rep.per_zero.empty()) {
    auto it = std::min_element(rep.per_zero.begin(), rep.per_zero.end(),
                               [](const auto& x, const auto& y) { return x.quantity < y.quantity; });
    rep.delta = it->quantity;
    rep.argmin = it->index;
  }
  return rep;
}

}  // namespace blaschke_lab
