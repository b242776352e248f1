#include "blaschke_lab/criteria.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "blaschke_lab/errors.hpp"

namespace blaschke_lab {

namespace {

constexpr double kHardSlack = 1e-12;

std::size_t argmax(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

std::size_t argmin(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

// 1 - rho computed from 1 - rho^2 to keep relative accuracy near rho = 1.
double one_minus_rho(DiskPoint a, DiskPoint z) {
  const double r = rho(a, z);
  return one_minus_rho_squared(a, z) / (1.0 + r);
}

}  // namespace

std::string_view to_string(CriterionName name) noexcept {
  switch (name) {
    case CriterionName::carleson: return "carleson";
    case CriterionName::frostman: return "frostman";
    case CriterionName::cohn: return "cohn";
    case CriterionName::dyakonov: return "dyakonov";
    case CriterionName::vasyunin: return "vasyunin";
    case CriterionName::cross_modulus: return "cross_modulus";
    case CriterionName::separation: return "separation";
    case CriterionName::nearness: return "nearness";
  }
  return "unknown";
}

CriterionReport carleson_criterion(const BlaschkeProduct& b) {
  const CarlesonReport c = carleson(b);
  CriterionReport rep;
  rep.name = CriterionName::carleson;
  rep.per_index.reserve(c.per_zero.size());
  for (const auto& e : c.per_zero) rep.per_index.push_back(e.quantity);
  if (!rep.per_index.empty()) {
    const std::size_t i = argmin(rep.per_index);
    rep.value = rep.per_index[i];
    rep.witness = i;
  } else {
    rep.value = c.delta;
  }
  return rep;
}

std::vector<double> frostman_terms(const ZeroSequence& a, CirclePoint zeta) {
  const Complex z = zeta.value();
  std::vector<double> terms;
  terms.reserve(a.size());
  for (const auto& p : a) terms.push_back(p.one_minus_modulus() / std::abs(z - p.value()));
  return terms;
}

double frostman_sum_at(const ZeroSequence& a, CirclePoint zeta) {
  const Complex z = zeta.value();
  double s = 0.0;
  for (const auto& p : a) s += p.one_minus_modulus() / std::abs(z - p.value());
  return s;
}

CriterionReport frostman_sum(const ZeroSequence& a, const CircleGrid& grid) {
  const CircleGrid effective = grid.with_args_of(a.points());
  const CircleExtremum ext =
      circle_maximize(effective, [&](double t) { return frostman_sum_at(a, CirclePoint(t)); });
  CriterionReport rep;
  rep.name = CriterionName::frostman;
  rep.value = ext.value;
  rep.witness = ext.at;
  rep.per_index = frostman_terms(a, ext.at);
  rep.grid_meta = effective;
  return rep;
}

CriterionReport cohn_sum(const ZeroSequence& a) {
  CriterionReport rep;
  rep.name = CriterionName::cohn;
  rep.per_index.reserve(a.size());
  for (const auto& an : a) {
    double row = 0.0;
    for (const auto& ak : a) {
      row += ak.one_minus_modulus() / std::abs(one_minus_conj_product(ak.value(), an.value()));
    }
    rep.per_index.push_back(row);
  }
  const std::size_t i = argmax(rep.per_index);
  rep.value = rep.per_index[i];
  rep.witness = i;
  return rep;
}

CriterionReport dyakonov_sup(const BlaschkeProduct& b, const TargetVector& alpha) {
  if (alpha.size() != b.degree()) {
    throw Error(ErrorCode::InvalidArgument, "target vector length must equal the degree of B");
  }
  const auto zeros = b.zeros();
  const std::size_t n = zeros.size();
  std::vector<Complex> weights(n);
  for (std::size_t j = 0; j < n; ++j) weights[j] = alpha[j] / b.derivative(zeros[j].value(), j);

  CriterionReport rep;
  rep.name = CriterionName::dyakonov;
  rep.per_index.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) sum += weights[j] / one_minus_conj_product(zeros[k].value(), zeros[j].value());
    rep.per_index.push_back(std::abs(sum));
  }
  if (n > 0) {
    const std::size_t i = argmax(rep.per_index);
    rep.value = rep.per_index[i];
    rep.witness = i;
  }
  return rep;
}

double vasyunin_sum(const ZeroSequence& a) {
  double s = 0.0;
  for (const auto& p : a) {
    const double d = p.one_minus_modulus();
    s += -d * std::log(d);
  }
  return s;
}

CriterionReport cross_modulus(const BlaschkeProduct& b, const ZeroSequence& z) {
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (const auto& a : b.zeros()) {
      if (rho(a, z[j]) < ZeroSequence::kDuplicateTolerance) {
        std::ostringstream msg;
        msg << "z_" << j << " coincides with a zero of B";
        throw Error(ErrorCode::ZeroCollision, msg.str());
      }
    }
  }
  CriterionReport rep;
  rep.name = CriterionName::cross_modulus;
  rep.per_index.reserve(z.size());
  for (const auto& p : z) rep.per_index.push_back(std::abs(b.evaluate(p.value())));
  const std::size_t i = argmin(rep.per_index);
  rep.value = rep.per_index[i];
  rep.witness = i;
  return rep;
}

CriterionReport separation(const PairedSequences& p) {
  CriterionReport rep;
  rep.name = CriterionName::separation;
  std::vector<std::size_t> partner(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    double best = 2.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const double d = rho(p.a()[j], p.z()[k]);
      if (d < best) {
        best = d;
        partner[j] = k;
      }
    }
    rep.per_index.push_back(best);
  }
  const std::size_t j = argmin(rep.per_index);
  rep.value = rep.per_index[j];
  rep.witness = IndexPair{j, partner[j]};
  return rep;
}

CriterionReport nearness(const PairedSequences& p) {
  CriterionReport rep;
  rep.name = CriterionName::nearness;
  for (std::size_t j = 0; j < p.size(); ++j) rep.per_index.push_back(rho(p.a()[j], p.z()[j]));
  const std::size_t j = argmax(rep.per_index);
  rep.value = rep.per_index[j];
  rep.witness = j;
  return rep;
}

PerturbationReport perturbation_report(const PairedSequences& p, double r, const CircleGrid& grid) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "r must lie in [0, 1)");
  if (p.nearness() > r) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "nearness " << p.nearness() << " exceeds r = " << r;
    throw Error(ErrorCode::NearnessExceeded, msg.str());
  }
  const auto& a = p.a();
  const auto& z = p.z();
  const std::size_t n = p.size();

  PerturbationReport rep;
  rep.r = r;
  rep.C_r = (1.0 + r) / (1.0 - r);
  const double cr = rep.C_r;

  rep.empirical_D1 = rep.empirical_D2 = 1.0;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double wa = a[i].one_minus_modulus_sq();
    const double wz = z[i].one_minus_modulus_sq();
    if (wz - cr * wa > kHardSlack) ++rep.violations;
    if (wa - cr * wz > kHardSlack) ++rep.violations;
    const double ratio = wz / wa;
    rep.empirical_D1 = first ? ratio : std::min(rep.empirical_D1, ratio);
    rep.empirical_D2 = first ? ratio : std::max(rep.empirical_D2, ratio);
    first = false;
  }

  rep.empirical_C1 = rep.empirical_C2 = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const double ratio = one_minus_rho_squared(z[j], z[k]) / one_minus_rho_squared(a[j], a[k]);
      rep.empirical_C1 = std::min(rep.empirical_C1, ratio);
      rep.empirical_C2 = std::max(rep.empirical_C2, ratio);

      const double ga = one_minus_rho(a[j], a[k]);
      const double gz = one_minus_rho(z[j], z[k]);
      if (ga - cr * cr * gz > kHardSlack) ++rep.pseudo_violations;
      if (gz - cr * cr * ga > kHardSlack) ++rep.pseudo_violations;
    }
  }

  bool first_c3 = true;
  for (std::size_t j = 0; j < n; ++j) {
    const std::array<DiskPoint, 2> pair{a[j], z[j]};
    const CircleGrid local = grid.with_args_of(pair);
    const Complex aj = a[j].value();
    const Complex zj = z[j].value();
    const CircleExtremum ext = circle_minimize(local, [&](double t) {
      const Complex zeta = CirclePoint(t).value();
      return std::abs(one_minus_conj_product(zj, zeta)) / std::abs(one_minus_conj_product(aj, zeta));
    });
    const double c4 = a[j].one_minus_modulus_sq() / z[j].one_minus_modulus_sq() * ext.value;
    rep.empirical_C3 = first_c3 ? ext.value : std::min(rep.empirical_C3, ext.value);
    rep.empirical_C4 = first_c3 ? c4 : std::min(rep.empirical_C4, c4);
    first_c3 = false;
  }

  rep.frostman_A = frostman_sum(a, grid).value;
  rep.frostman_Z = frostman_sum(z, grid).value;
  rep.frostman_Z_envelope = 2.0 / rep.empirical_C4 * rep.frostman_A;
  return rep;
}

}  // namespace blaschke_lab
