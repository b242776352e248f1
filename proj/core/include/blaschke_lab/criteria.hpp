#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "blaschke_lab/blaschke.hpp"
#include "blaschke_lab/circle_grid.hpp"
#include "blaschke_lab/sequences.hpp"
#include "blaschke_lab/target_vector.hpp"

namespace blaschke_lab {

enum class CriterionName { carleson, frostman, cohn, dyakonov, vasyunin, cross_modulus, separation, nearness };

std::string_view to_string(CriterionName name) noexcept;

struct IndexPair {
  std::size_t j = 0;
  std::size_t k = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Where the extremum was attained: a sequence index, an (a_j, z_k) pair, or
/// a point of the circle.
using Witness = std::variant<std::monostate, std::size_t, IndexPair, CirclePoint>;

/// value is always exactly the extremum of per_index, or for circle
/// suprema the extremum of the circle scan (per_index then holds the
/// individual terms at the maximizing point).
struct CriterionReport {
  CriterionName name = CriterionName::carleson;
  double value = 0.0;
  Witness witness;
  std::vector<double> per_index;
  std::optional<CircleGrid> grid_meta;
};

/// inf_n (1 - |a_n|^2) |B'(a_n)|.
CriterionReport carleson_criterion(const BlaschkeProduct& b);

/// The terms (1 - |a_j|) / |zeta - a_j| at one point of the circle.
std::vector<double> frostman_terms(const ZeroSequence& a, CirclePoint zeta);
double frostman_sum_at(const ZeroSequence& a, CirclePoint zeta);

/// sup over the circle of sum_j (1 - |a_j|) / |zeta - a_j|; the arguments of
/// the points are injected into the grid.
CriterionReport frostman_sum(const ZeroSequence& a, const CircleGrid& grid = {});

/// sup_n sum_k (1 - |a_k|) / |1 - conj(a_k) a_n|.
CriterionReport cohn_sum(const ZeroSequence& a);

/// sup_k | sum_j alpha_j / (B'(a_j) (1 - a_j conj(a_k))) |, with the
/// conjugation placed exactly as in Dyakonov's criterion.
CriterionReport dyakonov_sup(const BlaschkeProduct& b, const TargetVector& alpha);

/// sum_n (1 - |a_n|) log(1 / (1 - |a_n|)).
double vasyunin_sum(const ZeroSequence& a);

/// inf_j |B(z_j)|. Throws ZeroCollision if some z_j is a zero of B.
CriterionReport cross_modulus(const BlaschkeProduct& b, const ZeroSequence& z);

/// inf_{j,k} rho(a_j, z_k); per_index[j] = min_k rho(a_j, z_k).
CriterionReport separation(const PairedSequences& p);
/// sup_j rho(a_j, z_j).
CriterionReport nearness(const PairedSequences& p);

/// Finite-data envelopes of the constants in the perturbation argument for
/// Frostman sequences. All empirical_* values are min/max over the data given.
struct PerturbationReport {
  double r = 0.0;
  double C_r = 1.0;  // (1 + r) / (1 - r)
  double empirical_C1 = 1.0;  // min over (j,k) of (1 - rho^2(z_j,z_k)) / (1 - rho^2(a_j,a_k))
  double empirical_C2 = 1.0;  // max of the same ratio
  double empirical_D1 = 1.0;  // min_n (1 - |z_n|^2) / (1 - |a_n|^2)
  double empirical_D2 = 1.0;  // max of the same ratio
  double empirical_C3 = 1.0;  // min over j and zeta of |1 - conj(z_j) zeta| / |1 - conj(a_j) zeta|
  double empirical_C4 = 1.0;  // min over j and zeta of the kernel-weight ratio a-side / z-side
  double frostman_A = 0.0;
  double frostman_Z = 0.0;
  /// 2 / C4 * frostman_A: an upper envelope for frostman_Z implied by C4
  /// (the 2 converts 1 - |a|^2 back to 1 - |a|).
  double frostman_Z_envelope = 0.0;
  /// Failures (beyond 1e-12) of 1 - |z_n|^2 <= C_r (1 - |a_n|^2) and of the
  /// symmetric inequality.
  std::size_t violations = 0;
  /// Failures (beyond 1e-12) of 1 - rho(a_j,a_k) <= C_r^2 (1 - rho(z_j,z_k)).
  std::size_t pseudo_violations = 0;
};

/// Throws NearnessExceeded when nearness(p) > r.
PerturbationReport perturbation_report(const PairedSequences& p, double r, const CircleGrid& grid = {});

}  // namespace blaschke_lab
