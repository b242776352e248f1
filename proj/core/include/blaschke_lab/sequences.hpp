#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "blaschke_lab/blaschke.hpp"
#include "blaschke_lab/target_vector.hpp"

namespace blaschke_lab {

struct RngSeed {
  std::uint64_t value = 0;
};

inline constexpr std::size_t kMaxTruncationDepth = 60;
inline constexpr double kDefaultMinSeparation = 0.1;

/// a_n = (1 - 2^-n) exp(i 2^n / 3^n), n = 1..N. Throws TruncationTooDeep for
/// N > 60, or once 1 - |a_n| falls under the disk guard (from n = 50 on).
ZeroSequence frostman_example(std::size_t n);

/// (1 - q^n) exp(i arg), n = 1..N, for 0 < q < 1.
ZeroSequence radial_sequence(double q, std::size_t n, double arg = 0.0);

/// [a_1, z_1, a_2, z_2, ...]. Throws DuplicatePoint if the merged points are
/// not distinct, InvalidArgument on a length mismatch.
ZeroSequence interlace(const ZeroSequence& a, const ZeroSequence& z);
std::pair<ZeroSequence, ZeroSequence> deinterlace(const ZeroSequence& x);

TargetVector interlace_targets(const TargetVector& alpha, const TargetVector& beta);
std::pair<TargetVector, TargetVector> deinterlace_targets(const TargetVector& gamma);

/// n targets drawn uniformly from the square [-1, 1) x [-1, 1).
TargetVector random_targets(std::size_t n, RngSeed seed);

/// Two equal-length sequences with their pairing statistics, computed once
/// at construction (the object is immutable).
class PairedSequences {
 public:
  PairedSequences(ZeroSequence a, ZeroSequence z);

  const ZeroSequence& a() const noexcept { return a_; }
  const ZeroSequence& z() const noexcept { return z_; }
  std::size_t size() const noexcept { return a_.size(); }

  /// sup_j rho(a_j, z_j)
  double nearness() const noexcept { return nearness_; }
  /// inf_{j,k} rho(a_j, z_k)
  double separation() const noexcept { return separation_; }
  /// inf_{j != k} rho(z_j, z_k)
  double z_self_separation() const noexcept { return z_self_separation_; }

 private:
  ZeroSequence a_;
  ZeroSequence z_;
  double nearness_ = 0.0;
  double separation_ = 0.0;
  double z_self_separation_ = 1.0;
};

/// Draws z_n uniformly from the Euclidean image of the pseudohyperbolic disk
/// {rho(a_n, .) <= r}, then redraws offending points until
/// inf_{j != k} rho(z_j, z_k) >= min_sep. r = 0 returns Z = A.
/// Throws SamplingExhausted after 1000 redraw rounds.
PairedSequences perturb_sample(const ZeroSequence& a, double r, RngSeed seed,
                               double min_sep = kDefaultMinSeparation);

}  // namespace blaschke_lab
