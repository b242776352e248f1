#include "blaschke_lab/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "blaschke_lab/errors.hpp"

namespace blaschke_lab {

namespace {

constexpr int kMaxRounds = 1000;
constexpr int kMaxDrawsPerPoint = 1000;

DiskPoint guarded_point(double modulus, double arg, std::size_t n) {
  if (!(modulus < 1.0 - DiskPoint::kBoundaryGuard)) {
    std::ostringstream msg;
    msg << "term " << n << " is indistinguishable from the unit circle in double precision";
    throw Error(ErrorCode::TruncationTooDeep, msg.str());
  }
  return DiskPoint(std::polar(modulus, arg));
}

/// Uniform double in [0, 1) from the top 53 bits, so the stream depends only
/// on the engine and not on the standard library's distribution code.
double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

ZeroSequence frostman_example(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "N must be at least 1");
  if (n > kMaxTruncationDepth) {
    throw Error(ErrorCode::TruncationTooDeep, "frostman_example supports N <= 60");
  }
  std::vector<DiskPoint> pts;
  pts.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const int e = static_cast<int>(k);
    const double modulus = 1.0 - std::ldexp(1.0, -e);
    const double arg = std::ldexp(1.0, e) / std::pow(3.0, e);
    pts.push_back(guarded_point(modulus, arg, k));
  }
  return ZeroSequence(std::move(pts));
}

ZeroSequence radial_sequence(double q, std::size_t n, double arg) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::InvalidArgument, "q must lie in (0, 1)");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "N must be at least 1");
  std::vector<DiskPoint> pts;
  pts.reserve(n);
  double qn = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    qn *= q;
    pts.push_back(guarded_point(1.0 - qn, arg, k));
  }
  return ZeroSequence(std::move(pts));
}

ZeroSequence interlace(const ZeroSequence& a, const ZeroSequence& z) {
  if (a.size() != z.size()) {
    throw Error(ErrorCode::InvalidArgument, "interlaced sequences must have equal length");
  }
  std::vector<DiskPoint> merged;
  merged.reserve(2 * a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    merged.push_back(a[j]);
    merged.push_back(z[j]);
  }
  return ZeroSequence(std::move(merged));
}

std::pair<ZeroSequence, ZeroSequence> deinterlace(const ZeroSequence& x) {
  if (x.size() % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "an interlaced sequence has even length");
  }
  std::vector<DiskPoint> a, z;
  for (std::size_t j = 0; j < x.size(); j += 2) {
    a.push_back(x[j]);
    z.push_back(x[j + 1]);
  }
  return {ZeroSequence(std::move(a)), ZeroSequence(std::move(z))};
}

TargetVector interlace_targets(const TargetVector& alpha, const TargetVector& beta) {
  if (alpha.size() != beta.size()) {
    throw Error(ErrorCode::InvalidArgument, "interlaced targets must have equal length");
  }
  std::vector<TargetVector::value_type> out;
  out.reserve(2 * alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    out.push_back(alpha[j]);
    out.push_back(beta[j]);
  }
  return TargetVector(std::move(out));
}

std::pair<TargetVector, TargetVector> deinterlace_targets(const TargetVector& gamma) {
  if (gamma.size() % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "interlaced targets have even length");
  }
  std::vector<TargetVector::value_type> a, b;
  for (std::size_t j = 0; j < gamma.size(); j += 2) {
    a.push_back(gamma[j]);
    b.push_back(gamma[j + 1]);
  }
  return {TargetVector(std::move(a)), TargetVector(std::move(b))};
}

PairedSequences::PairedSequences(ZeroSequence a, ZeroSequence z)
    : a_(std::move(a)), z_(std::move(z)) {
  if (a_.size() != z_.size()) {
    throw Error(ErrorCode::InvalidArgument, "paired sequences must have equal length");
  }
  separation_ = 1.0;
  for (std::size_t j = 0; j < a_.size(); ++j) {
    nearness_ = std::max(nearness_, rho(a_[j], z_[j]));
    for (std::size_t k = 0; k < z_.size(); ++k) separation_ = std::min(separation_, rho(a_[j], z_[k]));
  }
  z_self_separation_ = z_.self_separation();
}

TargetVector random_targets(std::size_t n, RngSeed seed) {
  std::mt19937_64 gen(seed.value);
  std::vector<TargetVector::value_type> out(n);
  for (auto& v : out) {
    const double re = 2.0 * uniform01(gen) - 1.0;
    const double im = 2.0 * uniform01(gen) - 1.0;
    v = {re, im};
  }
  return TargetVector(std::move(out));
}

PairedSequences perturb_sample(const ZeroSequence& a, double r, RngSeed seed, double min_sep) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "r must lie in [0, 1)");
  if (!(min_sep >= 0.0)) throw Error(ErrorCode::InvalidArgument, "min_sep must be >= 0");
  if (a.size() > 1 && min_sep >= a.self_separation()) {
    throw Error(ErrorCode::InvalidArgument, "min_sep must be below the self-separation of A");
  }
  if (r == 0.0) return PairedSequences(a, a);

  std::mt19937_64 gen(seed.value);
  const std::size_t n = a.size();
  std::vector<EuclideanDisk> disks;
  disks.reserve(n);
  for (const auto& p : a) disks.push_back(pseudo_disk_to_euclidean(p, r));

  auto draw = [&](std::size_t j) {
    for (int attempt = 0; attempt < kMaxDrawsPerPoint; ++attempt) {
      const double u = uniform01(gen);
      const double v = uniform01(gen);
      const Complex w = disks[j].center + disks[j].radius * std::sqrt(u) * std::polar(1.0, kTwoPi * v);
      if (!(std::abs(w) < 1.0 - DiskPoint::kBoundaryGuard)) continue;
      const DiskPoint p(w);
      // The Euclidean image is exact only up to rounding; enforce rho <= r.
      if (rho(a[j], p) <= r) return p;
    }
    throw Error(ErrorCode::SamplingExhausted, "could not draw a point inside the pseudohyperbolic disk");
  };

  std::vector<DiskPoint> z(n);
  for (std::size_t j = 0; j < n; ++j) z[j] = draw(j);

  for (int round = 0; round < kMaxRounds; ++round) {
    std::vector<std::size_t> offenders;
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        if (rho(z[j], z[k]) < min_sep) {
          offenders.push_back(k);
          break;
        }
      }
    }
    if (offenders.empty()) {
      PairedSequences out(a, ZeroSequence(std::move(z)));
      if (out.nearness() > r) {
        throw Error(ErrorCode::PrecisionViolation, "sampled nearness exceeds r");
      }
      return out;
    }
    for (std::size_t k : offenders) z[k] = draw(k);
  }
  std::ostringstream msg;
  msg << "no " << min_sep << "-separated perturbation found after " << kMaxRounds
      << " rounds; r is too large for the separation of A";
  throw Error(ErrorCode::SamplingExhausted, msg.str());
}

}  // namespace blaschke_lab
