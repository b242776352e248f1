#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "blaschke_lab/errors.hpp"
#include "blaschke_lab/sequences.hpp"
#include "support/support.hpp"

using namespace blaschke_lab;
using testsupport::Rng;

namespace {

std::vector<Complex> values(const ZeroSequence& s) {
  std::vector<Complex> v;
  for (const auto& p : s) v.push_back(p.value());
  return v;
}

}  // namespace

TEST(FrostmanExample, FirstTerms) {
  const ZeroSequence s = frostman_example(2);
  EXPECT_LT(std::abs(s[0].value() - std::polar(0.5, 2.0 / 3.0)), 1e-16);
  EXPECT_LT(std::abs(s[1].value() - std::polar(0.75, 4.0 / 9.0)), 1e-16);
}

TEST(FrostmanExample, ModuliIncreaseAndDepthIsGuarded) {
  const ZeroSequence s = frostman_example(49);
  for (std::size_t j = 1; j < s.size(); ++j) {
    EXPECT_LT(s[j - 1].modulus(), s[j].modulus());
    EXPECT_LT(s[j].modulus(), 1.0);
  }
  for (std::size_t n : {50u, 60u, 61u}) {
    try {
      frostman_example(n);
      FAIL() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::TruncationTooDeep);
    }
  }
}

TEST(RadialSequence, Examples) {
  const ZeroSequence s = radial_sequence(0.5, 3);
  EXPECT_EQ(values(s), (std::vector<Complex>{0.5, 0.75, 0.875}));
  // Uniformly separated, but the two-sided product of (2^k - 1)/(2^k + 1)
  // keeps delta near 0.0148 rather than anywhere close to 0.2.
  const double delta = carleson(BlaschkeProduct(radial_sequence(0.5, 20))).delta;
  const double oracle = testsupport::carleson_delta(values(radial_sequence(0.5, 20)));
  EXPECT_NEAR(delta, oracle, 1e-9 * oracle);
  EXPECT_GT(delta, 0.01);
  EXPECT_THROW(radial_sequence(0.5, 60), Error);
}

TEST(Interlace, OrderAndRoundTrip) {
  const ZeroSequence a = ZeroSequence::from_complex(std::vector<Complex>{0.1, 0.2});
  const ZeroSequence z = ZeroSequence::from_complex(std::vector<Complex>{-0.1, -0.2});
  const ZeroSequence x = interlace(a, z);
  EXPECT_EQ(values(x), (std::vector<Complex>{0.1, -0.1, 0.2, -0.2}));
  const auto [a2, z2] = deinterlace(x);
  EXPECT_EQ(values(a2), values(a));
  EXPECT_EQ(values(z2), values(z));

  const TargetVector g = interlace_targets({1.0, 2.0}, {3.0, 4.0});
  EXPECT_EQ(g, (TargetVector{1.0, 3.0, 2.0, 4.0}));
  const auto [al, be] = deinterlace_targets(g);
  EXPECT_EQ(al, (TargetVector{1.0, 2.0}));
  EXPECT_EQ(be, (TargetVector{3.0, 4.0}));
}

TEST(Interlace, Errors) {
  const ZeroSequence a = ZeroSequence::from_complex(std::vector<Complex>{0.1, 0.2});
  const ZeroSequence z = ZeroSequence::from_complex(std::vector<Complex>{0.2, -0.2});
  try {
    interlace(a, z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicatePoint);
  }
  EXPECT_THROW(interlace(a, a.prefix(1)), Error);
}

TEST(Interlace, MergedCarlesonConstantStaysPositive) {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 10);
    // Separation >= 0.4 across and within both sets.
    const std::vector<Complex> merged = testsupport::random_separated(rng, 2 * n, 0.4);
    std::vector<Complex> av(merged.begin(), merged.begin() + n), zv(merged.begin() + n, merged.end());
    if (testsupport::carleson_delta(av) < 0.4 || testsupport::carleson_delta(zv) < 0.4) continue;
    const ZeroSequence x = interlace(ZeroSequence::from_complex(av), ZeroSequence::from_complex(zv));
    EXPECT_GT(carleson(BlaschkeProduct(x)).delta, 0.0);
    EXPECT_GT(testsupport::carleson_delta(values(x)), 0.0);
  }
}

TEST(PairedSequences, Statistics) {
  const PairedSequences p(ZeroSequence::from_complex(std::vector<Complex>{0.0, 0.5}),
                          ZeroSequence::from_complex(std::vector<Complex>{0.5, -0.5}));
  EXPECT_NEAR(p.nearness(), 0.8, 1e-15);
  EXPECT_EQ(p.separation(), 0.0);  // a_2 = z_1
  EXPECT_NEAR(p.z_self_separation(), 0.8, 1e-15);
  EXPECT_THROW(PairedSequences(p.a(), p.z().prefix(1)), Error);
}

TEST(PerturbSample, ZeroRadiusReturnsSameSequence) {
  const ZeroSequence a = frostman_example(5);
  const PairedSequences p = perturb_sample(a, 0.0, RngSeed{1});
  EXPECT_EQ(values(p.z()), values(a));
  EXPECT_EQ(p.nearness(), 0.0);
}

TEST(PerturbSample, DeterministicAndWithinRadius) {
  const ZeroSequence a = frostman_example(20);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PairedSequences p = perturb_sample(a, 0.5, RngSeed{seed});
    const PairedSequences q = perturb_sample(a, 0.5, RngSeed{seed});
    EXPECT_EQ(values(p.z()), values(q.z()));
    EXPECT_LE(p.nearness(), 0.5);
    for (std::size_t j = 0; j < a.size(); ++j) {
      EXPECT_LE(testsupport::rho(a[j].value(), p.z()[j].value()), 0.5 + 1e-15);
    }
    EXPECT_GE(p.z_self_separation(), kDefaultMinSeparation);
  }
  EXPECT_NE(values(perturb_sample(a, 0.5, RngSeed{1}).z()),
            values(perturb_sample(a, 0.5, RngSeed{2}).z()));
}

TEST(PerturbSample, Errors) {
  const ZeroSequence a = frostman_example(5);
  EXPECT_THROW(perturb_sample(a, 1.0, RngSeed{0}), Error);
  EXPECT_THROW(perturb_sample(a, -0.1, RngSeed{0}), Error);
  EXPECT_THROW(perturb_sample(a, 0.3, RngSeed{0}, 0.99), Error);
}

TEST(PerturbSample, ModulusAndPseudoInequalitiesHold) {
  const ZeroSequence a = frostman_example(20);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const double r = 0.3 + 0.2 * static_cast<double>(seed % 3);
    const PairedSequences p = perturb_sample(a, r, RngSeed{seed});
    const double cr = (1 + r) / (1 - r);
    for (std::size_t j = 0; j < a.size(); ++j) {
      const double wa = 1 - std::norm(a[j].value());
      const double wz = 1 - std::norm(p.z()[j].value());
      EXPECT_LE(wz, cr * wa * (1 + 1e-9));
      EXPECT_LE(wa, cr * wz * (1 + 1e-9));
      for (std::size_t k = j + 1; k < a.size(); ++k) {
        const double ga = one_minus_rho_squared(a[j], a[k]) / (1 + rho(a[j], a[k]));
        const double gz = one_minus_rho_squared(p.z()[j], p.z()[k]) / (1 + rho(p.z()[j], p.z()[k]));
        EXPECT_LE(ga, cr * cr * gz + 1e-12);
      }
    }
  }
}
