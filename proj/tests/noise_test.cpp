#include "ftqc/noise.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "ftqc/rng.hpp"

namespace ftqc {
namespace {

TEST(RngTest, Splitmix64MatchesReferenceVector) {
  uint64_t state = 0;
  EXPECT_EQ(splitmix64_next(state), 0xe220a8397b1dcdafull);
  EXPECT_EQ(splitmix64_next(state), 0x6e789e6aa1b965f4ull);
  EXPECT_EQ(splitmix64_next(state), 0x06c45d188009454full);
}

TEST(RngTest, StreamsAreDeterministicAndDistinct) {
  Xoshiro256 a(12345, 0), b(12345, 0), c(12345, 1), d(54321, 0);
  for (int i = 0; i < 64; ++i) EXPECT_EQ(a.next(), b.next());
  bool differs_c = false, differs_d = false;
  Xoshiro256 a2(12345, 0);
  for (int i = 0; i < 64; ++i) {
    uint64_t v = a2.next();
    differs_c |= v != c.next();
    differs_d |= v != d.next();
  }
  EXPECT_TRUE(differs_c);
  EXPECT_TRUE(differs_d);
}

TEST(RngTest, UniformInUnitInterval) {
  Xoshiro256 g(7);
  for (int i = 0; i < 10000; ++i) {
    double u = g.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(NoiseTest, DepolarizingRates) {
  const double p = 8e-3;
  NoiseModel m = NoiseModel::depolarizing(p);

  for (LocKind k : {LocKind::H, LocKind::T, LocKind::Tdg, LocKind::Rest}) {
    const KindNoise& t = m.at(k);
    ASSERT_EQ(t.classes.size(), 3u);
    EXPECT_EQ(t.classes[0], ErrorClass::single(Pauli::X));
    EXPECT_EQ(t.classes[1], ErrorClass::single(Pauli::Y));
    EXPECT_EQ(t.classes[2], ErrorClass::single(Pauli::Z));
    for (double q : t.probs) EXPECT_DOUBLE_EQ(q, p / 4.0);
    EXPECT_DOUBLE_EQ(t.total(), 3.0 * p / 4.0);
  }

  const KindNoise& cn = m.at(LocKind::Cnot);
  ASSERT_EQ(cn.classes.size(), 15u);
  for (std::size_t i = 0; i < 15; ++i) {
    EXPECT_EQ(cn.classes[i], ErrorClass::nontrivial_pair()[i]);
    EXPECT_DOUBLE_EQ(cn.probs[i], p / 16.0);
  }
  EXPECT_NEAR(cn.total(), 15.0 * p / 16.0, 1e-15);

  EXPECT_DOUBLE_EQ(m.at(LocKind::PrepZ).prob_of(ErrorClass::single(Pauli::X)),
                   p / 4.0);
  EXPECT_DOUBLE_EQ(m.at(LocKind::PrepZ).total(), p / 4.0);
  EXPECT_DOUBLE_EQ(m.at(LocKind::PrepX).prob_of(ErrorClass::single(Pauli::Z)),
                   p / 4.0);
  EXPECT_DOUBLE_EQ(m.at(LocKind::MeasZ).prob_of(ErrorClass::single(Pauli::X)),
                   p / 4.0);
  EXPECT_DOUBLE_EQ(m.at(LocKind::MeasX).prob_of(ErrorClass::single(Pauli::Z)),
                   p / 4.0);
}

TEST(NoiseTest, SampleWalksCumulativeThresholds) {
  NoiseModel m = NoiseModel::depolarizing(0.4);
  const KindNoise& t = m.at(LocKind::Rest);  // thresholds 0.1, 0.2, 0.3
  EXPECT_EQ(t.sample(0.0), ErrorClass::single(Pauli::X));
  EXPECT_EQ(t.sample(0.0999), ErrorClass::single(Pauli::X));
  EXPECT_EQ(t.sample(0.1001), ErrorClass::single(Pauli::Y));
  EXPECT_EQ(t.sample(0.2999), ErrorClass::single(Pauli::Z));
  EXPECT_TRUE(t.sample(0.3001).identity());
  EXPECT_TRUE(t.sample(0.9999).identity());

  const KindNoise& cn = m.at(LocKind::Cnot);  // steps of 0.025
  EXPECT_EQ(cn.sample(0.0), ErrorClass::nontrivial_pair()[0]);
  EXPECT_EQ(cn.sample(0.0999), ErrorClass::nontrivial_pair()[3]);
  EXPECT_EQ(cn.sample(15 * 0.025 - 1e-9), ErrorClass::nontrivial_pair()[14]);
  EXPECT_TRUE(cn.sample(15 * 0.025 + 1e-9).identity());
}

TEST(NoiseTest, MonotoneCouplingAcrossRates) {
  // A single uniform decides the fault at every rate; faulting at a lower
  // rate must imply faulting at any higher rate.
  NoiseModel lo = NoiseModel::depolarizing(1e-3);
  NoiseModel hi = NoiseModel::depolarizing(3e-3);
  Xoshiro256 g(99);
  for (LocKind k : {LocKind::Rest, LocKind::Cnot, LocKind::PrepZ,
                    LocKind::MeasX, LocKind::T}) {
    int faults = 0;
    for (int i = 0; i < 200000; ++i) {
      double u = g.uniform() * 4e-3;  // concentrate draws near thresholds
      bool f_lo = !lo.at(k).sample(u).identity();
      bool f_hi = !hi.at(k).sample(u).identity();
      if (f_lo) EXPECT_TRUE(f_hi);
      faults += f_lo;
    }
    EXPECT_GT(faults, 0);
  }
}

TEST(NoiseTest, SampledFrequenciesWithinThreeSigma) {
  const double p = 1e-2;
  const int n = 1000000;
  NoiseModel m = NoiseModel::depolarizing(p);
  Xoshiro256 g(2024);

  auto check_kind = [&](LocKind k) {
    const KindNoise& t = m.at(k);
    std::map<std::size_t, int> counts;
    for (int i = 0; i < n; ++i) {
      ErrorClass c = t.sample(g.uniform());
      if (!c.identity()) ++counts[c.index()];
    }
    for (std::size_t i = 0; i < t.classes.size(); ++i) {
      double q = t.probs[i];
      double sigma = std::sqrt(n * q * (1.0 - q));
      EXPECT_NEAR(counts[t.classes[i].index()], n * q, 3.0 * sigma)
          << kind_name(k) << " class " << t.classes[i].str();
    }
  };
  check_kind(LocKind::Rest);
  check_kind(LocKind::Cnot);
  check_kind(LocKind::PrepZ);
  check_kind(LocKind::MeasX);
}

TEST(NoiseTest, FromRatesBuildsEffectiveModel) {
  KindNoise cn;
  cn.classes = {ErrorClass::pair(Pauli::Z, Pauli::I),
                ErrorClass::pair(Pauli::I, Pauli::Z)};
  cn.probs = {2e-4, 1e-4};
  NoiseModel m = NoiseModel::from_rates({{LocKind::Cnot, cn}});
  EXPECT_TRUE(m.in_model());
  EXPECT_DOUBLE_EQ(
      m.at(LocKind::Cnot).prob_of(ErrorClass::pair(Pauli::Z, Pauli::I)), 2e-4);
  EXPECT_EQ(m.at(LocKind::Cnot).sample(1.5e-4),
            ErrorClass::pair(Pauli::Z, Pauli::I));
  EXPECT_EQ(m.at(LocKind::Cnot).sample(2.5e-4),
            ErrorClass::pair(Pauli::I, Pauli::Z));
  EXPECT_TRUE(m.at(LocKind::Cnot).sample(0.5).identity());
  // Untouched kinds have empty tables: they never fault.
  EXPECT_TRUE(m.at(LocKind::Rest).sample(0.0).identity());

  KindNoise bad;
  bad.classes = {ErrorClass::single(Pauli::X)};
  bad.probs = {1.25};
  EXPECT_FALSE(
      NoiseModel::from_rates({{LocKind::Rest, bad}}).in_model());

  KindNoise neg;
  neg.classes = {ErrorClass::single(Pauli::X)};
  neg.probs = {-1e-9};
  EXPECT_THROW(NoiseModel::from_rates({{LocKind::Rest, neg}}),
               std::invalid_argument);
}

}  // namespace
}  // namespace ftqc
