#include "ftqc/pauli.hpp"

#include <gtest/gtest.h>

namespace ftqc {
namespace {

TEST(Pauli, SingleQubitComposition) {
  EXPECT_EQ(compose(Pauli::X, Pauli::Z), Pauli::Y);
  EXPECT_EQ(compose(Pauli::X, Pauli::X), Pauli::I);
  EXPECT_EQ(compose(Pauli::Y, Pauli::Z), Pauli::X);
  EXPECT_EQ(compose(Pauli::Y, Pauli::X), Pauli::Z);
  EXPECT_EQ(compose(Pauli::I, Pauli::Z), Pauli::Z);
}

TEST(Pauli, ParseAndPrintRoundTrip) {
  auto f = PauliFrame::from_string("X1 Z5 Y12", 15);
  EXPECT_EQ(f.at(0), Pauli::X);
  EXPECT_EQ(f.at(4), Pauli::Z);
  EXPECT_EQ(f.at(11), Pauli::Y);
  EXPECT_EQ(f.weight(), 3u);
  EXPECT_EQ(f.str(), "X1 Z5 Y12");
  EXPECT_EQ(PauliFrame::from_string(f.str(), 15), f);

  auto id = PauliFrame::from_string("I", 7);
  EXPECT_TRUE(id.identity());
  EXPECT_EQ(id.str(), "I");
}

TEST(Pauli, ParseComposesRepeatedQubits) {
  auto f = PauliFrame::from_string("X3 Z3", 7);
  EXPECT_EQ(f.at(2), Pauli::Y);
  auto g = PauliFrame::from_string("X3 X3", 7);
  EXPECT_TRUE(g.identity());
}

TEST(Pauli, ParseRejectsBadInput) {
  EXPECT_THROW(PauliFrame::from_string("X0", 7), std::out_of_range);
  EXPECT_THROW(PauliFrame::from_string("X8", 7), std::out_of_range);
  EXPECT_THROW(PauliFrame::from_string("Q3", 7), std::invalid_argument);
}

TEST(Pauli, CompositionIsXor) {
  auto a = PauliFrame::from_string("X1 X2 Z3", 7);
  auto b = PauliFrame::from_string("Z1 X2 X3", 7);
  auto c = a * b;
  EXPECT_EQ(c.str(), "Y1 Y3");
  EXPECT_TRUE((c * c).identity());
  EXPECT_EQ(c * b, a);
}

TEST(Pauli, CommutationIsSymplecticParity) {
  auto x1 = PauliFrame::from_string("X1", 5);
  auto z1 = PauliFrame::from_string("Z1", 5);
  auto z2 = PauliFrame::from_string("Z2", 5);
  EXPECT_FALSE(x1.commutes_with(z1));
  EXPECT_TRUE(x1.commutes_with(z2));
  EXPECT_TRUE(x1.commutes_with(x1));

  // XX vs ZZ overlap twice -> commute; XX vs ZI overlap once -> anticommute.
  auto xx = PauliFrame::from_string("X1 X2", 5);
  auto zz = PauliFrame::from_string("Z1 Z2", 5);
  auto zi = PauliFrame::from_string("Z1", 5);
  EXPECT_TRUE(xx.commutes_with(zz));
  EXPECT_FALSE(xx.commutes_with(zi));

  // Y1 vs X1: x*z' = 0, z*x' = 1 -> anticommute. Y1 vs Y1 -> commute.
  auto y1 = PauliFrame::from_string("Y1", 5);
  EXPECT_FALSE(y1.commutes_with(x1));
  EXPECT_TRUE(y1.commutes_with(y1));
}

TEST(Pauli, RestrictionKeepsOrder) {
  auto f = PauliFrame::from_string("X1 Z5 Y12", 15);
  const std::size_t pick[] = {4, 0, 11};
  auto r = f.restricted_to(pick);
  EXPECT_EQ(r.num_qubits(), 3u);
  EXPECT_EQ(r.str(), "Z1 X2 Y3");
}

TEST(Pauli, WordPackingAcross64Qubits) {
  PauliFrame f(105);
  f.set(0, Pauli::X);
  f.set(63, Pauli::Y);
  f.set(64, Pauli::Z);
  f.set(104, Pauli::Y);
  EXPECT_EQ(f.weight(), 4u);
  EXPECT_EQ(f.str(), "X1 Y64 Z65 Y105");
  EXPECT_EQ(PauliFrame::from_string(f.str(), 105), f);
  f.mul(63, Pauli::X);
  EXPECT_EQ(f.at(63), Pauli::Z);
}

TEST(ErrorClass, LabelsAndComposition) {
  EXPECT_EQ(ErrorClass::single(Pauli::Z).str(), "Z");
  EXPECT_EQ(ErrorClass::pair(Pauli::Z, Pauli::I).str(), "ZI");
  EXPECT_EQ(ErrorClass::parse("ZI"), ErrorClass::pair(Pauli::Z, Pauli::I));
  EXPECT_TRUE(ErrorClass::parse("I").identity());
  auto zi = ErrorClass::parse("ZI");
  auto iz = ErrorClass::parse("IZ");
  EXPECT_EQ(zi.composed(iz).str(), "ZZ");
  EXPECT_EQ(zi.composed(zi).str(), "II");
}

TEST(ErrorClass, EnumerationOrders) {
  const auto& s = ErrorClass::nontrivial_single();
  EXPECT_EQ(s[0].str(), "X");
  EXPECT_EQ(s[1].str(), "Y");
  EXPECT_EQ(s[2].str(), "Z");
  const auto& p = ErrorClass::nontrivial_pair();
  ASSERT_EQ(p.size(), 15u);
  EXPECT_EQ(p[0].str(), "IX");
  EXPECT_EQ(p[2].str(), "IZ");
  EXPECT_EQ(p[3].str(), "XI");
  EXPECT_EQ(p[14].str(), "ZZ");
  // Dense indices are distinct and identity-free.
  for (const auto& c : p) EXPECT_NE(c.index(), 0u);
}

}  // namespace
}  // namespace ftqc
