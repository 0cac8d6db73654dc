#include "ftqc/codes.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <fstream>
#include <limits>
#include <sstream>

namespace ftqc {
namespace {

// Exhaustive minimum weights over all 2^n single-type patterns:
//   {min nontrivial-class weight (distance), min nonzero trivial weight}.
struct MinWeights {
  std::size_t logical = std::numeric_limits<std::size_t>::max();
  std::size_t stabilizer = std::numeric_limits<std::size_t>::max();
};

MinWeights scan_z(const CssCode& code) {
  MinWeights mw;
  for (uint32_t v = 1; v < (uint32_t{1} << code.n()); ++v) {
    if (code.z_syndrome(v) != 0) continue;
    std::size_t w = std::popcount(v);
    if (parity32(v & code.logical_x()))
      mw.logical = std::min(mw.logical, w);
    else
      mw.stabilizer = std::min(mw.stabilizer, w);
  }
  return mw;
}

MinWeights scan_x(const CssCode& code) {
  MinWeights mw;
  for (uint32_t v = 1; v < (uint32_t{1} << code.n()); ++v) {
    if (code.x_syndrome(v) != 0) continue;
    std::size_t w = std::popcount(v);
    if (parity32(v & code.logical_z()))
      mw.logical = std::min(mw.logical, w);
    else
      mw.stabilizer = std::min(mw.stabilizer, w);
  }
  return mw;
}

void check_structure(const CssCode& code) {
  // CSS commutation: every X-type generator overlaps every Z-type generator
  // (and the Z logical) on an even set, and dually.
  for (uint32_t xg : code.x_gens()) {
    for (uint32_t zg : code.z_gens()) EXPECT_FALSE(parity32(xg & zg));
    EXPECT_FALSE(parity32(xg & code.logical_z()));
  }
  for (uint32_t zg : code.z_gens())
    EXPECT_FALSE(parity32(zg & code.logical_x()));
  // Logicals anticommute with each other.
  EXPECT_TRUE(parity32(code.logical_x() & code.logical_z()));
}

TEST(Codes, SteaneStructure) {
  const auto& c = steane();
  EXPECT_EQ(c.n(), 7u);
  EXPECT_EQ(c.x_gens().size(), 3u);
  EXPECT_EQ(c.z_gens().size(), 3u);
  check_structure(c);
  auto z = scan_z(c), x = scan_x(c);
  EXPECT_EQ(z.logical, 3u);
  EXPECT_EQ(z.stabilizer, 4u);
  EXPECT_EQ(x.logical, 3u);
  EXPECT_EQ(x.stabilizer, 4u);
}

TEST(Codes, ReedMullerStructure) {
  const auto& c = reed_muller15();
  EXPECT_EQ(c.n(), 15u);
  EXPECT_EQ(c.x_gens().size(), 4u);
  EXPECT_EQ(c.z_gens().size(), 10u);
  check_structure(c);
  auto z = scan_z(c), x = scan_x(c);
  EXPECT_EQ(z.logical, 3u);   // dZ
  EXPECT_EQ(z.stabilizer, 4u);
  EXPECT_EQ(x.logical, 7u);   // dX
  EXPECT_EQ(x.stabilizer, 8u);
}

TEST(Codes, ReedMullerZSyndromeIsPerfect) {
  const auto& c = reed_muller15();
  // The Z-error syndrome of Z_q equals the binary representation of q, and
  // single-qubit corrections fill the whole 4-bit table.
  for (uint32_t q = 1; q <= 15; ++q) {
    uint32_t e = uint32_t{1} << (q - 1);
    EXPECT_EQ(c.z_syndrome(e), q);
    EXPECT_EQ(c.z_correction(q), e);
  }
  EXPECT_EQ(c.z_correction(0), 0u);
}

TEST(Codes, SingleQubitErrorsDecodeClean) {
  for (const CssCode* c : {&steane(), &reed_muller15()}) {
    for (std::size_t q = 0; q < c->n(); ++q) {
      uint32_t e = uint32_t{1} << q;
      EXPECT_FALSE(c->z_class(e));
      EXPECT_FALSE(c->x_class(e));
      EXPECT_EQ(c->x_correction(c->x_syndrome(e)), e);
    }
  }
}

TEST(Codes, ReedMullerWeightTwoZErrorsAreAllLogical) {
  // Every irreducible two-qubit Z error mis-corrects across dZ = 3 into the
  // logical class; this is what makes second-order Z processes dominant.
  const auto& c = reed_muller15();
  for (uint32_t a = 0; a < 15; ++a)
    for (uint32_t b = a + 1; b < 15; ++b)
      EXPECT_TRUE(c.z_class((uint32_t{1} << a) | (uint32_t{1} << b)));
}

TEST(Codes, ReedMullerWeightTwoXErrorsDecodeClean) {
  const auto& c = reed_muller15();
  for (uint32_t a = 0; a < 15; ++a)
    for (uint32_t b = a + 1; b < 15; ++b)
      EXPECT_FALSE(c.x_class((uint32_t{1} << a) | (uint32_t{1} << b)));
}

TEST(Codes, DecodeCombinesComponents) {
  const auto& c = reed_muller15();
  // Logical-Z pattern on qubits {1,2,3} plus logical-X pattern on {1..7}.
  uint32_t zb = 0b111, xb = 0b1111111;
  EXPECT_EQ(c.decode(0, zb).str(), "Z");
  EXPECT_EQ(c.decode(xb, 0).str(), "X");
  EXPECT_EQ(c.decode(xb, zb).str(), "Y");
  EXPECT_EQ(c.decode(0, 0).str(), "I");
}

TEST(Codes, StabilizerInvarianceOfDecode) {
  for (const CssCode* c : {&steane(), &reed_muller15()}) {
    uint32_t e = 0b101;  // arbitrary Z pattern
    bool base = c->z_class(e);
    for (uint32_t g : c->z_gens()) EXPECT_EQ(c->z_class(e ^ g), base);
    EXPECT_NE(c->z_class(e ^ c->logical_z()), base);
    uint32_t f = 0b1100;  // arbitrary X pattern
    bool basex = c->x_class(f);
    for (uint32_t g : c->x_gens()) EXPECT_EQ(c->x_class(f ^ g), basex);
    EXPECT_NE(c->x_class(f ^ c->logical_x()), basex);
  }
}

TEST(Codes, GoldenStabilizerFiles) {
  auto read = [](const std::string& path) {
    std::ifstream in(path);
    EXPECT_TRUE(in.good()) << path;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  EXPECT_EQ(steane().to_text(), read(std::string(FTQC_DATA_DIR) + "/steane.stab"));
  EXPECT_EQ(reed_muller15().to_text(),
            read(std::string(FTQC_DATA_DIR) + "/rm15.stab"));
}

TEST(Concatenated, LayoutAndLogicals) {
  const auto& cc = concatenated_code();
  EXPECT_EQ(cc.n(), 105u);
  EXPECT_EQ(cc.qubit(6, 14), 104u);
  auto lx = cc.global_logical_x();
  auto lz = cc.global_logical_z();
  EXPECT_EQ(lx.weight(), 21u);  // 3 outer blocks x weight-7 inner logical
  EXPECT_EQ(lz.weight(), 9u);   // 3 outer blocks x weight-3 inner logical
  EXPECT_FALSE(lx.commutes_with(lz));
  EXPECT_EQ(cc.decode(lx).str(), "X");
  EXPECT_EQ(cc.decode(lz).str(), "Z");
  EXPECT_EQ(cc.decode(lx * lz).str(), "Y");
}

TEST(Concatenated, SingleFaultsDecodeClean) {
  const auto& cc = concatenated_code();
  for (std::size_t q = 0; q < 105; ++q) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      auto f = PauliFrame::single(105, q, p);
      EXPECT_TRUE(cc.decode(f).identity()) << q << pauli_char(p);
    }
  }
}

TEST(Concatenated, InnerBlockLogicalIsAbsorbedByOuterCode) {
  const auto& cc = concatenated_code();
  // Two Z faults inside one inner block mis-correct to that block's logical
  // Z, which the outer code then corrects: the global class stays trivial.
  PauliFrame f(105);
  f.flip_z(cc.qubit(3, 0));
  f.flip_z(cc.qubit(3, 5));
  EXPECT_TRUE(cc.decode(f).identity());
}

TEST(Concatenated, TwoFailedBlocksGiveGlobalLogicalZ) {
  const auto& cc = concatenated_code();
  // Weight-2 Z in each of two inner blocks: both blocks report logical Z,
  // the outer distance-3 code mis-corrects, and the global class is Z.
  PauliFrame f(105);
  f.flip_z(cc.qubit(1, 0));
  f.flip_z(cc.qubit(1, 5));
  f.flip_z(cc.qubit(4, 2));
  f.flip_z(cc.qubit(4, 9));
  EXPECT_EQ(cc.decode(f).str(), "Z");
}

TEST(Concatenated, StabilizerInvariance) {
  const auto& cc = concatenated_code();
  PauliFrame e(105);
  e.flip_z(cc.qubit(2, 3));
  e.flip_x(cc.qubit(5, 8));
  auto base = cc.decode(e);
  // Inner stabilizers of a few blocks.
  for (std::size_t b : {0u, 2u, 6u}) {
    PauliFrame s(105);
    for (std::size_t q = 0; q < 15; ++q) {
      if ((cc.inner().x_gens()[1] >> q) & 1) s.flip_x(cc.qubit(b, q));
      if ((cc.inner().z_gens()[7] >> q) & 1) s.flip_z(cc.qubit(b, q));
    }
    EXPECT_EQ(cc.decode(e * s), base);
  }
  // Outer stabilizer promoted through the inner logicals: transversal inner
  // logical X on the support of an outer X-type generator.
  PauliFrame s(105);
  for (std::size_t b = 0; b < 7; ++b) {
    if (!((cc.outer().x_gens()[0] >> b) & 1)) continue;
    for (std::size_t q = 0; q < 15; ++q)
      if ((cc.inner().logical_x() >> q) & 1) s.flip_x(cc.qubit(b, q));
  }
  EXPECT_EQ(cc.decode(e * s), base);
  // Global logical flips the class.
  EXPECT_EQ(cc.decode(e * cc.global_logical_z()).str(),
            base.composed(ErrorClass::single(Pauli::Z)).str());
}

}  // namespace
}  // namespace ftqc
