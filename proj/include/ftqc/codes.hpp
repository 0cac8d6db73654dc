#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ftqc/pauli.hpp"

namespace ftqc {

inline bool parity32(uint32_t v) { return __builtin_parity(v); }

// Extracts `len` (<=32) bits starting at bit `lo` from a packed word array.
uint32_t extract_bits(std::span<const uint64_t> words, std::size_t lo,
                      std::size_t len);
void xor_bits(std::span<uint64_t> words, std::size_t lo, std::size_t len,
              uint32_t value);

// Self-dual-flavoured CSS code on n <= 32 qubits. Generators and logicals are
// stored as support masks (bit q-1 <-> qubit q). X-type generators detect Z
// errors; Z-type generators detect X errors. Decode tables map a syndrome to
// the minimum-weight correction pattern (ties broken toward the numerically
// smallest mask).
class CssCode {
 public:
  CssCode(std::string name, std::size_t n, std::vector<uint32_t> x_gens,
          std::vector<uint32_t> z_gens, uint32_t logical_x, uint32_t logical_z);

  const std::string& name() const { return name_; }
  std::size_t n() const { return n_; }
  const std::vector<uint32_t>& x_gens() const { return x_gens_; }
  const std::vector<uint32_t>& z_gens() const { return z_gens_; }
  uint32_t logical_x() const { return logical_x_; }
  uint32_t logical_z() const { return logical_z_; }

  // Syndrome of a Z-error pattern as measured by the X-type generators
  // (bit i = overlap parity with x_gens()[i]), and its X-error dual.
  uint32_t z_syndrome(uint32_t z_pattern) const;
  uint32_t x_syndrome(uint32_t x_pattern) const;

  // Minimum-weight correction for a syndrome.
  uint32_t z_correction(uint32_t z_syndrome) const { return z_corr_[z_syndrome]; }
  uint32_t x_correction(uint32_t x_syndrome) const { return x_corr_[x_syndrome]; }

  // Residual logical class after ideal (syndrome + min-weight table) decoding.
  bool z_class(uint32_t z_pattern) const;
  bool x_class(uint32_t x_pattern) const;
  ErrorClass decode(uint32_t x_pattern, uint32_t z_pattern) const;
  ErrorClass decode(const PauliFrame& f) const;

  // One generator or logical per line, e.g. "G X1 X3 X5 X7" / "L Z1 Z2 Z3".
  std::string to_text() const;

 private:
  std::string name_;
  std::size_t n_;
  std::vector<uint32_t> x_gens_, z_gens_;
  uint32_t logical_x_, logical_z_;
  std::vector<uint32_t> z_corr_, x_corr_;
};

// [[7,1,3]] code: qubit q <-> nonzero 3-bit vector, generators are the
// bit-plane supports {1,3,5,7}, {2,3,6,7}, {4,5,6,7} in both X and Z type.
const CssCode& steane();

// [[15,1,3]] code: qubit q <-> nonzero 4-bit vector. X-type generators are
// the four bit-plane supports; Z-type generators add their six pairwise
// intersections. dZ = 3, dX = 7.
const CssCode& reed_muller15();

// 105-qubit concatenation: an outer [[7,1,3]] block whose seven qubits are
// each an inner [[15,1,3]] block. Global qubit index = 15*block + inner.
class ConcatenatedCode {
 public:
  ConcatenatedCode();

  const CssCode& inner() const { return inner_; }
  const CssCode& outer() const { return outer_; }
  std::size_t n() const { return n_; }
  std::size_t qubit(std::size_t block, std::size_t inner_q) const {
    return 15 * block + inner_q;
  }

  uint32_t block_x_bits(const PauliFrame& f, std::size_t block) const;
  uint32_t block_z_bits(const PauliFrame& f, std::size_t block) const;

  // Hierarchical ideal decoding: decode each inner block, promote the
  // residual logical bits to an outer-level pattern, decode the outer code.
  bool z_class(const PauliFrame& f) const;
  bool x_class(const PauliFrame& f) const;
  ErrorClass decode(const PauliFrame& f) const;

  // Global logical operators (transversal over the nested logicals).
  PauliFrame global_logical_x() const;
  PauliFrame global_logical_z() const;

 private:
  CssCode inner_;
  CssCode outer_;
  std::size_t n_;
};

const ConcatenatedCode& concatenated_code();

}  // namespace ftqc
