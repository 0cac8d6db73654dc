#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ftqc {

// Single-qubit Pauli label with phases dropped. Encoded so that bit 0 is the
// X component and bit 1 the Z component; composition is XOR of the encoding.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline Pauli compose(Pauli a, Pauli b) {
  return static_cast<Pauli>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}
char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

// n-qubit Pauli operator modulo phase, stored as packed X/Z bit masks.
// Composition is bitwise XOR; two operators commute iff the symplectic
// overlap |supp(x_a & z_b)| + |supp(z_a & x_b)| is even.
class PauliFrame {
 public:
  PauliFrame() = default;
  explicit PauliFrame(std::size_t n);

  // Parses "X1 Z5 Y12" (1-indexed qubits) or "I". Repeated qubits compose.
  static PauliFrame from_string(const std::string& text, std::size_t n);
  static PauliFrame single(std::size_t n, std::size_t qubit, Pauli p);

  std::size_t num_qubits() const { return n_; }

  bool x_bit(std::size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1u; }
  bool z_bit(std::size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1u; }
  void flip_x(std::size_t q) { x_[q >> 6] ^= uint64_t{1} << (q & 63); }
  void flip_z(std::size_t q) { z_[q >> 6] ^= uint64_t{1} << (q & 63); }
  Pauli at(std::size_t q) const {
    return static_cast<Pauli>(static_cast<uint8_t>(x_bit(q)) |
                              (static_cast<uint8_t>(z_bit(q)) << 1));
  }
  void set(std::size_t q, Pauli p);
  void mul(std::size_t q, Pauli p) {
    auto b = static_cast<uint8_t>(p);
    if (b & 1) flip_x(q);
    if (b & 2) flip_z(q);
  }

  PauliFrame& operator*=(const PauliFrame& other);
  friend PauliFrame operator*(PauliFrame a, const PauliFrame& b) {
    a *= b;
    return a;
  }

  bool commutes_with(const PauliFrame& other) const;

  // Restriction to a qubit subset, in the given order.
  PauliFrame restricted_to(std::span<const std::size_t> qubits) const;

  std::size_t weight() const;
  bool identity() const;
  void clear();

  std::string str() const;

  std::span<const uint64_t> x_words() const { return x_; }
  std::span<const uint64_t> z_words() const { return z_; }
  std::span<uint64_t> x_words() { return x_; }
  std::span<uint64_t> z_words() { return z_; }

  bool operator==(const PauliFrame&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> x_, z_;
};

// Parity of |a & b| over packed bit masks of equal word count.
bool parity_and(std::span<const uint64_t> a, std::span<const uint64_t> b);

// Pauli error class carried by one or two logical qubits (e.g. the residual
// logical action of an extended rectangle). Arity 2 orders the first block
// before the second, so "ZI" is Z on block one.
struct ErrorClass {
  uint8_t arity = 1;
  std::array<Pauli, 2> op = {Pauli::I, Pauli::I};

  static ErrorClass single(Pauli p) { return {1, {p, Pauli::I}}; }
  static ErrorClass pair(Pauli a, Pauli b) { return {2, {a, b}}; }

  bool identity() const { return op[0] == Pauli::I && op[1] == Pauli::I; }
  ErrorClass composed(const ErrorClass& other) const {
    return {arity, {compose(op[0], other.op[0]), compose(op[1], other.op[1])}};
  }
  std::string str() const;
  static ErrorClass parse(const std::string& label);

  // Deterministic enumeration orders used for reports and CSV output.
  static const std::array<ErrorClass, 3>& nontrivial_single();
  static const std::array<ErrorClass, 15>& nontrivial_pair();

  bool operator==(const ErrorClass&) const = default;

  // Dense index: arity 1 -> [0,4), arity 2 -> [0,16); identity is 0.
  std::size_t index() const {
    std::size_t first = static_cast<std::size_t>(op[0]);
    if (arity == 1) return first;
    return (first << 2) | static_cast<std::size_t>(op[1]);
  }
};

}  // namespace ftqc
