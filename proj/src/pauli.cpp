#include "ftqc/pauli.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ftqc {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Z: return 'Z';
    case Pauli::Y: return 'Y';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Z': return Pauli::Z;
    case 'Y': return Pauli::Y;
    default: throw std::invalid_argument(std::string("bad Pauli letter: ") + c);
  }
}

PauliFrame::PauliFrame(std::size_t n)
    : n_(n), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0) {}

void PauliFrame::set(std::size_t q, Pauli p) {
  auto b = static_cast<uint8_t>(p);
  uint64_t bit = uint64_t{1} << (q & 63);
  x_[q >> 6] = (x_[q >> 6] & ~bit) | ((b & 1) ? bit : 0);
  z_[q >> 6] = (z_[q >> 6] & ~bit) | ((b & 2) ? bit : 0);
}

PauliFrame PauliFrame::from_string(const std::string& text, std::size_t n) {
  PauliFrame f(n);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "I") continue;
    if (tok.size() < 2) throw std::invalid_argument("bad Pauli term: " + tok);
    Pauli p = pauli_from_char(tok[0]);
    std::size_t q = std::stoul(tok.substr(1));
    if (q < 1 || q > n) throw std::out_of_range("qubit out of range: " + tok);
    f.mul(q - 1, p);
  }
  return f;
}

PauliFrame PauliFrame::single(std::size_t n, std::size_t qubit, Pauli p) {
  PauliFrame f(n);
  f.set(qubit, p);
  return f;
}

PauliFrame& PauliFrame::operator*=(const PauliFrame& other) {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    x_[w] ^= other.x_[w];
    z_[w] ^= other.z_[w];
  }
  return *this;
}

bool parity_and(std::span<const uint64_t> a, std::span<const uint64_t> b) {
  uint64_t acc = 0;
  for (std::size_t w = 0; w < a.size(); ++w) acc ^= a[w] & b[w];
  return std::popcount(acc) & 1;
}

bool PauliFrame::commutes_with(const PauliFrame& other) const {
  return !(parity_and(x_, other.z_) ^ parity_and(z_, other.x_));
}

PauliFrame PauliFrame::restricted_to(std::span<const std::size_t> qubits) const {
  PauliFrame out(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) out.set(i, at(qubits[i]));
  return out;
}

std::size_t PauliFrame::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i)
    w += std::popcount(x_[i] | z_[i]);
  return w;
}

bool PauliFrame::identity() const {
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (x_[i] | z_[i]) return false;
  return true;
}

void PauliFrame::clear() {
  std::fill(x_.begin(), x_.end(), 0);
  std::fill(z_.begin(), z_.end(), 0);
}

std::string PauliFrame::str() const {
  std::string out;
  for (std::size_t q = 0; q < n_; ++q) {
    Pauli p = at(q);
    if (p == Pauli::I) continue;
    if (!out.empty()) out += ' ';
    out += pauli_char(p);
    out += std::to_string(q + 1);
  }
  return out.empty() ? "I" : out;
}

std::string ErrorClass::str() const {
  std::string out(1, pauli_char(op[0]));
  if (arity == 2) out += pauli_char(op[1]);
  return out;
}

ErrorClass ErrorClass::parse(const std::string& label) {
  if (label.size() == 1) return single(pauli_from_char(label[0]));
  if (label.size() == 2)
    return pair(pauli_from_char(label[0]), pauli_from_char(label[1]));
  throw std::invalid_argument("bad error-class label: " + label);
}

const std::array<ErrorClass, 3>& ErrorClass::nontrivial_single() {
  static const std::array<ErrorClass, 3> k = {
      single(Pauli::X), single(Pauli::Y), single(Pauli::Z)};
  return k;
}

const std::array<ErrorClass, 15>& ErrorClass::nontrivial_pair() {
  static const std::array<ErrorClass, 15> k = [] {
    std::array<ErrorClass, 15> out{};
    const Pauli order[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    std::size_t i = 0;
    for (Pauli a : order)
      for (Pauli b : order)
        if (!(a == Pauli::I && b == Pauli::I)) out[i++] = pair(a, b);
    return out;
  }();
  return k;
}

}  // namespace ftqc
