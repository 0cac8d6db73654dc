#include "ftqc/codes.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ftqc {

uint32_t extract_bits(std::span<const uint64_t> words, std::size_t lo,
                      std::size_t len) {
  std::size_t word = lo >> 6, off = lo & 63;
  uint64_t v = words[word] >> off;
  if (off + len > 64 && word + 1 < words.size()) v |= words[word + 1] << (64 - off);
  return static_cast<uint32_t>(v & ((uint64_t{1} << len) - 1));
}

void xor_bits(std::span<uint64_t> words, std::size_t lo, std::size_t len,
              uint32_t value) {
  uint64_t v = uint64_t{value} & ((uint64_t{1} << len) - 1);
  std::size_t word = lo >> 6, off = lo & 63;
  words[word] ^= v << off;
  if (off + len > 64 && word + 1 < words.size()) words[word + 1] ^= v >> (64 - off);
}

namespace {

// Fills table[syndrome] with the first pattern reaching that syndrome when
// patterns are enumerated by increasing weight, then increasing mask value.
std::vector<uint32_t> build_table(std::size_t n, std::size_t num_gens,
                                  const std::vector<uint32_t>& gens) {
  std::vector<uint32_t> table(std::size_t{1} << num_gens, 0);
  std::vector<bool> filled(table.size(), false);
  std::size_t remaining = table.size();
  auto syndrome_of = [&](uint32_t pattern) {
    uint32_t s = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      s |= static_cast<uint32_t>(parity32(pattern & gens[i])) << i;
    return s;
  };
  for (std::size_t w = 0; w <= n && remaining; ++w) {
    if (w == 0) {
      filled[0] = true;
      --remaining;
      continue;
    }
    // Gosper's hack enumerates weight-w masks in increasing numeric order.
    uint32_t mask = (uint32_t{1} << w) - 1;
    uint32_t limit = uint32_t{1} << n;
    while (mask < limit) {
      uint32_t s = syndrome_of(mask);
      if (!filled[s]) {
        filled[s] = true;
        table[s] = mask;
        if (--remaining == 0) break;
      }
      uint32_t c = mask & -mask;
      uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  if (remaining) throw std::logic_error("syndrome table not surjective");
  return table;
}

}  // namespace

CssCode::CssCode(std::string name, std::size_t n, std::vector<uint32_t> x_gens,
                 std::vector<uint32_t> z_gens, uint32_t logical_x,
                 uint32_t logical_z)
    : name_(std::move(name)),
      n_(n),
      x_gens_(std::move(x_gens)),
      z_gens_(std::move(z_gens)),
      logical_x_(logical_x),
      logical_z_(logical_z) {
  z_corr_ = build_table(n_, x_gens_.size(), x_gens_);
  x_corr_ = build_table(n_, z_gens_.size(), z_gens_);
}

uint32_t CssCode::z_syndrome(uint32_t z_pattern) const {
  uint32_t s = 0;
  for (std::size_t i = 0; i < x_gens_.size(); ++i)
    s |= static_cast<uint32_t>(parity32(z_pattern & x_gens_[i])) << i;
  return s;
}

uint32_t CssCode::x_syndrome(uint32_t x_pattern) const {
  uint32_t s = 0;
  for (std::size_t i = 0; i < z_gens_.size(); ++i)
    s |= static_cast<uint32_t>(parity32(x_pattern & z_gens_[i])) << i;
  return s;
}

bool CssCode::z_class(uint32_t z_pattern) const {
  uint32_t residual = z_pattern ^ z_corr_[z_syndrome(z_pattern)];
  return parity32(residual & logical_x_);
}

bool CssCode::x_class(uint32_t x_pattern) const {
  uint32_t residual = x_pattern ^ x_corr_[x_syndrome(x_pattern)];
  return parity32(residual & logical_z_);
}

ErrorClass CssCode::decode(uint32_t x_pattern, uint32_t z_pattern) const {
  auto p = static_cast<Pauli>(static_cast<uint8_t>(x_class(x_pattern)) |
                              (static_cast<uint8_t>(z_class(z_pattern)) << 1));
  return ErrorClass::single(p);
}

ErrorClass CssCode::decode(const PauliFrame& f) const {
  uint32_t x = extract_bits(f.x_words(), 0, n_);
  uint32_t z = extract_bits(f.z_words(), 0, n_);
  return decode(x, z);
}

namespace {

std::string mask_terms(char letter, uint32_t mask) {
  std::string out;
  for (std::size_t q = 0; mask; ++q, mask >>= 1) {
    if (!(mask & 1)) continue;
    if (!out.empty()) out += ' ';
    out += letter;
    out += std::to_string(q + 1);
  }
  return out;
}

}  // namespace

std::string CssCode::to_text() const {
  std::ostringstream out;
  out << "# " << name_ << " [[" << n_ << ",1]] CSS stabilizer code\n";
  for (uint32_t g : x_gens_) out << "G " << mask_terms('X', g) << "\n";
  for (uint32_t g : z_gens_) out << "G " << mask_terms('Z', g) << "\n";
  out << "L " << mask_terms('X', logical_x_) << "\n";
  out << "L " << mask_terms('Z', logical_z_) << "\n";
  return out.str();
}

namespace {

// Support of the bit-plane {q in 1..n : bit b of q is set}.
uint32_t bit_plane(std::size_t n, unsigned b) {
  uint32_t m = 0;
  for (uint32_t q = 1; q <= n; ++q)
    if ((q >> b) & 1) m |= uint32_t{1} << (q - 1);
  return m;
}

uint32_t mask_of(std::initializer_list<unsigned> qubits) {
  uint32_t m = 0;
  for (unsigned q : qubits) m |= uint32_t{1} << (q - 1);
  return m;
}

}  // namespace

const CssCode& steane() {
  static const CssCode code(
      "steane", 7,
      {bit_plane(7, 0), bit_plane(7, 1), bit_plane(7, 2)},
      {bit_plane(7, 0), bit_plane(7, 1), bit_plane(7, 2)},
      mask_of({1, 2, 3}), mask_of({1, 2, 3}));
  return code;
}

const CssCode& reed_muller15() {
  static const CssCode code(
      "reed_muller15", 15,
      {bit_plane(15, 0), bit_plane(15, 1), bit_plane(15, 2), bit_plane(15, 3)},
      {bit_plane(15, 0), bit_plane(15, 1), bit_plane(15, 2), bit_plane(15, 3),
       bit_plane(15, 0) & bit_plane(15, 1), bit_plane(15, 0) & bit_plane(15, 2),
       bit_plane(15, 0) & bit_plane(15, 3), bit_plane(15, 1) & bit_plane(15, 2),
       bit_plane(15, 1) & bit_plane(15, 3), bit_plane(15, 2) & bit_plane(15, 3)},
      mask_of({1, 2, 3, 4, 5, 6, 7}), mask_of({1, 2, 3}));
  return code;
}

ConcatenatedCode::ConcatenatedCode()
    : inner_(reed_muller15()), outer_(steane()), n_(105) {}

uint32_t ConcatenatedCode::block_x_bits(const PauliFrame& f,
                                        std::size_t block) const {
  return extract_bits(f.x_words(), 15 * block, 15);
}

uint32_t ConcatenatedCode::block_z_bits(const PauliFrame& f,
                                        std::size_t block) const {
  return extract_bits(f.z_words(), 15 * block, 15);
}

bool ConcatenatedCode::z_class(const PauliFrame& f) const {
  uint32_t beta = 0;
  for (std::size_t b = 0; b < 7; ++b)
    beta |= static_cast<uint32_t>(inner_.z_class(block_z_bits(f, b))) << b;
  return outer_.z_class(beta);
}

bool ConcatenatedCode::x_class(const PauliFrame& f) const {
  uint32_t beta = 0;
  for (std::size_t b = 0; b < 7; ++b)
    beta |= static_cast<uint32_t>(inner_.x_class(block_x_bits(f, b))) << b;
  return outer_.x_class(beta);
}

ErrorClass ConcatenatedCode::decode(const PauliFrame& f) const {
  auto p = static_cast<Pauli>(static_cast<uint8_t>(x_class(f)) |
                              (static_cast<uint8_t>(z_class(f)) << 1));
  return ErrorClass::single(p);
}

PauliFrame ConcatenatedCode::global_logical_x() const {
  PauliFrame f(n_);
  for (std::size_t b = 0; b < 7; ++b) {
    if (!((outer_.logical_x() >> b) & 1)) continue;
    for (std::size_t q = 0; q < 15; ++q)
      if ((inner_.logical_x() >> q) & 1) f.flip_x(qubit(b, q));
  }
  return f;
}

PauliFrame ConcatenatedCode::global_logical_z() const {
  PauliFrame f(n_);
  for (std::size_t b = 0; b < 7; ++b) {
    if (!((outer_.logical_z() >> b) & 1)) continue;
    for (std::size_t q = 0; q < 15; ++q)
      if ((inner_.logical_z() >> q) & 1) f.flip_z(qubit(b, q));
  }
  return f;
}

const ConcatenatedCode& concatenated_code() {
  static const ConcatenatedCode code;
  return code;
}

}  // namespace ftqc
