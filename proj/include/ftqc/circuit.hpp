#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ftqc {

// Physical location kinds. Every location, including rests, is a noise site.
enum class LocKind : uint8_t {
  PrepZ,
  PrepX,
  MeasZ,
  MeasX,
  H,
  T,
  Tdg,
  Cnot,
  Rest,
};

const char* kind_name(LocKind k);
LocKind kind_from_name(const std::string& name);
inline bool is_two_qubit(LocKind k) { return k == LocKind::Cnot; }
inline bool is_prep(LocKind k) {
  return k == LocKind::PrepZ || k == LocKind::PrepX;
}
inline bool is_meas(LocKind k) {
  return k == LocKind::MeasZ || k == LocKind::MeasX;
}

struct Location {
  LocKind kind;
  uint32_t q0 = 0;
  uint32_t q1 = 0;  // target qubit for cnot (q0 is control), unused otherwise
  int32_t time = 0;
};

// Time-stepped sequence of locations over a fixed register. Locations are
// kept sorted by (time, insertion order); the location count L_G includes
// rests.
class CircuitIR {
 public:
  CircuitIR() = default;
  explicit CircuitIR(std::size_t n) : n_(n) {}

  std::size_t n_qubits() const { return n_; }
  void set_n_qubits(std::size_t n) { n_ = n; }
  const std::vector<Location>& locations() const { return locs_; }
  std::size_t size() const { return locs_.size(); }

  void add(LocKind kind, uint32_t q0, int32_t time);
  void add_cnot(uint32_t control, uint32_t target, int32_t time);

  // Appends `other` with its qubits shifted by qubit_offset and its times by
  // time_offset.
  void append(const CircuitIR& other, uint32_t qubit_offset,
              int32_t time_offset);

  int32_t max_time() const;
  // Earliest free timestep at or after `from` on the given qubit.
  int32_t next_free(uint32_t q, int32_t from) const;

  std::size_t count(LocKind kind) const;

  // Inserts Rest locations on each listed qubit at every idle timestep in
  // [t0, t1] (global-clock convention for data blocks).
  void fill_rests(const std::vector<uint32_t>& qubits, int32_t t0, int32_t t1);
  // Inserts Rest locations on every used qubit at idle steps strictly between
  // its first and last use (gap convention for gadget-internal qubits).
  void fill_rest_gaps();

  // Invariants: qubit indices in range; timesteps contiguous from 0; no qubit
  // touched twice in one timestep. Throws std::logic_error on violation.
  void validate() const;
  // Renumbers timesteps to be contiguous from 0, preserving order.
  void compact_times();

  // Line-per-location text: `t=<step> <kind> <qubits...>` (1-indexed qubits).
  std::string to_text() const;
  static CircuitIR from_text(const std::string& text);

  void sort_by_time();

 private:
  std::size_t n_ = 0;
  std::vector<Location> locs_;
};

}  // namespace ftqc
