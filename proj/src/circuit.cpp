#include "ftqc/circuit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ftqc {

const char* kind_name(LocKind k) {
  switch (k) {
    case LocKind::PrepZ: return "prep_z";
    case LocKind::PrepX: return "prep_x";
    case LocKind::MeasZ: return "meas_z";
    case LocKind::MeasX: return "meas_x";
    case LocKind::H: return "h";
    case LocKind::T: return "t";
    case LocKind::Tdg: return "tdg";
    case LocKind::Cnot: return "cnot";
    case LocKind::Rest: return "rest";
  }
  return "?";
}

LocKind kind_from_name(const std::string& name) {
  for (auto k : {LocKind::PrepZ, LocKind::PrepX, LocKind::MeasZ, LocKind::MeasX,
                 LocKind::H, LocKind::T, LocKind::Tdg, LocKind::Cnot,
                 LocKind::Rest}) {
    if (name == kind_name(k)) return k;
  }
  throw std::invalid_argument("unknown location kind: " + name);
}

void CircuitIR::add(LocKind kind, uint32_t q0, int32_t time) {
  locs_.push_back({kind, q0, 0, time});
}

void CircuitIR::add_cnot(uint32_t control, uint32_t target, int32_t time) {
  locs_.push_back({LocKind::Cnot, control, target, time});
}

void CircuitIR::append(const CircuitIR& other, uint32_t qubit_offset,
                       int32_t time_offset) {
  for (Location loc : other.locs_) {
    loc.q0 += qubit_offset;
    if (is_two_qubit(loc.kind)) loc.q1 += qubit_offset;
    loc.time += time_offset;
    locs_.push_back(loc);
  }
}

int32_t CircuitIR::max_time() const {
  int32_t t = -1;
  for (const auto& loc : locs_) t = std::max(t, loc.time);
  return t;
}

int32_t CircuitIR::next_free(uint32_t q, int32_t from) const {
  std::set<int32_t> busy;
  for (const auto& loc : locs_)
    if (loc.q0 == q || (is_two_qubit(loc.kind) && loc.q1 == q))
      busy.insert(loc.time);
  int32_t t = from;
  while (busy.count(t)) ++t;
  return t;
}

std::size_t CircuitIR::count(LocKind kind) const {
  std::size_t c = 0;
  for (const auto& loc : locs_) c += loc.kind == kind;
  return c;
}

namespace {

std::set<std::pair<uint32_t, int32_t>> occupancy(
    const std::vector<Location>& locs) {
  std::set<std::pair<uint32_t, int32_t>> busy;
  for (const auto& loc : locs) {
    busy.insert({loc.q0, loc.time});
    if (is_two_qubit(loc.kind)) busy.insert({loc.q1, loc.time});
  }
  return busy;
}

}  // namespace

void CircuitIR::fill_rests(const std::vector<uint32_t>& qubits, int32_t t0,
                           int32_t t1) {
  auto busy = occupancy(locs_);
  for (uint32_t q : qubits)
    for (int32_t t = t0; t <= t1; ++t)
      if (!busy.count({q, t})) locs_.push_back({LocKind::Rest, q, 0, t});
}

void CircuitIR::fill_rest_gaps() {
  std::map<uint32_t, std::pair<int32_t, int32_t>> window;
  for (const auto& loc : locs_) {
    for (uint32_t q : {loc.q0, is_two_qubit(loc.kind) ? loc.q1 : loc.q0}) {
      auto it = window.find(q);
      if (it == window.end())
        window[q] = {loc.time, loc.time};
      else {
        it->second.first = std::min(it->second.first, loc.time);
        it->second.second = std::max(it->second.second, loc.time);
      }
    }
  }
  auto busy = occupancy(locs_);
  for (const auto& [q, w] : window)
    for (int32_t t = w.first + 1; t < w.second; ++t)
      if (!busy.count({q, t})) locs_.push_back({LocKind::Rest, q, 0, t});
}

void CircuitIR::validate() const {
  std::set<int32_t> times;
  std::set<std::pair<uint32_t, int32_t>> busy;
  for (const auto& loc : locs_) {
    if (loc.q0 >= n_ || (is_two_qubit(loc.kind) && loc.q1 >= n_))
      throw std::logic_error("qubit index out of range");
    if (is_two_qubit(loc.kind) && loc.q0 == loc.q1)
      throw std::logic_error("cnot with equal qubits");
    if (loc.time < 0) throw std::logic_error("negative timestep");
    times.insert(loc.time);
    if (!busy.insert({loc.q0, loc.time}).second)
      throw std::logic_error("qubit used twice in one timestep");
    if (is_two_qubit(loc.kind) && !busy.insert({loc.q1, loc.time}).second)
      throw std::logic_error("qubit used twice in one timestep");
  }
  int32_t expect = 0;
  for (int32_t t : times)
    if (t != expect++) throw std::logic_error("timesteps not contiguous from 0");
}

void CircuitIR::compact_times() {
  std::set<int32_t> times;
  for (const auto& loc : locs_) times.insert(loc.time);
  std::map<int32_t, int32_t> remap;
  int32_t next = 0;
  for (int32_t t : times) remap[t] = next++;
  for (auto& loc : locs_) loc.time = remap[loc.time];
  sort_by_time();
}

void CircuitIR::sort_by_time() {
  std::stable_sort(locs_.begin(), locs_.end(),
                   [](const Location& a, const Location& b) {
                     return a.time < b.time;
                   });
}

std::string CircuitIR::to_text() const {
  std::ostringstream out;
  for (const auto& loc : locs_) {
    out << "t=" << loc.time << ' ' << kind_name(loc.kind) << ' '
        << (loc.q0 + 1);
    if (is_two_qubit(loc.kind)) out << ' ' << (loc.q1 + 1);
    out << '\n';
  }
  return out.str();
}

CircuitIR CircuitIR::from_text(const std::string& text) {
  CircuitIR c;
  std::istringstream in(text);
  std::string line;
  uint32_t max_q = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string t_tok, kind_tok;
    ls >> t_tok >> kind_tok;
    if (t_tok.rfind("t=", 0) != 0)
      throw std::invalid_argument("bad circuit line: " + line);
    Location loc{};
    loc.time = std::stoi(t_tok.substr(2));
    loc.kind = kind_from_name(kind_tok);
    uint32_t q;
    ls >> q;
    loc.q0 = q - 1;
    if (is_two_qubit(loc.kind)) {
      ls >> q;
      loc.q1 = q - 1;
    }
    max_q = std::max({max_q, loc.q0, loc.q1});
    c.locs_.push_back(loc);
  }
  c.n_ = max_q + 1;
  return c;
}

}  // namespace ftqc
