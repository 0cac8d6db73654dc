#include "ftqc/builders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <deque>
#include <numbers>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace ftqc {

void conjugate_location(const Location& loc, PauliFrame& frame) {
  switch (loc.kind) {
    case LocKind::Cnot:
      if (frame.x_bit(loc.q0)) frame.flip_x(loc.q1);
      if (frame.z_bit(loc.q1)) frame.flip_z(loc.q0);
      return;
    case LocKind::H: {
      bool x = frame.x_bit(loc.q0), z = frame.z_bit(loc.q0);
      if (x != z) {
        frame.flip_x(loc.q0);
        frame.flip_z(loc.q0);
      }
      return;
    }
    case LocKind::T:
    case LocKind::Tdg:
      throw std::logic_error("T conjugation needs a twirl coin");
    default:
      return;  // preps, measurements, rests leave the frame alone here
  }
}

F2Span::F2Span(const std::vector<uint32_t>& rows) {
  for (uint32_t row : rows) {
    uint32_t v = row;
    for (uint32_t b : basis_) v = std::min(v, v ^ b);
    if (v) basis_.push_back(v);
  }
  // Fully reduce so that contains() is a simple sweep.
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      if (i != j) basis_[i] = std::min(basis_[i], basis_[i] ^ basis_[j]);
    }
  }
  std::sort(basis_.begin(), basis_.end(), std::greater<>());
}

bool F2Span::contains(uint32_t v) const {
  for (uint32_t b : basis_) v = std::min(v, v ^ b);
  return v == 0;
}

namespace {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

template <typename T>
void seeded_shuffle(std::vector<T>& v, uint64_t& state) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = splitmix64(state) % i;
    std::swap(v[i - 1], v[j]);
  }
}

// Row-reduced generator rows as (pivot bit, mask) sorted by pivot. The pivot
// of each row is its lowest set bit and is eliminated from all other rows, so
// pivots act only as controls during emission.
std::vector<std::pair<uint32_t, uint32_t>> rref_rows(
    std::vector<uint32_t> rows) {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    uint32_t row = rows[i];
    for (const auto& [p, r] : out)
      if ((row >> p) & 1) row ^= r;
    if (!row) throw std::logic_error("dependent generator row");
    uint32_t pivot = static_cast<uint32_t>(std::countr_zero(row));
    for (auto& [p, r] : out)
      if ((r >> pivot) & 1) r ^= row;
    out.emplace_back(pivot, row);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct EmissionPlan {
  // Row order and, per row, the target order of its CNOT chain.
  std::vector<std::size_t> row_order;
  std::vector<std::vector<uint32_t>> targets;  // indexed like rows
};

CircuitIR emit_encoder(const CssCode& code,
                       const std::vector<std::pair<uint32_t, uint32_t>>& rows,
                       const EmissionPlan& plan) {
  CircuitIR circ(code.n());
  std::vector<bool> is_pivot(code.n(), false);
  for (const auto& [pivot, row] : rows) is_pivot[pivot] = true;
  std::vector<int32_t> avail(code.n(), 1);
  for (uint32_t q = 0; q < code.n(); ++q)
    circ.add(is_pivot[q] ? LocKind::PrepX : LocKind::PrepZ, q, 0);
  for (std::size_t r : plan.row_order) {
    uint32_t pivot = rows[r].first;
    for (uint32_t t : plan.targets[r]) {
      int32_t when = std::max(avail[pivot], avail[t]);
      circ.add_cnot(pivot, t, when);
      avail[pivot] = avail[t] = when + 1;
    }
  }
  circ.sort_by_time();
  circ.compact_times();
  circ.validate();
  return circ;
}

std::vector<uint32_t> target_generators(const CssCode& code, char basis) {
  std::vector<uint32_t> gens = code.x_gens();
  if (basis == 'X') gens.push_back(code.logical_x());
  return gens;
}

// Model fault outcomes for a location kind, as (pauli on q0, pauli on q1).
std::vector<std::pair<Pauli, Pauli>> fault_outcomes(LocKind kind) {
  switch (kind) {
    case LocKind::PrepZ:
      return {{Pauli::X, Pauli::I}};
    case LocKind::PrepX:
      return {{Pauli::Z, Pauli::I}};
    case LocKind::MeasZ:
    case LocKind::MeasX:
      return {};  // classical flip; no residual state error
    case LocKind::Cnot: {
      std::vector<std::pair<Pauli, Pauli>> out;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          if (a || b)
            out.emplace_back(static_cast<Pauli>(a), static_cast<Pauli>(b));
      return out;
    }
    default:
      return {{Pauli::X, Pauli::I}, {Pauli::Y, Pauli::I}, {Pauli::Z, Pauli::I}};
  }
}

}  // namespace

std::vector<std::string> check_encoder(const CssCode& code, char basis,
                                       const CircuitIR& circuit) {
  std::vector<std::string> failures;
  std::vector<int> prep(code.n(), -1);
  for (const auto& loc : circuit.locations()) {
    if (loc.kind == LocKind::PrepZ) prep[loc.q0] = 0;
    if (loc.kind == LocKind::PrepX) prep[loc.q0] = 1;
  }
  for (uint32_t q = 0; q < code.n(); ++q)
    if (prep[q] < 0) failures.push_back("unprepared qubit " + std::to_string(q + 1));
  if (!failures.empty()) return failures;

  struct Op {
    std::string name;
    uint32_t mask;
    bool x_type;
  };
  std::vector<Op> ops;
  for (std::size_t i = 0; i < code.x_gens().size(); ++i)
    ops.push_back({"X-gen " + std::to_string(i + 1), code.x_gens()[i], true});
  for (std::size_t i = 0; i < code.z_gens().size(); ++i)
    ops.push_back({"Z-gen " + std::to_string(i + 1), code.z_gens()[i], false});
  if (basis == 'Z')
    ops.push_back({"logical Z", code.logical_z(), false});
  else
    ops.push_back({"logical X", code.logical_x(), true});

  const auto& locs = circuit.locations();
  for (const auto& op : ops) {
    PauliFrame f(code.n());
    for (uint32_t q = 0; q < code.n(); ++q) {
      if (!((op.mask >> q) & 1)) continue;
      if (op.x_type)
        f.flip_x(q);
      else
        f.flip_z(q);
    }
    // Backward conjugation; CNOT and H are their own inverses here.
    for (auto it = locs.rbegin(); it != locs.rend(); ++it)
      conjugate_location(*it, f);
    bool ok = true;
    for (uint32_t q = 0; q < code.n(); ++q) {
      // |+> seeds are stabilized by X only, |0> seeds by Z only.
      if (prep[q] == 1 && f.z_bit(q)) ok = false;
      if (prep[q] == 0 && f.x_bit(q)) ok = false;
    }
    if (!ok) failures.push_back(op.name);
  }
  return failures;
}

std::vector<std::string> scan_encoder_x_property(const CssCode& code,
                                                 char basis,
                                                 const CircuitIR& circuit) {
  std::vector<std::string> failures;
  const auto& locs = circuit.locations();
  for (std::size_t i = 0; i < locs.size(); ++i) {
    for (const auto& [p0, p1] : fault_outcomes(locs[i].kind)) {
      PauliFrame f(code.n());
      f.mul(locs[i].q0, p0);
      if (is_two_qubit(locs[i].kind)) f.mul(locs[i].q1, p1);
      for (std::size_t j = i + 1; j < locs.size(); ++j)
        conjugate_location(locs[j], f);
      uint32_t x_mask = extract_bits(f.x_words(), 0, code.n());
      bool cls = code.x_class(x_mask);
      // A logical-X residue on |+> is a stabilizer of the state and is
      // stripped at acceptance, so only basis 'Z' forbids it.
      if (cls && basis == 'Z') {
        failures.push_back("location " + std::to_string(i) + " (" +
                           kind_name(locs[i].kind) + ") outcome " +
                           std::string(1, pauli_char(p0)) +
                           std::string(1, pauli_char(p1)));
      }
    }
  }
  return failures;
}

CircuitIR build_encoder(const CssCode& code, char basis,
                        bool require_x_property) {
  if (basis != 'Z' && basis != 'X')
    throw std::invalid_argument("encoder basis must be 'Z' or 'X'");
  auto rows = rref_rows(target_generators(code, basis));

  EmissionPlan plan;
  plan.row_order.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) plan.row_order[i] = i;
  plan.targets.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    uint32_t mask = rows[i].second & ~(uint32_t{1} << rows[i].first);
    for (uint32_t q = 0; q < code.n(); ++q)
      if ((mask >> q) & 1) plan.targets[i].push_back(q);
  }

  for (uint64_t attempt = 0; attempt < 5000; ++attempt) {
    EmissionPlan candidate = plan;
    if (attempt > 0) {
      uint64_t state = 0x91c3a55400f7ull ^ (attempt * 0x2545f4914f6cdd1dull);
      seeded_shuffle(candidate.row_order, state);
      for (auto& targets : candidate.targets) seeded_shuffle(targets, state);
    }
    CircuitIR circ = emit_encoder(code, rows, candidate);
    if (!check_encoder(code, basis, circ).empty()) continue;
    if (require_x_property &&
        !scan_encoder_x_property(code, basis, circ).empty())
      continue;
    return circ;
  }
  throw std::runtime_error("no fault-tolerant emission order found for " +
                           code.name() + " basis " + std::string(1, basis));
}

namespace {

// --- logical-H block search -------------------------------------------------
//
// The block is U = B^{-1} . H_j . B for a CNOT circuit B with matrix M acting
// on computational basis states as |v> -> |Mv>. Writing r for row j of M and
// s for column j of M^{-1}, U preserves the stabilizer group and exchanges
// the logical operators exactly when r lies in the logical-Z coset and s in
// the logical-X coset; every stabilizer generator then passes through
// untouched because both spans are orthogonal to the opposite logical.
// Prepending a CNOT(c->t) to B updates (r, s) -> (r ^ r_t e_c, s ^ s_c e_t),
// so the pair is searched directly with A*; each move flips at most one bit
// of r and of s, which makes coset Hamming distance an admissible heuristic.

constexpr int kNumQubits15 = 15;

std::vector<uint8_t> coset_distances(const std::vector<uint32_t>& span_rows,
                                     uint32_t shift) {
  // Enumerate the coset via subset sums of the reduced basis, then BFS over
  // the single-bit-flip graph to get Hamming distance to the coset.
  std::vector<uint32_t> reduced;
  for (uint32_t row : span_rows) {
    uint32_t v = row;
    for (uint32_t b : reduced) v = std::min(v, v ^ b);
    if (v) reduced.push_back(v);
  }
  std::vector<uint8_t> dist(1u << kNumQubits15, 0xff);
  std::deque<uint32_t> frontier;
  for (uint32_t m = 0; m < (1u << reduced.size()); ++m) {
    uint32_t v = shift;
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if ((m >> i) & 1) v ^= reduced[i];
    if (dist[v]) {
      dist[v] = 0;
      frontier.push_back(v);
    }
  }
  while (!frontier.empty()) {
    uint32_t v = frontier.front();
    frontier.pop_front();
    for (int b = 0; b < kNumQubits15; ++b) {
      uint32_t w = v ^ (1u << b);
      if (dist[w] == 0xff) {
        dist[w] = static_cast<uint8_t>(dist[v] + 1);
        frontier.push_back(w);
      }
    }
  }
  return dist;
}

struct FoldMove {
  uint8_t c, t;
};

std::optional<std::vector<FoldMove>> astar_fold(int start_qubit,
                                                const std::vector<uint8_t>& hr,
                                                const std::vector<uint8_t>& hs,
                                                int bound, uint64_t seed) {
  std::vector<FoldMove> moves;
  for (uint8_t c = 0; c < kNumQubits15; ++c)
    for (uint8_t t = 0; t < kNumQubits15; ++t)
      if (c != t) moves.push_back({c, t});
  uint64_t state = seed * 0x9e3779b97f4a7c15ull + 1;
  seeded_shuffle(moves, state);

  auto key_of = [](uint32_t r, uint32_t s) { return r | (s << kNumQubits15); };
  auto h_of = [&](uint32_t r, uint32_t s) {
    return std::max<int>(hr[r], hs[s]);
  };

  uint32_t r0 = 1u << start_qubit, s0 = 1u << start_qubit;
  if (h_of(r0, s0) > bound) return std::nullopt;

  struct Entry {
    int f, h;
    uint32_t key;
    uint64_t order;
  };
  auto cmp = [](const Entry& a, const Entry& b) {
    return std::tie(a.f, a.h, a.order) > std::tie(b.f, b.h, b.order);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> open(cmp);
  std::unordered_map<uint32_t, uint8_t> best_g;
  std::unordered_map<uint32_t, uint64_t> parent;  // key -> (prev_key<<8)|move
  uint64_t order = 0;

  uint32_t start_key = key_of(r0, s0);
  best_g[start_key] = 0;
  open.push({h_of(r0, s0), h_of(r0, s0), start_key, order++});

  while (!open.empty()) {
    Entry e = open.top();
    open.pop();
    uint32_t r = e.key & ((1u << kNumQubits15) - 1);
    uint32_t s = e.key >> kNumQubits15;
    int g = e.f - h_of(r, s);
    auto it = best_g.find(e.key);
    if (it != best_g.end() && it->second < g) continue;
    if (hr[r] == 0 && hs[s] == 0) {
      std::vector<FoldMove> path;
      uint32_t key = e.key;
      while (key != start_key) {
        uint64_t p = parent.at(key);
        path.push_back(moves[p & 0xff]);
        key = static_cast<uint32_t>(p >> 8);
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    if (g == bound) continue;
    for (std::size_t m = 0; m < moves.size(); ++m) {
      uint32_t r2 = ((r >> moves[m].t) & 1) ? r ^ (1u << moves[m].c) : r;
      uint32_t s2 = ((s >> moves[m].c) & 1) ? s ^ (1u << moves[m].t) : s;
      if (r2 == r && s2 == s) continue;
      int g2 = g + 1;
      if (g2 + h_of(r2, s2) > bound) continue;
      uint32_t k2 = key_of(r2, s2);
      auto f = best_g.find(k2);
      if (f != best_g.end() && f->second <= g2) continue;
      best_g[k2] = static_cast<uint8_t>(g2);
      parent[k2] = (static_cast<uint64_t>(e.key) << 8) | m;
      open.push({g2 + h_of(r2, s2), h_of(r2, s2), k2, order++});
    }
  }
  return std::nullopt;
}

// Permutation of qubit indices induced by an invertible linear map on the
// 4-bit labels sending label j+1 to label 4 (qubit index 3). Such maps are
// code automorphisms, so a fold found for any H qubit relabels to qubit 4.
std::vector<uint32_t> relabel_to_qubit4(int j) {
  auto extend_basis = [](uint32_t first) {
    std::vector<uint32_t> basis{first};
    std::vector<uint32_t> reduced{first};
    for (uint32_t v = 1; v <= 15 && basis.size() < 4; ++v) {
      uint32_t w = v;
      for (uint32_t b : reduced) w = std::min(w, w ^ b);
      if (w) {
        basis.push_back(v);
        reduced.push_back(w);
      }
    }
    return basis;
  };
  std::vector<uint32_t> from = extend_basis(static_cast<uint32_t>(j + 1));
  std::vector<uint32_t> to = extend_basis(4u);
  // Image of any label: decompose over `from` by brute force (16 subsets).
  auto image = [&](uint32_t v) {
    for (uint32_t m = 0; m < 16; ++m) {
      uint32_t acc = 0, img = 0;
      for (int i = 0; i < 4; ++i)
        if ((m >> i) & 1) {
          acc ^= from[i];
          img ^= to[i];
        }
      if (acc == v) return img;
    }
    throw std::logic_error("label decomposition failed");
  };
  std::vector<uint32_t> sigma(kNumQubits15);
  for (int i = 0; i < kNumQubits15; ++i) sigma[i] = image(i + 1) - 1;
  return sigma;
}

CircuitIR assemble_h_block(const std::vector<FoldMove>& search_moves,
                           int h_qubit, const std::vector<uint32_t>* sigma) {
  auto map_q = [&](uint32_t q) { return sigma ? (*sigma)[q] : q; };
  CircuitIR circ(kNumQubits15);
  std::vector<int32_t> avail(kNumQubits15, 0);
  auto add_cnot = [&](const FoldMove& mv) {
    uint32_t c = map_q(mv.c), t = map_q(mv.t);
    int32_t when = std::max(avail[c], avail[t]);
    circ.add_cnot(c, t, when);
    avail[c] = avail[t] = when + 1;
  };
  // Search moves prepend gates, so execution order of the fold B is the
  // reverse of the search order; the unfold B^{-1} is the search order.
  for (auto it = search_moves.rbegin(); it != search_moves.rend(); ++it)
    add_cnot(*it);
  uint32_t hq = map_q(static_cast<uint32_t>(h_qubit));
  circ.add(LocKind::H, hq, avail[hq]);
  avail[hq]++;
  for (const auto& mv : search_moves) add_cnot(mv);
  circ.sort_by_time();
  circ.compact_times();
  circ.validate();
  return circ;
}

}  // namespace

std::vector<std::string> check_h_block(const CssCode& code,
                                       const CircuitIR& circuit) {
  std::vector<std::string> failures;
  F2Span x_span(code.x_gens());
  F2Span z_span(code.z_gens());
  struct Op {
    std::string name;
    uint32_t mask;
    bool x_type;
    uint32_t x_shift, z_shift;  // expected coset shifts of the image
  };
  std::vector<Op> ops;
  for (std::size_t i = 0; i < code.x_gens().size(); ++i)
    ops.push_back({"X-gen " + std::to_string(i + 1), code.x_gens()[i], true, 0, 0});
  for (std::size_t i = 0; i < code.z_gens().size(); ++i)
    ops.push_back({"Z-gen " + std::to_string(i + 1), code.z_gens()[i], false, 0, 0});
  ops.push_back({"logical X", code.logical_x(), true, 0, code.logical_z()});
  ops.push_back({"logical Z", code.logical_z(), false, code.logical_x(), 0});

  for (const auto& op : ops) {
    PauliFrame f(code.n());
    for (uint32_t q = 0; q < code.n(); ++q) {
      if (!((op.mask >> q) & 1)) continue;
      if (op.x_type)
        f.flip_x(q);
      else
        f.flip_z(q);
    }
    for (const auto& loc : circuit.locations()) conjugate_location(loc, f);
    uint32_t x = extract_bits(f.x_words(), 0, code.n());
    uint32_t z = extract_bits(f.z_words(), 0, code.n());
    if (!x_span.contains(x ^ op.x_shift) || !z_span.contains(z ^ op.z_shift))
      failures.push_back(op.name);
  }
  return failures;
}

const CircuitIR& h_block() {
  static const CircuitIR block = [] {
    const CssCode& code = reed_muller15();
    std::vector<uint8_t> hr = coset_distances(code.z_gens(), code.logical_z());
    std::vector<uint8_t> hs = coset_distances(code.x_gens(), code.logical_x());

    std::vector<int> start_qubits{3};
    for (int j = 0; j < kNumQubits15; ++j)
      if (j != 3) start_qubits.push_back(j);

    std::set<std::vector<std::pair<uint8_t, uint8_t>>> seen;
    for (int bound = 6; bound <= 7; ++bound) {
      for (int j : start_qubits) {
        for (uint64_t restart = 0; restart < 200; ++restart) {
          auto sol = astar_fold(j, hr, hs, bound,
                                static_cast<uint64_t>(bound) * 100000 +
                                    static_cast<uint64_t>(j) * 1000 + restart);
          if (!sol) break;  // no solution at this bound for this start qubit
          std::vector<std::pair<uint8_t, uint8_t>> sig;
          for (const auto& mv : *sol) sig.emplace_back(mv.c, mv.t);
          if (!seen.insert(sig).second) continue;
          std::optional<std::vector<uint32_t>> sigma;
          if (j != 3) sigma = relabel_to_qubit4(j);
          CircuitIR cand =
              assemble_h_block(*sol, j, sigma ? &*sigma : nullptr);
          if (cand.count(LocKind::Cnot) > 14) continue;
          if (cand.max_time() + 1 > 9) continue;
          if (cand.count(LocKind::H) != 1) continue;
          bool h_on_4 = false;
          for (const auto& loc : cand.locations())
            if (loc.kind == LocKind::H && loc.q0 == 3) h_on_4 = true;
          if (!h_on_4) continue;
          if (!check_h_block(code, cand).empty()) continue;
          return cand;
        }
      }
    }
    throw std::runtime_error("logical-H block search failed");
  }();
  return block;
}

const CircuitIR& t_sequence() {
  static const CircuitIR seq = [] {
    CircuitIR circ(7);
    circ.add_cnot(1, 0, 0);
    circ.add_cnot(3, 2, 0);
    circ.add_cnot(5, 4, 0);
    circ.add_cnot(2, 0, 1);
    circ.add_cnot(6, 4, 1);
    circ.add_cnot(4, 0, 2);
    circ.add(LocKind::T, 0, 3);
    circ.add_cnot(4, 0, 4);
    circ.add_cnot(2, 0, 5);
    circ.add_cnot(6, 4, 5);
    circ.add_cnot(1, 0, 6);
    circ.add_cnot(3, 2, 6);
    circ.add_cnot(5, 4, 6);
    circ.validate();
    if (!verify_t_statevector(circ))
      throw std::runtime_error("T sequence statevector check failed");
    return circ;
  }();
  return seq;
}

bool verify_t_statevector(const CircuitIR& block_level) {
  const CssCode& code = steane();
  constexpr std::size_t dim = 128;
  using cvec = std::vector<std::complex<double>>;

  // Codewords of the outer code: span of the X-generator supports.
  std::vector<uint32_t> words{0};
  for (uint32_t g : code.x_gens()) {
    std::size_t count = words.size();
    for (std::size_t i = 0; i < count; ++i) words.push_back(words[i] ^ g);
  }
  auto logical_state = [&](bool one) {
    cvec v(dim, 0.0);
    double amp = 1.0 / std::sqrt(static_cast<double>(words.size()));
    for (uint32_t w : words) v[w ^ (one ? code.logical_x() : 0)] = amp;
    return v;
  };

  auto apply = [&](cvec v) {
    std::vector<Location> locs = block_level.locations();
    std::stable_sort(locs.begin(), locs.end(),
                     [](const Location& a, const Location& b) {
                       return a.time < b.time;
                     });
    const std::complex<double> t_phase = std::polar(1.0, std::numbers::pi / 4);
    for (const auto& loc : locs) {
      switch (loc.kind) {
        case LocKind::Cnot: {
          cvec next(dim, 0.0);
          for (std::size_t i = 0; i < dim; ++i) {
            std::size_t j =
                ((i >> loc.q0) & 1) ? (i ^ (std::size_t{1} << loc.q1)) : i;
            next[j] += v[i];
          }
          v = std::move(next);
          break;
        }
        case LocKind::T:
        case LocKind::Tdg:
          for (std::size_t i = 0; i < dim; ++i)
            if ((i >> loc.q0) & 1)
              v[i] *= (loc.kind == LocKind::T) ? t_phase : std::conj(t_phase);
          break;
        default:
          throw std::logic_error("unsupported location in statevector check");
      }
    }
    return v;
  };

  auto close = [](const cvec& a, const cvec& b,
                  std::complex<double> phase) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (std::abs(a[i] - phase * b[i]) > 1e-12) return false;
    return true;
  };

  cvec zero = logical_state(false), one = logical_state(true);
  const std::complex<double> t_phase = std::polar(1.0, std::numbers::pi / 4);
  return close(apply(zero), zero, 1.0) && close(apply(one), one, t_phase);
}

}  // namespace ftqc
