#include "ftqc/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "ftqc/codes.hpp"

namespace ftqc {

RunStats& RunStats::merge(const RunStats& other) {
  trials += other.trials;
  aborted += other.aborted;
  retried_trials += other.retried_trials;
  total_retries += other.total_retries;
  malignant += other.malignant;
  for (std::size_t i = 0; i < class_counts.size(); ++i)
    class_counts[i] += other.class_counts[i];
  return *this;
}

const std::vector<ErrorClass>& location_outcomes(LocKind kind) {
  static const std::vector<ErrorClass> singles = [] {
    const auto& s = ErrorClass::nontrivial_single();
    return std::vector<ErrorClass>(s.begin(), s.end());
  }();
  static const std::vector<ErrorClass> pairs = [] {
    const auto& s = ErrorClass::nontrivial_pair();
    return std::vector<ErrorClass>(s.begin(), s.end());
  }();
  static const std::vector<ErrorClass> prep_z{ErrorClass::single(Pauli::X)};
  static const std::vector<ErrorClass> prep_x{ErrorClass::single(Pauli::Z)};
  switch (kind) {
    case LocKind::Cnot:
      return pairs;
    case LocKind::PrepZ:
    case LocKind::MeasZ:
      return prep_z;
    case LocKind::PrepX:
    case LocKind::MeasX:
      return prep_x;
    default:
      return singles;
  }
}

Engine::Engine(Program prog, NoiseModel noise)
    : prog_(std::move(prog)), noise_(std::move(noise)) {
  for (std::size_t p = 0; p < prog_.phases.size(); ++p) {
    const Phase& ph = prog_.phases[p];
    bool has_meas = false;
    if (ph.kind == PhaseKind::Circuit) {
      const auto& locs = ph.circuit.locations();
      for (std::size_t i = 0; i < locs.size(); ++i) {
        sites_.push_back({static_cast<int>(p), i, locs[i].kind});
        has_meas |= is_meas(locs[i].kind);
      }
    }
    phase_has_meas_.push_back(has_meas);
  }
  for (uint32_t base : prog_.registers) {
    std::vector<std::size_t> idx(105);
    for (std::size_t q = 0; q < 105; ++q) idx[q] = base + q;
    register_index_.push_back(std::move(idx));
  }
}

struct Engine::Interp {
  const Engine& eng;
  const Program& prog;
  Xoshiro256* rng = nullptr;
  std::span<const Injection> faults;
  uint64_t coin_bits = 0;
  int matter_coins = 0;

  PauliFrame frame;
  PauliFrame ref;
  std::vector<std::vector<uint8_t>> words;
  std::vector<uint8_t> executed;
  std::vector<int> retry_counts;
  bool in_body = false;
  TrialResult result;

  Interp(const Engine& e, Xoshiro256* r, std::span<const Injection> f,
         uint64_t bits)
      : eng(e),
        prog(e.prog_),
        rng(r),
        faults(f),
        coin_bits(bits),
        frame(e.prog_.n_qubits),
        ref(e.prog_.n_qubits),
        words(e.prog_.phases.size()),
        executed(e.prog_.phases.size(), 0),
        retry_counts(e.prog_.phases.size(), 0) {}

  bool next_coin(bool matters) {
    if (rng) return rng->coin();
    if (!matters) return false;
    if (matter_coins >= 62)
      throw std::logic_error("too many twirl coins in one injected run");
    return (coin_bits >> matter_coins++) & 1;
  }

  void apply_outcome(const Location& loc, const ErrorClass& cls,
                     std::vector<uint8_t>& word) {
    if (cls.identity()) return;
    if (is_meas(loc.kind)) {
      word[loc.q0] ^= 1;  // readout flip
      return;
    }
    frame.mul(loc.q0, cls.op[0]);
    if (loc.kind == LocKind::Cnot) frame.mul(loc.q1, cls.op[1]);
  }

  void exec_circuit(int pc) {
    const Phase& ph = prog.phases[pc];
    const bool adv = in_body;
    const bool first = !executed[pc];
    executed[pc] = 1;
    auto& word = words[pc];
    if (eng.phase_has_meas_[pc]) word.assign(prog.n_qubits, 0);

    const auto& locs = ph.circuit.locations();
    for (std::size_t i = 0; i < locs.size(); ++i) {
      const Location& loc = locs[i];
      const uint32_t q = loc.q0;
      switch (loc.kind) {
        case LocKind::PrepZ:
        case LocKind::PrepX:
          frame.set(q, Pauli::I);
          if (adv) ref.set(q, Pauli::I);
          break;
        case LocKind::MeasZ:
          word[q] = frame.x_bit(q);
          frame.set(q, Pauli::I);
          break;
        case LocKind::MeasX:
          word[q] = frame.z_bit(q);
          frame.set(q, Pauli::I);
          break;
        case LocKind::H: {
          bool x = frame.x_bit(q), z = frame.z_bit(q);
          if (x != z) {
            frame.flip_x(q);
            frame.flip_z(q);
          }
          if (adv) {
            bool rx = ref.x_bit(q), rz = ref.z_bit(q);
            if (rx != rz) {
              ref.flip_x(q);
              ref.flip_z(q);
            }
          }
          break;
        }
        case LocKind::T:
        case LocKind::Tdg: {
          // Twirled non-Clifford action: Z components pass; an incoming X
          // leaves as X or Y on a fair coin. The reference shares the coin.
          bool matters = frame.x_bit(q) || (adv && ref.x_bit(q));
          bool c = next_coin(matters);
          if (c) {
            if (frame.x_bit(q)) frame.flip_z(q);
            if (adv && ref.x_bit(q)) ref.flip_z(q);
          }
          break;
        }
        case LocKind::Cnot: {
          const uint32_t t = loc.q1;
          if (frame.x_bit(q)) frame.flip_x(t);
          if (frame.z_bit(t)) frame.flip_z(q);
          if (adv) {
            if (ref.x_bit(q)) ref.flip_x(t);
            if (ref.z_bit(t)) ref.flip_z(q);
          }
          break;
        }
        case LocKind::Rest:
          break;
      }
      if (rng) {
        double u = rng->uniform();  // always drawn: coupled-rate invariant
        apply_outcome(loc, eng.noise_.at(loc.kind).sample(u), word);
      } else if (first) {
        for (const auto& f : faults)
          if (f.phase == pc && f.loc == i) apply_outcome(loc, f.cls, word);
      }
    }
  }

  // Measured bits of a phase in ascending-qubit order, packed little-endian.
  template <typename Fn>
  void gather_word(int phase, Fn&& consume) const {
    const auto& locs = prog.phases[phase].circuit.locations();
    std::vector<std::pair<uint32_t, bool>> bits;
    for (const auto& loc : locs)
      if (is_meas(loc.kind))
        bits.emplace_back(loc.q0, words[phase][loc.q0] != 0);
    std::sort(bits.begin(), bits.end());
    for (std::size_t i = 0; i < bits.size(); ++i) consume(i, bits[i].second);
  }

  uint32_t word15(int phase) const {
    uint32_t w = 0;
    gather_word(phase, [&w](std::size_t i, bool b) {
      if (b) w |= uint32_t{1} << i;
    });
    return w;
  }

  void reduce(const Phase& ph) {
    const CssCode& inner = reed_muller15();
    if (ph.basis == 'Z') {
      uint32_t z = extract_bits(frame.z_words(), ph.block_base, 15);
      if (inner.z_class(z))
        xor_bits(frame.z_words(), ph.block_base, 15, inner.logical_z());
    } else {
      uint32_t x = extract_bits(frame.x_words(), ph.block_base, 15);
      if (inner.x_class(x))
        xor_bits(frame.x_words(), ph.block_base, 15, inner.logical_x());
    }
  }

  void decode_ec(const Phase& ph) {
    const CssCode& inner = reed_muller15();
    const CssCode& outer = steane();
    std::array<uint32_t, 7> wb{};
    gather_word(ph.word_phase, [&wb](std::size_t i, bool b) {
      if (b) wb[i / 15] |= uint32_t{1} << (i % 15);
    });
    uint32_t beta = 0;
    for (std::size_t b = 0; b < 7; ++b) {
      if (ph.basis == 'X') {
        uint32_t corr = inner.x_correction(inner.x_syndrome(wb[b]));
        xor_bits(frame.x_words(), ph.data_base + 15 * b, 15, corr);
        if (inner.x_class(wb[b])) beta |= uint32_t{1} << b;
      } else {
        uint32_t corr = inner.z_correction(inner.z_syndrome(wb[b]));
        xor_bits(frame.z_words(), ph.data_base + 15 * b, 15, corr);
        if (inner.z_class(wb[b])) beta |= uint32_t{1} << b;
      }
    }
    if (ph.basis == 'X') {
      uint32_t ocorr = outer.x_correction(outer.x_syndrome(beta));
      for (std::size_t b = 0; b < 7; ++b)
        if ((ocorr >> b) & 1)
          xor_bits(frame.x_words(), ph.data_base + 15 * b, 15,
                   inner.logical_x());
    } else {
      uint32_t ocorr = outer.z_correction(outer.z_syndrome(beta));
      for (std::size_t b = 0; b < 7; ++b)
        if ((ocorr >> b) & 1)
          xor_bits(frame.z_words(), ph.data_base + 15 * b, 15,
                   inner.logical_z());
    }
  }

  bool run_phases() {
    int pc = 0;
    const int n_phases = static_cast<int>(prog.phases.size());
    while (pc < n_phases) {
      const Phase& ph = prog.phases[pc];
      switch (ph.kind) {
        case PhaseKind::Circuit:
          exec_circuit(pc);
          break;
        case PhaseKind::Verify: {
          uint32_t w = word15(ph.word_phase);
          bool ok = true;
          for (uint32_t mask : ph.check_masks) ok &= !parity32(mask & w);
          if (!ok) {
            ++result.retries;
            if (++retry_counts[pc] > ph.retry_cap) {
              result.aborted = true;
              return false;
            }
            pc = ph.region_start;
            continue;
          }
          break;
        }
        case PhaseKind::Reduce:
          reduce(ph);
          break;
        case PhaseKind::SnapshotRef:
          ref = frame;
          break;
        case PhaseKind::BodyBegin:
          in_body = true;
          break;
        case PhaseKind::BodyEnd:
          in_body = false;
          break;
        case PhaseKind::DecodeEc:
          decode_ec(ph);
          break;
      }
      ++pc;
    }
    return true;
  }

  void evaluate() {
    const ConcatenatedCode& cc = concatenated_code();
    std::array<Pauli, 2> ops{Pauli::I, Pauli::I};
    if (!prog.registers.empty()) {
      if (prog.mal_mode == MalMode::MeasWord) {
        PauliFrame wf(105);
        const bool z_basis = prog.gate == LocKind::MeasZ;
        gather_word(prog.meas_word_phase, [&](std::size_t i, bool b) {
          if (!b) return;
          if (z_basis)
            wf.flip_x(i);
          else
            wf.flip_z(i);
        });
        PauliFrame rf = ref.restricted_to(eng.register_index_[0]);
        bool flip_main = z_basis ? cc.x_class(wf) : cc.z_class(wf);
        bool flip_ref = z_basis ? cc.x_class(rf) : cc.z_class(rf);
        if (flip_main != flip_ref)
          ops[0] = z_basis ? Pauli::X : Pauli::Z;
      } else {
        for (std::size_t r = 0; r < prog.registers.size(); ++r) {
          PauliFrame mf = frame.restricted_to(eng.register_index_[r]);
          PauliFrame rf = ref.restricted_to(eng.register_index_[r]);
          ops[r] = compose(cc.decode(mf).op[0], cc.decode(rf).op[0]);
        }
      }
    }
    result.raw = prog.registers.size() == 2 ? ErrorClass::pair(ops[0], ops[1])
                                            : ErrorClass::single(ops[0]);
    const uint8_t keep = (prog.count_x ? 1 : 0) | (prog.count_z ? 2 : 0);
    result.masked = result.raw;
    for (auto& op : result.masked.op)
      op = static_cast<Pauli>(static_cast<uint8_t>(op) & keep);
    result.frame = frame;
    result.ref = ref;
  }
};

TrialResult Engine::run_one(Xoshiro256* rng, std::span<const Injection> faults,
                            uint64_t coin_bits, int* matter_coins) const {
  Interp in(*this, rng, faults, coin_bits);
  if (in.run_phases()) in.evaluate();
  if (matter_coins) *matter_coins = in.matter_coins;
  return in.result;
}

TrialResult Engine::run(Xoshiro256& rng) const {
  if (!noise_.in_model())
    throw std::logic_error("noise model outside its domain");
  return run_one(&rng, {}, 0, nullptr);
}

TrialResult Engine::run_injected(std::span<const Injection> faults) const {
  for (const auto& f : faults) {
    if (f.phase < 0 || f.phase >= static_cast<int>(prog_.phases.size()) ||
        prog_.phases[f.phase].kind != PhaseKind::Circuit ||
        f.loc >= prog_.phases[f.phase].circuit.size())
      throw std::out_of_range("injection does not address a circuit location");
  }
  int coins = 0;
  TrialResult base = run_one(nullptr, faults, 0, &coins);
  const int patterns = 1 << std::min(coins, 62);
  base.coin_patterns = patterns;
  if (coins == 0 || base.malignant()) return base;
  for (uint64_t bits = 1; bits < static_cast<uint64_t>(patterns); ++bits) {
    TrialResult r = run_one(nullptr, faults, bits, nullptr);
    r.coin_patterns = patterns;
    if (r.malignant()) return r;
  }
  return base;
}

RunStats run_trials(const Engine& engine, uint64_t seed, uint64_t stream,
                    uint64_t n_trials) {
  Xoshiro256 rng(seed, stream);
  RunStats stats;
  for (uint64_t i = 0; i < n_trials; ++i) {
    TrialResult r;
    int resamples = 0;
    for (;;) {
      r = engine.run(rng);
      if (!r.aborted) break;
      ++stats.aborted;
      if (++resamples > 10000)
        throw std::runtime_error("abort rate too high for this noise model");
    }
    ++stats.trials;
    stats.total_retries += static_cast<uint64_t>(r.retries);
    stats.retried_trials += r.retries > 0;
    stats.malignant += r.malignant();
    ++stats.class_counts[r.masked.index()];
  }
  return stats;
}

}  // namespace ftqc
