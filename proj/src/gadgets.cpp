#include "ftqc/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

#include "ftqc/builders.hpp"

namespace ftqc {

namespace {

constexpr uint32_t kBlock = 15;
constexpr uint32_t kRegister = 105;

// Basis of each inner block of a verified 105-qubit ancilla: outer-level
// |+> seeds become inner |+> blocks, outer |0> seeds inner |0> blocks.
std::vector<char> block_bases(char outer_basis) {
  std::vector<char> bases(7, 'Z');
  for (const auto& loc : outer_encoder(outer_basis).locations()) {
    if (loc.kind == LocKind::PrepX) bases[loc.q0] = 'X';
    if (loc.kind == LocKind::PrepZ) bases[loc.q0] = 'Z';
  }
  return bases;
}

// One inner block prepared next to an identical copy, coupled by a
// transversal CNOT (copy controls, kept targets) so that kept Z errors reach
// the copy's X-basis measurement. The kept block rests while the copy is
// measured; encoder-internal idles are gap-filled.
CircuitIR block_prep_circuit(std::size_t n, uint32_t kept_base,
                             uint32_t copy_base, char basis) {
  const CircuitIR& enc = inner_encoder(basis);
  CircuitIR circ(n);
  circ.append(enc, kept_base, 0);
  circ.append(enc, copy_base, 0);
  int32_t couple = enc.max_time() + 1;
  for (uint32_t q = 0; q < kBlock; ++q)
    circ.add_cnot(copy_base + q, kept_base + q, couple);
  for (uint32_t q = 0; q < kBlock; ++q)
    circ.add(LocKind::MeasX, copy_base + q, couple + 1);
  for (uint32_t q = 0; q < kBlock; ++q)
    circ.add(LocKind::Rest, kept_base + q, couple + 1);
  circ.fill_rest_gaps();
  circ.sort_by_time();
  circ.validate();
  return circ;
}

// Outer CNOT fan-out of an assembled ancilla: each block-level CNOT expands
// to fifteen transversal physical CNOTs; idles between block uses are
// gap-filled.
CircuitIR outer_assembly_circuit(std::size_t n, uint32_t kept_base,
                                 char outer_basis) {
  CircuitIR circ(n);
  for (const auto& loc : outer_encoder(outer_basis).locations()) {
    if (loc.kind != LocKind::Cnot) continue;
    for (uint32_t q = 0; q < kBlock; ++q)
      circ.add_cnot(kept_base + kBlock * loc.q0 + q,
                    kept_base + kBlock * loc.q1 + q, loc.time - 1);
  }
  circ.fill_rest_gaps();
  circ.sort_by_time();
  circ.compact_times();
  circ.validate();
  return circ;
}

std::vector<uint32_t> verification_checks(char basis) {
  const CssCode& inner = reed_muller15();
  std::vector<uint32_t> masks = inner.x_gens();
  // A copy prepared in |+> also exposes the logical-X parity of the word,
  // which catches logical-Z residues on the kept block.
  if (basis == 'X') masks.push_back(inner.logical_x());
  return masks;
}

// Appends one EC round: verified ancilla prep (per-block retry regions),
// outer assembly, transversal coupling to data, ancilla measurement with a
// data rest layer, and the hierarchical decode phase. round 'X' corrects
// X errors with a |0>-type ancilla; round 'Z' corrects Z errors with |+>.
void append_ec_round(Program& prog, uint32_t data_base, uint32_t kept_base,
                     uint32_t copy_base, char round) {
  const char anc_basis = (round == 'X') ? 'Z' : 'X';
  std::vector<char> bases = block_bases(anc_basis);

  for (uint32_t b = 0; b < 7; ++b) {
    int circuit_index = static_cast<int>(prog.phases.size());
    Phase prep;
    prep.kind = PhaseKind::Circuit;
    prep.circuit = block_prep_circuit(prog.n_qubits, kept_base + kBlock * b,
                                      copy_base + kBlock * b, bases[b]);
    prog.phases.push_back(std::move(prep));

    Phase verify;
    verify.kind = PhaseKind::Verify;
    verify.region_start = circuit_index;
    verify.word_phase = circuit_index;
    verify.check_masks = verification_checks(bases[b]);
    verify.block_base = kept_base + kBlock * b;
    prog.phases.push_back(std::move(verify));

    Phase reduce;
    reduce.kind = PhaseKind::Reduce;
    reduce.block_base = kept_base + kBlock * b;
    reduce.basis = bases[b];
    prog.phases.push_back(std::move(reduce));
  }

  Phase assembly;
  assembly.kind = PhaseKind::Circuit;
  assembly.circuit = outer_assembly_circuit(prog.n_qubits, kept_base, anc_basis);
  prog.phases.push_back(std::move(assembly));

  Phase couple;
  couple.kind = PhaseKind::Circuit;
  CircuitIR cc(prog.n_qubits);
  for (uint32_t q = 0; q < kRegister; ++q) {
    if (round == 'X')
      cc.add_cnot(data_base + q, kept_base + q, 0);
    else
      cc.add_cnot(kept_base + q, data_base + q, 0);
  }
  for (uint32_t q = 0; q < kRegister; ++q)
    cc.add(round == 'X' ? LocKind::MeasZ : LocKind::MeasX, kept_base + q, 1);
  for (uint32_t q = 0; q < kRegister; ++q)
    cc.add(LocKind::Rest, data_base + q, 1);
  cc.validate();
  couple.circuit = std::move(cc);
  int couple_index = static_cast<int>(prog.phases.size());
  prog.phases.push_back(std::move(couple));

  Phase decode;
  decode.kind = PhaseKind::DecodeEc;
  decode.word_phase = couple_index;
  decode.basis = round;
  decode.data_base = data_base;
  prog.phases.push_back(std::move(decode));
}

void append_ec(Program& prog, uint32_t data_base, uint32_t kept_base,
               uint32_t copy_base) {
  append_ec_round(prog, data_base, kept_base, copy_base, 'X');
  append_ec_round(prog, data_base, kept_base, copy_base, 'Z');
}

// Verified preparation written directly into a data register (the prep
// gadget): per-block verified prep plus outer assembly, no data coupling.
void append_prep_gadget(Program& prog, uint32_t data_base, uint32_t copy_base,
                        char outer_basis) {
  std::vector<char> bases = block_bases(outer_basis);
  for (uint32_t b = 0; b < 7; ++b) {
    int circuit_index = static_cast<int>(prog.phases.size());
    Phase prep;
    prep.kind = PhaseKind::Circuit;
    prep.circuit = block_prep_circuit(prog.n_qubits, data_base + kBlock * b,
                                      copy_base + kBlock * b, bases[b]);
    prog.phases.push_back(std::move(prep));

    Phase verify;
    verify.kind = PhaseKind::Verify;
    verify.region_start = circuit_index;
    verify.word_phase = circuit_index;
    verify.check_masks = verification_checks(bases[b]);
    verify.block_base = data_base + kBlock * b;
    prog.phases.push_back(std::move(verify));

    Phase reduce;
    reduce.kind = PhaseKind::Reduce;
    reduce.block_base = data_base + kBlock * b;
    reduce.basis = bases[b];
    prog.phases.push_back(std::move(reduce));
  }
  Phase assembly;
  assembly.kind = PhaseKind::Circuit;
  assembly.circuit =
      outer_assembly_circuit(prog.n_qubits, data_base, outer_basis);
  prog.phases.push_back(std::move(assembly));
}

CircuitIR cnot_body(std::size_t n, uint32_t d1, uint32_t d2) {
  CircuitIR circ(n);
  for (uint32_t q = 0; q < kRegister; ++q) circ.add_cnot(d1 + q, d2 + q, 0);
  circ.validate();
  return circ;
}

CircuitIR h_body(std::size_t n, uint32_t d) {
  CircuitIR circ(n);
  std::vector<uint32_t> data(kRegister);
  for (uint32_t b = 0; b < 7; ++b) circ.append(h_block(), d + kBlock * b, 0);
  for (uint32_t q = 0; q < kRegister; ++q) data[q] = d + q;
  circ.fill_rests(data, 0, circ.max_time());
  circ.sort_by_time();
  circ.validate();
  return circ;
}

CircuitIR t_body(std::size_t n, uint32_t d) {
  CircuitIR circ(n);
  for (const auto& loc : t_sequence().locations()) {
    if (loc.kind == LocKind::Cnot) {
      for (uint32_t q = 0; q < kBlock; ++q)
        circ.add_cnot(d + kBlock * loc.q0 + q, d + kBlock * loc.q1 + q,
                      loc.time);
    } else if (loc.kind == LocKind::T) {
      // Logical T on an inner block is transversal T-dagger.
      for (uint32_t q = 0; q < kBlock; ++q)
        circ.add(LocKind::Tdg, d + kBlock * loc.q0 + q, loc.time);
    }
  }
  std::vector<uint32_t> data(kRegister);
  for (uint32_t q = 0; q < kRegister; ++q) data[q] = d + q;
  circ.fill_rests(data, 0, circ.max_time());
  circ.sort_by_time();
  circ.validate();
  return circ;
}

CircuitIR rest_body(std::size_t n, uint32_t d) {
  CircuitIR circ(n);
  for (uint32_t q = 0; q < kRegister; ++q) circ.add(LocKind::Rest, d + q, 0);
  circ.validate();
  return circ;
}

CircuitIR meas_body(std::size_t n, uint32_t d, LocKind kind) {
  CircuitIR circ(n);
  for (uint32_t q = 0; q < kRegister; ++q) circ.add(kind, d + q, 0);
  circ.validate();
  return circ;
}

void push_marker(Program& prog, PhaseKind kind) {
  Phase p;
  p.kind = kind;
  prog.phases.push_back(std::move(p));
}

}  // namespace

const CircuitIR& inner_encoder(char basis) {
  static const CircuitIR z = build_encoder(reed_muller15(), 'Z', true);
  static const CircuitIR x = build_encoder(reed_muller15(), 'X', true);
  if (basis != 'Z' && basis != 'X')
    throw std::invalid_argument("encoder basis must be 'Z' or 'X'");
  return basis == 'Z' ? z : x;
}

const CircuitIR& outer_encoder(char basis) {
  static const CircuitIR z = build_encoder(steane(), 'Z', false);
  static const CircuitIR x = build_encoder(steane(), 'X', false);
  if (basis != 'Z' && basis != 'X')
    throw std::invalid_argument("encoder basis must be 'Z' or 'X'");
  return basis == 'Z' ? z : x;
}

std::size_t Program::location_count() const {
  std::size_t c = 0;
  for (const auto& phase : phases) c += phase.circuit.size();
  return c;
}

std::size_t Program::count(LocKind kind) const {
  std::size_t c = 0;
  for (const auto& phase : phases) c += phase.circuit.count(kind);
  return c;
}

const std::vector<std::string>& exrec_variants(LocKind gate) {
  static const std::vector<std::string> cnot{
      "full", "tec_removed_first", "tec_removed_second", "tec_removed_both"};
  static const std::vector<std::string> single{"full", "tec_removed"};
  static const std::vector<std::string> meas{"full"};
  switch (gate) {
    case LocKind::Cnot:
      return cnot;
    case LocKind::H:
    case LocKind::T:
    case LocKind::Rest:
    case LocKind::PrepZ:
    case LocKind::PrepX:
      return single;
    case LocKind::MeasZ:
    case LocKind::MeasX:
      return meas;
    default:
      throw std::invalid_argument("no extended rectangle for this kind");
  }
}

std::vector<std::pair<LocKind, std::string>> all_exrec_families() {
  std::vector<std::pair<LocKind, std::string>> out;
  for (LocKind gate : {LocKind::Cnot, LocKind::H, LocKind::T, LocKind::Rest,
                       LocKind::PrepZ, LocKind::PrepX, LocKind::MeasZ,
                       LocKind::MeasX}) {
    for (const auto& variant : exrec_variants(gate))
      out.emplace_back(gate, variant);
  }
  return out;
}

Program build_exrec(LocKind gate, const std::string& variant) {
  const auto& variants = exrec_variants(gate);
  if (std::find(variants.begin(), variants.end(), variant) == variants.end())
    throw std::invalid_argument("unknown variant '" + variant + "' for " +
                                kind_name(gate));

  Program prog;
  prog.gate = gate;
  prog.variant = variant;
  prog.name = std::string(kind_name(gate)) + "/" + variant;
  switch (gate) {
    case LocKind::Cnot:
      prog.d_star = 9;
      break;
    case LocKind::H:
    case LocKind::T:
      prog.d_star = 3;
      break;
    default:
      prog.d_star = 9;  // threshold plumbing convention for the other kinds
      break;
  }
  prog.count_x = !(gate == LocKind::PrepX || gate == LocKind::MeasX);
  prog.count_z = !(gate == LocKind::PrepZ || gate == LocKind::MeasZ);
  prog.mal_mode = (gate == LocKind::MeasZ || gate == LocKind::MeasX)
                      ? MalMode::MeasWord
                      : MalMode::RefCompare;

  // Register and ancilla-bank allocation (all contiguous 105-qubit units).
  uint32_t next = 0;
  auto alloc = [&next]() {
    uint32_t base = next;
    next += kRegister;
    return base;
  };

  const bool two_registers = gate == LocKind::Cnot;
  const bool is_prep = gate == LocKind::PrepZ || gate == LocKind::PrepX;
  const bool is_meas = gate == LocKind::MeasZ || gate == LocKind::MeasX;
  const bool tec_first = variant == "full" || variant == "tec_removed_second";
  const bool tec_second = variant == "full" || variant == "tec_removed_first";
  const bool tec_single = !is_meas && variant == "full";

  uint32_t d1 = alloc();
  uint32_t d2 = two_registers ? alloc() : 0;
  prog.registers.push_back(d1);
  if (two_registers) prog.registers.push_back(d2);

  struct Bank {
    uint32_t kept, copy;
  };
  auto alloc_bank = [&]() { return Bank{alloc(), alloc()}; };

  Bank lec1{0, 0}, lec2{0, 0}, tec1{0, 0}, tec2{0, 0};
  uint32_t prep_copy = 0;
  if (is_prep) {
    prep_copy = alloc();
  } else {
    lec1 = alloc_bank();
    if (two_registers) lec2 = alloc_bank();
  }
  if (two_registers) {
    if (tec_first) tec1 = alloc_bank();
    if (tec_second) tec2 = alloc_bank();
  } else if (tec_single) {
    tec1 = alloc_bank();
  }
  prog.n_qubits = next;

  // Leading corrections.
  if (!is_prep) {
    append_ec(prog, d1, lec1.kept, lec1.copy);
    if (two_registers) append_ec(prog, d2, lec2.kept, lec2.copy);
    push_marker(prog, PhaseKind::SnapshotRef);
  }

  // Body.
  push_marker(prog, PhaseKind::BodyBegin);
  Phase body;
  body.kind = PhaseKind::Circuit;
  switch (gate) {
    case LocKind::Cnot:
      body.circuit = cnot_body(prog.n_qubits, d1, d2);
      break;
    case LocKind::H:
      body.circuit = h_body(prog.n_qubits, d1);
      break;
    case LocKind::T:
      body.circuit = t_body(prog.n_qubits, d1);
      break;
    case LocKind::Rest:
      body.circuit = rest_body(prog.n_qubits, d1);
      break;
    case LocKind::PrepZ:
    case LocKind::PrepX: {
      append_prep_gadget(prog, d1, prep_copy,
                         gate == LocKind::PrepZ ? 'Z' : 'X');
      break;
    }
    case LocKind::MeasZ:
    case LocKind::MeasX: {
      body.circuit = meas_body(prog.n_qubits, d1, gate);
      prog.meas_word_phase = static_cast<int>(prog.phases.size());
      break;
    }
    default:
      throw std::invalid_argument("unsupported gate kind");
  }
  if (!is_prep) prog.phases.push_back(std::move(body));
  push_marker(prog, PhaseKind::BodyEnd);

  // Trailing corrections.
  if (two_registers) {
    if (tec_first) append_ec(prog, d1, tec1.kept, tec1.copy);
    if (tec_second) append_ec(prog, d2, tec2.kept, tec2.copy);
  } else if (tec_single) {
    append_ec(prog, d1, tec1.kept, tec1.copy);
  }
  return prog;
}

}  // namespace ftqc
