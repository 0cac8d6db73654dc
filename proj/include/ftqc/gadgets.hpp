#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ftqc/circuit.hpp"
#include "ftqc/codes.hpp"

namespace ftqc {

// A fault-tolerant gadget program is a sequence of phases interpreted by the
// trial engine. Circuit phases execute physical locations (each a noise
// site) and record measurement outcomes in location order. Verify phases
// test parity checks of the preceding word and jump back to the start of
// their retry region on failure. Reduce phases strip the logical class that
// stabilizes a freshly accepted ancilla block. DecodeEc phases turn a
// measured 105-bit word into hierarchical corrections on a data register.
enum class PhaseKind : uint8_t {
  Circuit,
  Verify,
  Reduce,
  SnapshotRef,  // copy data frames into the noiseless reference
  BodyBegin,    // subsequent Circuit phases also advance the reference
  BodyEnd,
  DecodeEc,
};

struct Phase {
  PhaseKind kind = PhaseKind::Circuit;
  CircuitIR circuit;  // Circuit phases only
  // Verify: retry region [region_start .. this phase], checked word, checks.
  int region_start = -1;
  int word_phase = -1;  // Circuit phase whose measured word is consumed
  std::vector<uint32_t> check_masks;
  int retry_cap = 10;
  // Verify (diagnostics) and Reduce: base index of the 15-qubit kept block.
  uint32_t block_base = 0;
  // Reduce: basis of the prepared block ('Z' strips logical Z, 'X' logical
  // X). DecodeEc: EC round ('X' corrects X errors, 'Z' corrects Z errors).
  char basis = 'Z';
  uint32_t data_base = 0;  // DecodeEc: base index of the data register
};

// How the residual logical error of a trial is evaluated.
enum class MalMode : uint8_t {
  RefCompare,  // decode final frames against the propagated reference
  MeasWord,    // decode the recorded measurement word against the reference
};

struct Program {
  std::string name;  // e.g. "cnot/full"
  LocKind gate = LocKind::Cnot;
  std::string variant;
  std::size_t n_qubits = 0;
  std::vector<uint32_t> registers;  // data register bases, each 105 qubits
  std::vector<Phase> phases;
  MalMode mal_mode = MalMode::RefCompare;
  int meas_word_phase = -1;  // MeasWord mode: phase whose word is decoded
  bool count_x = true;       // residual components that count as malignant
  bool count_z = true;
  int d_star = 9;

  // Nominal location count of one attempt (retries excluded).
  std::size_t location_count() const;
  std::size_t count(LocKind kind) const;
};

// Extended rectangle families. Variants: "full" plus, where a trailing
// correction exists to remove, "tec_removed" (single-register gates) or
// "tec_removed_first"/"tec_removed_second"/"tec_removed_both" (cnot).
const std::vector<std::string>& exrec_variants(LocKind gate);
std::vector<std::pair<LocKind, std::string>> all_exrec_families();
Program build_exrec(LocKind gate, const std::string& variant);

// Cached inner/outer encoding circuits used by the gadget construction.
const CircuitIR& inner_encoder(char basis);
const CircuitIR& outer_encoder(char basis);

}  // namespace ftqc
