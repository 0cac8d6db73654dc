#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftqc/circuit.hpp"
#include "ftqc/codes.hpp"
#include "ftqc/pauli.hpp"

namespace ftqc {

// Forward/backward Pauli conjugation through Clifford locations (cnot, h,
// rest; preps/meas leave frames untouched here). T locations are rejected:
// their X-residue needs a coin and lives in the engine.
void conjugate_location(const Location& loc, PauliFrame& frame);

// F2 span helper: row-reduces `rows` once, then answers membership queries.
class F2Span {
 public:
  explicit F2Span(const std::vector<uint32_t>& rows);
  bool contains(uint32_t v) const;
  std::size_t rank() const { return basis_.size(); }

 private:
  std::vector<uint32_t> basis_;  // reduced, pivot-sorted
};

// Encoding circuit for logical |0> (basis 'Z') or |+> (basis 'X'): physical
// preparations plus a CNOT fan-out per generator row, ASAP-scheduled.
// Construction searches deterministic emission orders until the circuit
// passes both checks below; throws std::runtime_error if none is found.
// `require_x_property` enables the single-fault scan; block-level outer
// encoders skip it because their fault containment is transversal.
CircuitIR build_encoder(const CssCode& code, char basis,
                        bool require_x_property = true);

// Conjugation check: every stabilizer of the target state, propagated
// backwards, must land on single-qubit stabilizers of the prepared product
// state. Returns the names of failing operators (empty = pass).
std::vector<std::string> check_encoder(const CssCode& code, char basis,
                                       const CircuitIR& circuit);

// Fault-tolerance property of an encoder: for every single location fault
// (model outcome set per kind), the propagated output X-component must decode
// to class I — or, for basis 'X', the logical class that is a stabilizer of
// |+> and is removed at acceptance. Returns descriptions of violations.
std::vector<std::string> scan_encoder_x_property(const CssCode& code,
                                                 char basis,
                                                 const CircuitIR& circuit);

// 15-qubit logical-H block: <=14 CNOTs, depth <=9, one physical H on qubit 4
// (index 3). Found by search; verified by check_h_block. Cached after the
// first call. Throws if the search or the check fails.
const CircuitIR& h_block();

// Conjugation check for a candidate H block: stabilizer group preserved,
// logical X <-> logical Z. Returns names of failing operators.
std::vector<std::string> check_h_block(const CssCode& code,
                                       const CircuitIR& circuit);

// Outer-level logical-T sequence on 7 block qubits: CNOT fold into block 1,
// T on block 1, unfold. Verified exactly by a 128-dimensional statevector
// computation at build time; throws on failure.
const CircuitIR& t_sequence();

// Statevector check used for t_sequence: the block-level circuit must fix
// the outer code's logical |0> and phase its logical |1> by exp(i*pi/4).
bool verify_t_statevector(const CircuitIR& block_level);

}  // namespace ftqc
