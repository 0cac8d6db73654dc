#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ftqc/gadgets.hpp"
#include "ftqc/noise.hpp"
#include "ftqc/pauli.hpp"
#include "ftqc/rng.hpp"

namespace ftqc {

struct TrialResult {
  bool aborted = false;  // a verified block exceeded its retry cap
  int retries = 0;       // verification rejections across the whole trial
  // Twirl-coin patterns explored (injected runs enumerate every pattern that
  // can matter; stochastic runs always report 1).
  int coin_patterns = 1;
  ErrorClass raw;     // residual logical action of the trial
  ErrorClass masked;  // raw with non-counted components stripped
  PauliFrame frame;   // final main frame (diagnostics)
  PauliFrame ref;     // final reference frame (diagnostics)

  bool malignant() const { return !masked.identity(); }
};

// Aggregate over a batch of trials. Aborted attempts are resampled and do
// not contribute a trial; they are counted separately.
struct RunStats {
  uint64_t trials = 0;
  uint64_t aborted = 0;
  uint64_t retried_trials = 0;
  uint64_t total_retries = 0;
  uint64_t malignant = 0;
  std::array<uint64_t, 16> class_counts{};  // by masked ErrorClass::index()

  RunStats& merge(const RunStats& other);
};

// Fault outcomes a location kind can produce, mirroring the class lists of
// the physical noise model (used by exhaustive injection sweeps).
const std::vector<ErrorClass>& location_outcomes(LocKind kind);

// Interprets a gadget program under a noise model, one trial at a time.
class Engine {
 public:
  Engine(Program prog, NoiseModel noise);

  const Program& program() const { return prog_; }

  // One stochastic trial. Every location consumes exactly one uniform and
  // every T/Tdg location exactly one coin, regardless of what they sample,
  // so runs at coupled rates consume identical randomness.
  TrialResult run(Xoshiro256& rng) const;

  struct Injection {
    int phase = 0;
    std::size_t loc = 0;
    ErrorClass cls;
  };
  // Noise-free run with the listed faults applied on the first execution of
  // their phase (a rejected block retries clean). Enumerates every twirl-coin
  // pattern that can matter and returns the first malignant branch if one
  // exists, else the all-zero-coins branch.
  TrialResult run_injected(std::span<const Injection> faults) const;

  struct Site {
    int phase = 0;
    std::size_t loc = 0;
    LocKind kind = LocKind::Rest;
  };
  // Every location of every Circuit phase, in program order.
  const std::vector<Site>& sites() const { return sites_; }

 private:
  struct Interp;
  TrialResult run_one(Xoshiro256* rng, std::span<const Injection> faults,
                      uint64_t coin_bits, int* matter_coins) const;

  Program prog_;
  NoiseModel noise_;
  std::vector<Site> sites_;
  std::vector<std::vector<std::size_t>> register_index_;
  std::vector<uint8_t> phase_has_meas_;
};

// Runs n_trials sequential trials on the independent stream (seed, stream).
// Deterministic in (program, noise, seed, stream, n_trials); chunked runs
// merge stream results in index order to stay byte-identical under any
// scheduling.
RunStats run_trials(const Engine& engine, uint64_t seed, uint64_t stream,
                    uint64_t n_trials);

}  // namespace ftqc
