#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ftqc/circuit.hpp"
#include "ftqc/pauli.hpp"

namespace ftqc {

// Error-class distribution at one location kind. A single uniform draw walks
// the cumulative thresholds in the fixed class order, so distributions at
// nested rates are coupled monotonically: a draw that faults at rate p also
// faults at any larger rate. The residual mass 1 - total() is "no fault".
struct KindNoise {
  std::vector<ErrorClass> classes;
  std::vector<double> probs;

  double total() const;
  // Identity class when u falls in the residual mass.
  ErrorClass sample(double u) const;
  double prob_of(const ErrorClass& c) const;
};

// Per-location-kind noise tables.
//
// depolarizing(p) is the physical model:
//   - single-qubit gates and rests: X, Y, Z each with probability p/4
//   - cnot: each of the 15 nontrivial two-qubit Paulis with probability p/16
//   - prep_z: X with probability p/4; prep_x: Z with probability p/4
//   - meas_z / meas_x: recorded-outcome flip with probability p/4, stored as
//     the class that flips that readout (X for meas_z, Z for meas_x)
//
// Effective models for simulating level l >= 2 carry one independently
// estimated probability per (kind, class); build them with from_rates.
class NoiseModel {
 public:
  NoiseModel() = default;

  static NoiseModel depolarizing(double p);
  static NoiseModel from_rates(
      const std::vector<std::pair<LocKind, KindNoise>>& tables);

  const KindNoise& at(LocKind kind) const {
    return kinds_[static_cast<std::size_t>(kind)];
  }
  // True when every per-kind class sum is a valid probability (<= 1). A model
  // that fails this is outside its domain and must not be sampled.
  bool in_model() const;

 private:
  std::array<KindNoise, 9> kinds_;
};

}  // namespace ftqc
