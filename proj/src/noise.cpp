#include "ftqc/noise.hpp"

#include <numeric>
#include <stdexcept>

namespace ftqc {

double KindNoise::total() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

ErrorClass KindNoise::sample(double u) const {
  double cum = 0.0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    cum += probs[i];
    if (u < cum) return classes[i];
  }
  return ErrorClass{};  // identity: no fault
}

double KindNoise::prob_of(const ErrorClass& c) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == c) return probs[i];
  return 0.0;
}

namespace {

KindNoise single_qubit_table(double p) {
  KindNoise t;
  for (const auto& c : ErrorClass::nontrivial_single()) {
    t.classes.push_back(c);
    t.probs.push_back(p / 4.0);
  }
  return t;
}

KindNoise pair_table(double p) {
  KindNoise t;
  for (const auto& c : ErrorClass::nontrivial_pair()) {
    t.classes.push_back(c);
    t.probs.push_back(p / 16.0);
  }
  return t;
}

KindNoise one_class_table(Pauli op, double prob) {
  KindNoise t;
  t.classes.push_back(ErrorClass::single(op));
  t.probs.push_back(prob);
  return t;
}

}  // namespace

NoiseModel NoiseModel::depolarizing(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("rate out of range");
  NoiseModel m;
  auto set = [&m](LocKind k, KindNoise t) {
    m.kinds_[static_cast<std::size_t>(k)] = std::move(t);
  };
  set(LocKind::H, single_qubit_table(p));
  set(LocKind::T, single_qubit_table(p));
  set(LocKind::Tdg, single_qubit_table(p));
  set(LocKind::Rest, single_qubit_table(p));
  set(LocKind::Cnot, pair_table(p));
  set(LocKind::PrepZ, one_class_table(Pauli::X, p / 4.0));
  set(LocKind::PrepX, one_class_table(Pauli::Z, p / 4.0));
  set(LocKind::MeasZ, one_class_table(Pauli::X, p / 4.0));
  set(LocKind::MeasX, one_class_table(Pauli::Z, p / 4.0));
  return m;
}

NoiseModel NoiseModel::from_rates(
    const std::vector<std::pair<LocKind, KindNoise>>& tables) {
  NoiseModel m;
  for (const auto& [kind, table] : tables) {
    for (double q : table.probs)
      if (q < 0.0) throw std::invalid_argument("negative class rate");
    m.kinds_[static_cast<std::size_t>(kind)] = table;
  }
  return m;
}

bool NoiseModel::in_model() const {
  for (const auto& t : kinds_)
    if (t.total() > 1.0) return false;
  return true;
}

}  // namespace ftqc
