#include "qmon/povm.hpp"

#include <cmath>
#include <stdexcept>

namespace qmon {

bool MeasurementConfig::direction_was_normalized() const {
  return std::abs(raw_direction.norm() - 1.0) > 1e-9;
}

MeasurementConfig make_measurement_config(const Vec3& direction, double delta_p,
                                          double period) {
  if (!(delta_p >= 0.0 && delta_p <= 1.0)) {
    throw std::invalid_argument("measurement: delta_p must lie in [0, 1]");
  }
  if (!(period > 0.0)) {
    throw std::invalid_argument("measurement: period must be positive");
  }
  MeasurementConfig config;
  config.raw_direction = direction;
  config.direction = direction.normalized();
  config.delta_p = delta_p;
  config.period = period;
  return config;
}

KrausPair kraus_from_p0(const Vec3& unit_dir, double p0) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw std::invalid_argument("kraus_from_p0: p0 must lie in [0, 1]");
  }
  const Operator2 r_sigma = pauli_along(unit_dir);
  const Operator2 p_plus = 0.5 * (Operator2::identity() + r_sigma);
  const Operator2 p_minus = 0.5 * (Operator2::identity() + (-1.0) * r_sigma);
  const double w0 = std::sqrt(p0);
  const double w1 = std::sqrt(1.0 - p0);
  return {w0 * p_plus + w1 * p_minus, w1 * p_plus + w0 * p_minus};
}

KrausPair build_kraus(const MeasurementConfig& config) {
  return kraus_from_p0(config.direction, config.p0());
}

namespace {

const Operator2& pick(const KrausPair& kraus, int outcome) {
  if (outcome == 0) return kraus.m0;
  if (outcome == 1) return kraus.m1;
  throw std::invalid_argument("measurement outcome must be 0 or 1");
}

}  // namespace

double outcome_probability(const PureState& state, const KrausPair& kraus, int outcome) {
  if (std::abs(std::sqrt(state.norm2()) - 1.0) > 1e-6) {
    throw std::invalid_argument("outcome_probability: state is not normalized");
  }
  return pick(kraus, outcome).apply(state).norm2();
}

PureState apply_measurement(const PureState& state, const KrausPair& kraus, int outcome) {
  const PureState mapped = pick(kraus, outcome).apply(state);
  const double p = mapped.norm2();
  if (p < 1e-280) {
    throw std::domain_error("apply_measurement: outcome has zero probability");
  }
  const double inv = 1.0 / std::sqrt(p);
  return {mapped.a * inv, mapped.b * inv};
}

int sample_outcome(const PureState& state, const KrausPair& kraus, RngStream& rng) {
  return rng.uniform01() < outcome_probability(state, kraus, 0) ? 0 : 1;
}

double measurement_strength(const MeasurementConfig& config) {
  return config.delta_p * config.delta_p / (2.0 * config.period);
}

}  // namespace qmon
