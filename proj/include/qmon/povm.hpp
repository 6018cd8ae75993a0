// Unsharp two-outcome measurement: Kraus pair construction, outcome
// probabilities, back-action, sampling, and the strength calculus.
#pragma once

#include "qmon/qubit.hpp"
#include "qmon/rng.hpp"

namespace qmon {

// Measurement of r.sigma with sharpness delta_p = 1 - 2 p0, repeated with
// period tau (time in 1/Omega_R units). Directions are normalized on
// ingestion; the raw vector is retained for output metadata.
struct MeasurementConfig {
  Vec3 direction{0.0, 0.0, 1.0};
  Vec3 raw_direction{0.0, 0.0, 1.0};
  double delta_p = 0.2;
  double period = 0.1 * kTwoPi;

  double p0() const { return 0.5 * (1.0 - delta_p); }
  bool direction_was_normalized() const;
};

// Validates delta_p in [0,1] and period > 0, normalizes the direction.
MeasurementConfig make_measurement_config(const Vec3& direction, double delta_p,
                                          double period);

struct KrausPair {
  Operator2 m0, m1;
};

// M0 = sqrt(p0) P+ + sqrt(1-p0) P-,  M1 = sqrt(1-p0) P+ + sqrt(p0) P-,
// with P± = (1 ± r.sigma)/2. Satisfies M0†M0 + M1†M1 = 1.
KrausPair kraus_from_p0(const Vec3& unit_dir, double p0);
KrausPair build_kraus(const MeasurementConfig& config);

// p(n|psi) = <psi| Mn†Mn |psi>, n in {0, 1}.
double outcome_probability(const PureState& state, const KrausPair& kraus, int outcome);

// Mn|psi> / sqrt(p(n|psi)); throws std::domain_error on a zero-probability
// outcome (an impossible branch of the measurement record).
PureState apply_measurement(const PureState& state, const KrausPair& kraus, int outcome);

// Draws one uniform variate and compares against p(0|psi).
int sample_outcome(const PureState& state, const KrausPair& kraus, RngStream& rng);

// gamma_m = delta_p^2 / (2 tau), the collapse rate of the sequential
// measurement in the absence of other dynamics.
double measurement_strength(const MeasurementConfig& config);

}  // namespace qmon
