// Band-limited classical noise with a prescribed power spectrum: spectral-sum
// synthesis, pointwise evaluation, autocorrelation and periodogram checks.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qmon/rng.hpp"

namespace qmon {

enum class SpectrumShape { kOneOverF, kWhite };

// Target spectrum between angular-frequency cutoffs (units of Omega_R).
// The amplitude prefactor is absorbed by the RMS normalization.
struct NoiseSpec {
  SpectrumShape shape = SpectrumShape::kOneOverF;
  double amplitude = 1.0;
  double omega_min = 0.01;
  double omega_max = 10.0;
  int n_components = 200;
  double target_rms = 0.0;

  void validate() const;  // throws std::invalid_argument
};

struct NoiseComponent {
  double omega, weight, phase;
};

// xi(t) = scale * sum_i weight_i cos(omega_i t + phase_i).
// Immutable after synthesis; evaluation is pure.
struct NoiseTrajectory {
  std::vector<NoiseComponent> components;
  double scale = 0.0;
  double window = 0.0;  // duration over which the RMS was normalized

  double evaluate(double t) const;
};

// Frequencies on a linear grid across [omega_min, omega_max], weights
// sqrt(P(omega_i) d_omega), phases iid uniform on [0, 2pi). The realized
// trajectory is rescaled so its RMS over [0, window] (16384-point grid)
// equals target_rms; target_rms = 0 yields the identically-zero trajectory.
NoiseTrajectory synthesize(const NoiseSpec& spec, double window, RngStream& rng);

// Mean of xi(t) xi(t+lag) over t in [0, window-lag]; requires lag < window.
double autocorrelation(const NoiseTrajectory& traj, double lag, double window,
                       int samples);

struct SpectrumPoint {
  double omega, power;
};

// One-sided periodogram on the FFT grid omega_k = 2 pi k / window,
// k = 1..n/2, normalized so that sum(power) * d_omega equals the variance.
// The sample count is rounded up to a power of two; requires at least two
// samples per period of the fastest component.
std::vector<SpectrumPoint> empirical_spectrum(const NoiseTrajectory& traj,
                                              double window, int samples);

// Averages periodogram points into log-spaced bands between the cutoffs.
// Bands narrower than min_band_width (or holding fewer than two points) are
// merged forward; band centers are logarithmic means.
std::vector<SpectrumPoint> band_average(const std::vector<SpectrumPoint>& spectrum,
                                        double omega_lo, double omega_hi,
                                        int n_bands, double min_band_width = 0.0);

// Least-squares slope of log(power) vs log(omega); needs >= 2 positive bands.
double loglog_slope(const std::vector<SpectrumPoint>& bands);

// Text round-trip for exact replay (17 significant digits per field).
std::string trajectory_to_table(const NoiseTrajectory& traj);
NoiseTrajectory trajectory_from_table(std::string_view text);

}  // namespace qmon
