#include "qmon/noise.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qmon/fft.hpp"

namespace qmon {

namespace {

constexpr int kNormalizationSamples = 16384;

double spectral_density(const NoiseSpec& spec, double omega) {
  switch (spec.shape) {
    case SpectrumShape::kOneOverF:
      return spec.amplitude / omega;
    case SpectrumShape::kWhite:
      return spec.amplitude;
  }
  throw std::logic_error("unknown spectrum shape");
}

double unscaled_sum(const std::vector<NoiseComponent>& components, double t) {
  double value = 0.0;
  for (const NoiseComponent& c : components) {
    value += c.weight * std::cos(c.omega * t + c.phase);
  }
  return value;
}

}  // namespace

void NoiseSpec::validate() const {
  if (!(omega_min > 0.0) || !(omega_max > omega_min)) {
    throw std::invalid_argument("noise: cutoffs must satisfy 0 < omega_min < omega_max");
  }
  if (n_components < 1) {
    throw std::invalid_argument("noise: n_components must be >= 1");
  }
  if (!(target_rms >= 0.0)) {
    throw std::invalid_argument("noise: target_rms must be >= 0");
  }
  if (!(amplitude > 0.0)) {
    throw std::invalid_argument("noise: amplitude must be positive");
  }
}

double NoiseTrajectory::evaluate(double t) const {
  if (scale == 0.0) return 0.0;
  return scale * unscaled_sum(components, t);
}

NoiseTrajectory synthesize(const NoiseSpec& spec, double window, RngStream& rng) {
  spec.validate();
  if (!(window > 0.0)) {
    throw std::invalid_argument("synthesize: window must be positive");
  }

  NoiseTrajectory traj;
  traj.window = window;
  traj.components.reserve(static_cast<std::size_t>(spec.n_components));

  const int n = spec.n_components;
  const double span = spec.omega_max - spec.omega_min;
  const double d_omega = n > 1 ? span / (n - 1) : span;
  for (int i = 0; i < n; ++i) {
    const double omega =
        n > 1 ? spec.omega_min + i * d_omega : 0.5 * (spec.omega_min + spec.omega_max);
    const double weight = std::sqrt(spectral_density(spec, omega) * d_omega);
    const double phase = rng.uniform(0.0, kTwoPi);
    traj.components.push_back({omega, weight, phase});
  }

  if (spec.target_rms == 0.0) {
    traj.scale = 0.0;
    return traj;
  }

  // Per-realization normalization over the actual window.
  double sum_sq = 0.0;
  const double dt = window / kNormalizationSamples;
  for (int j = 0; j < kNormalizationSamples; ++j) {
    const double v = unscaled_sum(traj.components, (j + 0.5) * dt);
    sum_sq += v * v;
  }
  const double rms = std::sqrt(sum_sq / kNormalizationSamples);
  if (rms == 0.0) {
    throw std::domain_error("synthesize: degenerate zero-variance realization");
  }
  traj.scale = spec.target_rms / rms;
  return traj;
}

double autocorrelation(const NoiseTrajectory& traj, double lag, double window,
                       int samples) {
  if (!(lag >= 0.0) || !(lag < window)) {
    throw std::invalid_argument("autocorrelation: need 0 <= lag < window");
  }
  if (samples < 1) {
    throw std::invalid_argument("autocorrelation: need at least one sample");
  }
  const double dt = (window - lag) / samples;
  double acc = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double t = (j + 0.5) * dt;
    acc += traj.evaluate(t) * traj.evaluate(t + lag);
  }
  return acc / samples;
}

std::vector<SpectrumPoint> empirical_spectrum(const NoiseTrajectory& traj,
                                              double window, int samples) {
  if (!(window > 0.0)) {
    throw std::invalid_argument("empirical_spectrum: window must be positive");
  }
  double omega_top = 0.0;
  for (const NoiseComponent& c : traj.components) omega_top = std::max(omega_top, c.omega);
  if (omega_top > 0.0 && samples < window * omega_top / std::numbers::pi) {
    throw std::invalid_argument(
        "empirical_spectrum: fewer than two samples per period of the fastest component");
  }
  if (samples < 2) {
    throw std::invalid_argument("empirical_spectrum: need at least two samples");
  }

  const std::size_t n = std::bit_ceil(static_cast<std::size_t>(samples));
  const double dt = window / static_cast<double>(n);

  std::vector<complexd> data(n);
  double mean = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double v = traj.evaluate(j * dt);
    data[j] = v;
    mean += v;
  }
  mean /= static_cast<double>(n);
  for (auto& v : data) v -= mean;  // keep DC leakage out of the low bins

  detail::fft_radix2(data);

  // Normalized so that sum_k power_k * (2 pi / window) = variance.
  std::vector<SpectrumPoint> spectrum;
  spectrum.reserve(n / 2);
  const double norm = dt / (std::numbers::pi * static_cast<double>(n));
  for (std::size_t k = 1; k <= n / 2; ++k) {
    spectrum.push_back({kTwoPi * static_cast<double>(k) / window,
                        norm * std::norm(data[k])});
  }
  return spectrum;
}

std::vector<SpectrumPoint> band_average(const std::vector<SpectrumPoint>& spectrum,
                                        double omega_lo, double omega_hi, int n_bands,
                                        double min_band_width) {
  if (!(omega_lo > 0.0) || !(omega_hi > omega_lo)) {
    throw std::invalid_argument("band_average: need 0 < omega_lo < omega_hi");
  }
  if (n_bands < 1) {
    throw std::invalid_argument("band_average: need at least one band");
  }

  const double ratio = std::pow(omega_hi / omega_lo, 1.0 / n_bands);
  std::vector<double> edges{omega_lo};
  while (edges.back() < omega_hi) {
    double next = std::max(edges.back() * ratio, edges.back() + min_band_width);
    if (next >= omega_hi * (1.0 - 1e-12)) next = omega_hi;
    edges.push_back(next);
  }

  std::vector<SpectrumPoint> bands;
  for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
    const double lo = edges[b];
    const double hi = edges[b + 1];
    double sum = 0.0;
    int count = 0;
    for (const SpectrumPoint& p : spectrum) {
      if (p.omega >= lo && (p.omega < hi || (b + 2 == edges.size() && p.omega <= hi))) {
        sum += p.power;
        ++count;
      }
    }
    if (count < 2) continue;  // below the resolution of the estimate
    const double center = (hi - lo) / std::log(hi / lo);
    bands.push_back({center, sum / count});
  }
  return bands;
}

double loglog_slope(const std::vector<SpectrumPoint>& bands) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (const SpectrumPoint& b : bands) {
    if (!(b.power > 0.0) || !(b.omega > 0.0)) continue;
    const double x = std::log(b.omega);
    const double y = std::log(b.power);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) {
    throw std::domain_error("loglog_slope: need at least two positive bands");
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) {
    throw std::domain_error("loglog_slope: degenerate abscissae");
  }
  return (n * sxy - sx * sy) / denom;
}

namespace {

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string trajectory_to_table(const NoiseTrajectory& traj) {
  std::ostringstream out;
  out << "# noise trajectory v1\n";
  out << "# scale = " << g17(traj.scale) << "\n";
  out << "# window = " << g17(traj.window) << "\n";
  out << "# columns: omega weight phase\n";
  for (const NoiseComponent& c : traj.components) {
    out << g17(c.omega) << " " << g17(c.weight) << " " << g17(c.phase) << "\n";
  }
  return out.str();
}

NoiseTrajectory trajectory_from_table(std::string_view text) {
  NoiseTrajectory traj;
  std::istringstream in{std::string(text)};
  std::string line;
  bool saw_scale = false, saw_window = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string key, eq;
      meta >> key >> eq;
      if (eq == "=") {
        double value = 0.0;
        meta >> value;
        if (key == "scale") {
          traj.scale = value;
          saw_scale = true;
        } else if (key == "window") {
          traj.window = value;
          saw_window = true;
        }
      }
      continue;
    }
    std::istringstream row(line);
    NoiseComponent c{};
    if (!(row >> c.omega >> c.weight >> c.phase)) {
      throw std::invalid_argument("trajectory_from_table: malformed row: " + line);
    }
    traj.components.push_back(c);
  }
  if (!saw_scale || !saw_window) {
    throw std::invalid_argument("trajectory_from_table: missing scale/window metadata");
  }
  return traj;
}

}  // namespace qmon
