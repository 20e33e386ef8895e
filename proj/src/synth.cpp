#include "laas/synth.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numeric>

#include "fft.hpp"
#include "laas/rng.hpp"

namespace laas {

std::string_view noise_name(NoiseKind kind) {
  return kind == NoiseKind::White ? "white" : "pink";
}

std::optional<NoiseKind> parse_noise(std::string_view name) {
  if (name == "white") return NoiseKind::White;
  if (name == "pink" || name == "1f" || name == "1/f" || name == "one-over-f") {
    return NoiseKind::OneOverF;
  }
  return std::nullopt;
}

namespace {

void standardize(std::vector<double>& values) {
  const std::size_t n = values.size();
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                      static_cast<double>(n);
  for (double& v : values) v -= mean;
  double ss = 0.0;
  for (double v : values) ss += v * v;
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (!(sd > 0.0)) {
    throw Error("degenerate noise draw: zero variance");
  }
  for (double& v : values) v /= sd;
}

std::vector<double> white_draws(std::size_t n, std::uint64_t seed) {
  GaussianSource gauss(seed);
  std::vector<double> values(n);
  for (double& v : values) v = gauss.next();
  return values;
}

std::vector<double> one_over_f_draws(std::size_t n, std::uint64_t seed) {
  const std::size_t n2 = std::bit_ceil(n);
  const std::vector<double> white = white_draws(n2, seed);

  std::vector<std::complex<double>> spectrum(n2);
  for (std::size_t i = 0; i < n2; ++i) spectrum[i] = white[i];
  detail::fft_radix2(spectrum, false);

  // Amplitude shaping: |f|^(-1/2) gives 1/f power. The scaling depends only
  // on |f|, so Hermitian symmetry survives and the inverse transform stays
  // real up to rounding.
  spectrum[0] = 0.0;
  for (std::size_t k = 1; k < n2; ++k) {
    const std::size_t folded = std::min(k, n2 - k);
    const double f = static_cast<double>(folded) / static_cast<double>(n2);
    spectrum[k] *= std::pow(f, -0.5);
  }
  detail::fft_radix2(spectrum, true);

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = spectrum[i].real();
  return values;
}

}  // namespace

TimeSeries gen_noise(const NoiseSpec& spec) {
  if (spec.n < 2) {
    throw InvalidParameter("noise length must be >= 2, got " + std::to_string(spec.n));
  }
  std::vector<double> values = spec.kind == NoiseKind::White
                                   ? white_draws(spec.n, spec.seed)
                                   : one_over_f_draws(spec.n, spec.seed);
  standardize(values);
  const std::string id =
      std::string(noise_name(spec.kind)) + "_s" + std::to_string(spec.seed);
  return TimeSeries(id, std::move(values));
}

double psd_slope(const TimeSeries& x) {
  const std::size_t n = x.size();
  if (n < 64) {
    throw TooShort("PSD slope needs at least 64 observations, got " + std::to_string(n));
  }
  const std::size_t np = std::bit_floor(n);

  std::vector<std::complex<double>> spectrum(np);
  for (std::size_t i = 0; i < np; ++i) spectrum[i] = x.values[i];
  detail::fft_radix2(spectrum, false);

  const std::size_t bins = np / 2;
  const std::size_t high_cut = bins / 10;
  // Keep k in [3, bins - high_cut]: the lowest two positive-frequency bins
  // and the top 10% are excluded from the fit.
  double sum_lf = 0.0;
  double sum_lp = 0.0;
  double sum_lflf = 0.0;
  double sum_lflp = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 3; k <= bins - high_cut; ++k) {
    const double power = std::norm(spectrum[k]) / static_cast<double>(np);
    if (!(power > 0.0)) continue;
    const double lf = std::log(static_cast<double>(k) / static_cast<double>(np));
    const double lp = std::log(power);
    sum_lf += lf;
    sum_lp += lp;
    sum_lflf += lf * lf;
    sum_lflp += lf * lp;
    ++count;
  }
  if (count < 2) {
    throw TooShort("PSD slope fit has fewer than 2 usable bins");
  }
  const double denom = static_cast<double>(count) * sum_lflf - sum_lf * sum_lf;
  return (static_cast<double>(count) * sum_lflp - sum_lf * sum_lp) / denom;
}

}  // namespace laas
