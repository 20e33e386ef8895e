#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "laas/series.hpp"

namespace laas {

enum class NoiseKind { White, OneOverF };

// Canonical noise token: "white" or "pink".
std::string_view noise_name(NoiseKind kind);

// Accepts "white", "pink", "1f", "1/f" and "one-over-f".
std::optional<NoiseKind> parse_noise(std::string_view name);

struct NoiseSpec {
  NoiseKind kind = NoiseKind::White;
  std::size_t n = 8192;  // >= 2
  std::uint64_t seed = 0;
};

// Deterministic Gaussian noise, standardized to sample mean 0 and sample
// variance 1 (n-1 denominator). White noise is i.i.d. draws from the
// generators in rng.hpp. 1/f noise is spectral synthesis: white noise of the
// next power-of-two length, Fourier transformed, each amplitude scaled by
// f^(-1/2) with the DC bin zeroed, transformed back and truncated to n. The
// same spec always yields a bit-identical series.
TimeSeries gen_noise(const NoiseSpec& spec);

// Least-squares slope of log power against log frequency over the
// periodogram's positive frequencies, excluding the lowest 2 bins and the
// highest 10%. The periodogram is taken over the longest power-of-two prefix
// of the series. Meaningful for broadband signals only; a pure sinusoid is
// dominated by a single bin.
double psd_slope(const TimeSeries& x);

}  // namespace laas
