#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "laas/errors.hpp"

namespace laas {

// Discretization policy for the distribution-based estimators (Shannon,
// Renyi, Tsallis). Discrete counts exact values; EqualWidth spreads `bins`
// equal-width bins over the series' own [min, max] with a right-closed last
// bin. A degenerate range (min == max) collapses to a single bin.
struct BinningScheme {
  enum class Mode { Discrete, EqualWidth };

  Mode mode = Mode::Discrete;
  int bins = 1;

  static BinningScheme discrete() { return {Mode::Discrete, 1}; }
  static BinningScheme equal_width(int k);
};

// Default policy: Discrete while the series has at most 100 distinct values
// (fixed-precision physiologic files), otherwise EqualWidth with one bin per
// observation (k = N). The fine grid keeps the estimator sensitive to value
// clustering, which coarse density-style bin counts average away.
BinningScheme default_binning(std::span<const double> values);

// Probabilities of the occupied bins in a deterministic order (ascending
// value for Discrete, bin order for EqualWidth). Non-negative, sums to 1.
std::vector<double> histogram(std::span<const double> values, const BinningScheme& scheme);

// EqualWidth histogram over an explicit range; used by the shared-edges
// complexity-loss mode. Values outside [lo, hi] are clamped into the end bins.
std::vector<double> histogram_in_range(std::span<const double> values, int bins, double lo,
                                       double hi);

// All entropies are in nats.
double shannon_entropy(std::span<const double> values, const BinningScheme& scheme);
double renyi_entropy(std::span<const double> values, double alpha, const BinningScheme& scheme);
double tsallis_entropy(std::span<const double> values, double q, const BinningScheme& scheme);

// Shannon entropy of the ordinal-pattern distribution of embedded windows of
// `order` values spaced `delay` apart. Equal values rank by position, earlier
// index lower.
double permutation_entropy(std::span<const double> values, int order, int delay);

// Sample entropy -ln(A/B) with self-matches excluded; templates of length
// `embed` and embed+1 are both taken from the first N - embed positions so
// every m-match has an (m+1)-extension. Returns nullopt when A or B is zero
// (the value is undefined, not a number). With relative_r the tolerance is
// r times the sample standard deviation.
std::optional<double> sample_entropy(std::span<const double> values, int embed, double r,
                                     bool relative_r = true);

// Approximate entropy Phi^m(r) - Phi^{m+1}(r) with self-matches included.
double approximate_entropy(std::span<const double> values, int embed, double r,
                           bool relative_r = true);

struct EntropySpec {
  enum class Estimator { Shannon, Renyi, Tsallis, Permutation, Sample, Approximate };

  Estimator estimator = Estimator::Shannon;

  double alpha = 2.0;  // Renyi, alpha > 0 and != 1
  double q = 2.0;      // Tsallis, q != 1
  int order = 3;       // Permutation embedding order, >= 2
  int delay = 1;       // Permutation delay, >= 1
  int embed = 2;       // Sample/Approximate template length, >= 1
  double r = 0.15;     // Sample/Approximate tolerance, > 0
  bool relative_r = true;

  // nullopt selects default_binning per series.
  std::optional<BinningScheme> binning;
};

std::string_view estimator_name(EntropySpec::Estimator estimator);
std::optional<EntropySpec::Estimator> parse_estimator(std::string_view name);

// Dispatches to the configured estimator. nullopt only for an undefined
// sample entropy; parameter errors throw InvalidParameter, series too short
// for the embedding throws TooShort.
std::optional<double> evaluate_entropy(std::span<const double> values, const EntropySpec& spec);

}  // namespace laas
