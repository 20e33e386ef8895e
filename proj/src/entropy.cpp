#include "laas/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>

namespace laas {

namespace {

void require_non_empty(std::span<const double> values) {
  if (values.empty()) {
    throw InvalidInput("entropy of an empty series is undefined");
  }
}

double entropy_nats(const std::vector<double>& probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

double sample_sd(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                      static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) {
    ss += (v - mean) * (v - mean);
  }
  return std::sqrt(ss / static_cast<double>(n - 1));
}

bool chebyshev_within(std::span<const double> v, std::size_t i, std::size_t j, int len,
                      double tol) {
  for (int k = 0; k < len; ++k) {
    if (std::abs(v[i + static_cast<std::size_t>(k)] - v[j + static_cast<std::size_t>(k)]) > tol) {
      return false;
    }
  }
  return true;
}

double resolve_tolerance(std::span<const double> values, double r, bool relative_r) {
  if (!(r > 0.0)) {
    throw InvalidParameter("tolerance r must be > 0");
  }
  return relative_r ? r * sample_sd(values) : r;
}

// Lehmer code of the ordinal pattern of one embedded window; a bijection from
// patterns to [0, order!).
std::uint64_t ordinal_pattern(std::span<const double> values, std::size_t start, int order,
                              int delay) {
  std::uint64_t code = 0;
  for (int i = 0; i < order; ++i) {
    const double vi = values[start + static_cast<std::size_t>(i * delay)];
    int rank = 0;
    for (int j = i + 1; j < order; ++j) {
      const double vj = values[start + static_cast<std::size_t>(j * delay)];
      // Strict inequality: an equal later value ranks higher than vi, which
      // is exactly the earlier-index-ranks-lower tie rule.
      if (vj < vi) ++rank;
    }
    code = code * static_cast<std::uint64_t>(order - i) + static_cast<std::uint64_t>(rank);
  }
  return code;
}

}  // namespace

BinningScheme BinningScheme::equal_width(int k) {
  if (k < 1) {
    throw InvalidParameter("equal-width binning needs at least 1 bin, got " + std::to_string(k));
  }
  return {Mode::EqualWidth, k};
}

BinningScheme default_binning(std::span<const double> values) {
  require_non_empty(values);
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t distinct =
      static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  if (distinct <= 100) {
    return BinningScheme::discrete();
  }
  return BinningScheme::equal_width(static_cast<int>(values.size()));
}

std::vector<double> histogram(std::span<const double> values, const BinningScheme& scheme) {
  require_non_empty(values);
  if (scheme.mode == BinningScheme::Mode::Discrete) {
    std::map<double, std::size_t> counts;
    for (double v : values) ++counts[v];
    std::vector<double> probabilities;
    probabilities.reserve(counts.size());
    const double n = static_cast<double>(values.size());
    for (const auto& [value, count] : counts) {
      probabilities.push_back(static_cast<double>(count) / n);
    }
    return probabilities;
  }
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  return histogram_in_range(values, scheme.bins, *lo_it, *hi_it);
}

std::vector<double> histogram_in_range(std::span<const double> values, int bins, double lo,
                                       double hi) {
  require_non_empty(values);
  if (bins < 1) {
    throw InvalidParameter("histogram needs at least 1 bin");
  }
  if (!(lo <= hi)) {
    throw InvalidParameter("histogram range is inverted");
  }
  if (lo == hi) {
    return {1.0};  // degenerate range collapses to a single bin
  }

  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (double v : values) {
    auto bin = static_cast<long long>(std::floor((v - lo) / width));
    bin = std::clamp(bin, 0ll, static_cast<long long>(bins - 1));
    ++counts[static_cast<std::size_t>(bin)];
  }

  std::vector<double> probabilities(counts.size());
  const double n = static_cast<double>(values.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    probabilities[i] = static_cast<double>(counts[i]) / n;
  }
  return probabilities;
}

double shannon_entropy(std::span<const double> values, const BinningScheme& scheme) {
  return entropy_nats(histogram(values, scheme));
}

double renyi_entropy(std::span<const double> values, double alpha, const BinningScheme& scheme) {
  if (!(alpha > 0.0) || alpha == 1.0) {
    throw InvalidParameter("Renyi order must be > 0 and != 1");
  }
  const std::vector<double> p = histogram(values, scheme);
  double sum = 0.0;
  for (double pi : p) {
    if (pi > 0.0) sum += std::pow(pi, alpha);
  }
  return std::log(sum) / (1.0 - alpha);
}

double tsallis_entropy(std::span<const double> values, double q, const BinningScheme& scheme) {
  if (q == 1.0) {
    throw InvalidParameter("Tsallis order must be != 1");
  }
  const std::vector<double> p = histogram(values, scheme);
  double sum = 0.0;
  for (double pi : p) {
    if (pi > 0.0) sum += std::pow(pi, q);
  }
  return (1.0 - sum) / (q - 1.0);
}

double permutation_entropy(std::span<const double> values, int order, int delay) {
  require_non_empty(values);
  if (order < 2 || order > 20) {
    throw InvalidParameter("permutation order must be in [2, 20], got " + std::to_string(order));
  }
  if (delay < 1) {
    throw InvalidParameter("permutation delay must be >= 1");
  }
  const std::size_t n = values.size();
  const std::size_t span_len = static_cast<std::size_t>(order - 1) *
                                   static_cast<std::size_t>(delay) +
                               1;
  if (n < span_len) {
    throw TooShort("permutation entropy of order " + std::to_string(order) + ", delay " +
                   std::to_string(delay) + " needs " + std::to_string(span_len) +
                   " observations, got " + std::to_string(n));
  }

  const std::size_t windows = n - span_len + 1;
  std::map<std::uint64_t, std::size_t> counts;
  for (std::size_t start = 0; start < windows; ++start) {
    ++counts[ordinal_pattern(values, start, order, delay)];
  }

  std::vector<double> probabilities;
  probabilities.reserve(counts.size());
  for (const auto& [pattern, count] : counts) {
    probabilities.push_back(static_cast<double>(count) / static_cast<double>(windows));
  }
  return entropy_nats(probabilities);
}

std::optional<double> sample_entropy(std::span<const double> values, int embed, double r,
                                     bool relative_r) {
  require_non_empty(values);
  if (embed < 1) {
    throw InvalidParameter("sample entropy template length must be >= 1");
  }
  const std::size_t n = values.size();
  if (n <= static_cast<std::size_t>(embed) + 1) {
    throw TooShort("sample entropy with m = " + std::to_string(embed) + " needs more than " +
                   std::to_string(embed + 1) + " observations, got " + std::to_string(n));
  }
  const double tol = resolve_tolerance(values, r, relative_r);

  // Both template lengths range over the first N - m start positions.
  const std::size_t templates = n - static_cast<std::size_t>(embed);
  std::uint64_t matches_m = 0;
  std::uint64_t matches_m1 = 0;
  for (std::size_t i = 0; i < templates; ++i) {
    for (std::size_t j = i + 1; j < templates; ++j) {
      if (!chebyshev_within(values, i, j, embed, tol)) continue;
      ++matches_m;
      const std::size_t k = static_cast<std::size_t>(embed);
      if (std::abs(values[i + k] - values[j + k]) <= tol) {
        ++matches_m1;
      }
    }
  }

  if (matches_m == 0 || matches_m1 == 0) {
    return std::nullopt;
  }
  return -std::log(static_cast<double>(matches_m1) / static_cast<double>(matches_m));
}

double approximate_entropy(std::span<const double> values, int embed, double r, bool relative_r) {
  require_non_empty(values);
  if (embed < 1) {
    throw InvalidParameter("approximate entropy template length must be >= 1");
  }
  const std::size_t n = values.size();
  if (n < static_cast<std::size_t>(embed) + 1) {
    throw TooShort("approximate entropy with m = " + std::to_string(embed) + " needs at least " +
                   std::to_string(embed + 1) + " observations, got " + std::to_string(n));
  }
  const double tol = resolve_tolerance(values, r, relative_r);

  const auto phi = [&](int m) {
    const std::size_t templates = n - static_cast<std::size_t>(m) + 1;
    double sum = 0.0;
    for (std::size_t i = 0; i < templates; ++i) {
      std::size_t within = 0;  // self-match included
      for (std::size_t j = 0; j < templates; ++j) {
        if (chebyshev_within(values, i, j, m, tol)) ++within;
      }
      sum += std::log(static_cast<double>(within) / static_cast<double>(templates));
    }
    return sum / static_cast<double>(templates);
  };

  return phi(embed) - phi(embed + 1);
}

std::string_view estimator_name(EntropySpec::Estimator estimator) {
  switch (estimator) {
    case EntropySpec::Estimator::Shannon:
      return "shannon";
    case EntropySpec::Estimator::Renyi:
      return "renyi";
    case EntropySpec::Estimator::Tsallis:
      return "tsallis";
    case EntropySpec::Estimator::Permutation:
      return "permutation";
    case EntropySpec::Estimator::Sample:
      return "sample";
    case EntropySpec::Estimator::Approximate:
      return "approximate";
  }
  return "shannon";
}

std::optional<EntropySpec::Estimator> parse_estimator(std::string_view name) {
  if (name == "shannon") return EntropySpec::Estimator::Shannon;
  if (name == "renyi") return EntropySpec::Estimator::Renyi;
  if (name == "tsallis") return EntropySpec::Estimator::Tsallis;
  if (name == "permutation" || name == "perm") return EntropySpec::Estimator::Permutation;
  if (name == "sample") return EntropySpec::Estimator::Sample;
  if (name == "approximate" || name == "approx") return EntropySpec::Estimator::Approximate;
  return std::nullopt;
}

std::optional<double> evaluate_entropy(std::span<const double> values, const EntropySpec& spec) {
  switch (spec.estimator) {
    case EntropySpec::Estimator::Shannon:
    case EntropySpec::Estimator::Renyi:
    case EntropySpec::Estimator::Tsallis: {
      const BinningScheme scheme = spec.binning ? *spec.binning : default_binning(values);
      if (spec.estimator == EntropySpec::Estimator::Shannon) {
        return shannon_entropy(values, scheme);
      }
      if (spec.estimator == EntropySpec::Estimator::Renyi) {
        return renyi_entropy(values, spec.alpha, scheme);
      }
      return tsallis_entropy(values, spec.q, scheme);
    }
    case EntropySpec::Estimator::Permutation:
      return permutation_entropy(values, spec.order, spec.delay);
    case EntropySpec::Estimator::Sample:
      return sample_entropy(values, spec.embed, spec.r, spec.relative_r);
    case EntropySpec::Estimator::Approximate:
      return approximate_entropy(values, spec.embed, spec.r, spec.relative_r);
  }
  throw InvalidParameter("unknown entropy estimator");
}

}  // namespace laas
