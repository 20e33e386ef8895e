#include "laas/series.hpp"

#include <cmath>
#include <map>

namespace laas {

TimeSeries::TimeSeries(std::string id_, std::vector<double> values_)
    : id(std::move(id_)), values(std::move(values_)) {
  if (values.empty()) {
    throw InvalidInput("time series '" + id + "' is empty");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InvalidInput("time series '" + id + "' has a non-finite value at position " +
                         std::to_string(i + 1));
    }
  }
}

ScaleFactor::ScaleFactor(int tau) : tau_(tau) {
  if (tau < 1) {
    throw InvalidParameter("scale factor must be >= 1, got " + std::to_string(tau));
  }
}

std::string_view method_name(const AttentionKind& kind) {
  switch (kind.selector) {
    case AttentionSelector::All:
      return "ms";
    case AttentionSelector::Peak:
      return "pas";
    case AttentionSelector::Occurrence:
      return "oas";
    case AttentionSelector::Median:
      return "mas";
  }
  return "ms";
}

std::optional<AttentionSelector> parse_method(std::string_view name) {
  if (name == "ms" || name == "all") return AttentionSelector::All;
  if (name == "pas" || name == "peak") return AttentionSelector::Peak;
  // "fas" is the same selector as "oas"; both names are in circulation.
  if (name == "oas" || name == "fas" || name == "occurrence") {
    return AttentionSelector::Occurrence;
  }
  if (name == "mas" || name == "median") return AttentionSelector::Median;
  return std::nullopt;
}

namespace {

void check_precision(const AttentionKind& kind) {
  if (kind.precision && (*kind.precision < 0 || *kind.precision > 12)) {
    throw InvalidParameter("quantization precision must be in [0, 12], got " +
                           std::to_string(*kind.precision));
  }
}

double quantize(double v, const std::optional<int>& precision) {
  if (!precision) return v;
  const double scale = std::pow(10.0, *precision);
  return std::round(v * scale) / scale;
}

// Mean of values[begin .. begin+len). Shared by both coarse-graining paths so
// the All selector reproduces plain multiscale exactly.
double block_mean(const std::vector<double>& values, std::size_t begin, std::size_t len) {
  double sum = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    sum += values[begin + k];
  }
  return sum / static_cast<double>(len);
}

std::vector<std::size_t> positions_with_value(const std::vector<double>& values, double target,
                                              const std::optional<int>& precision) {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (quantize(values[i], precision) == target) {
      indices.push_back(i + 1);
    }
  }
  return indices;
}

}  // namespace

AttentionIndexSet select_attention(const TimeSeries& x, const AttentionKind& kind) {
  check_precision(kind);
  const std::vector<double>& v = x.values;
  const std::size_t n = v.size();
  if (n == 0) {
    throw InvalidInput("cannot select attention observations of an empty series");
  }

  AttentionIndexSet out;
  switch (kind.selector) {
    case AttentionSelector::All: {
      out.indices.resize(n);
      for (std::size_t i = 0; i < n; ++i) out.indices[i] = i + 1;
      return out;
    }

    case AttentionSelector::Peak: {
      if (n < 3) {
        throw TooShort("peak selection needs at least 3 observations, got " + std::to_string(n));
      }
      for (std::size_t k = 1; k + 1 < n; ++k) {
        if ((v[k] - v[k - 1]) * (v[k] - v[k + 1]) > 0.0) {
          out.indices.push_back(k + 1);
        }
      }
      if (out.indices.empty()) {
        throw EmptySelection("series '" + x.id + "' has no strict local extrema");
      }
      return out;
    }

    case AttentionSelector::Occurrence: {
      std::map<double, std::size_t> counts;
      for (double value : v) {
        ++counts[quantize(value, kind.precision)];
      }
      // Ascending iteration plus a strict comparison breaks count ties
      // towards the smallest value.
      double best_value = counts.begin()->first;
      std::size_t best_count = counts.begin()->second;
      for (const auto& [value, count] : counts) {
        if (count > best_count) {
          best_value = value;
          best_count = count;
        }
      }
      out.indices = positions_with_value(v, best_value, kind.precision);
      return out;
    }

    case AttentionSelector::Median: {
      std::map<double, std::size_t> counts;
      for (double value : v) {
        ++counts[quantize(value, kind.precision)];
      }
      // Median of the distinct values; the lower middle for an even count so
      // the selected value actually occurs in the series.
      const std::size_t distinct = counts.size();
      std::size_t target = (distinct - 1) / 2;
      auto it = counts.begin();
      std::advance(it, static_cast<std::ptrdiff_t>(target));
      out.indices = positions_with_value(v, it->first, kind.precision);
      return out;
    }
  }
  throw InvalidParameter("unknown attention selector");
}

CoarseSeries coarse_grain_ms(const TimeSeries& x, ScaleFactor tau) {
  const std::size_t n = x.size();
  const auto t = static_cast<std::size_t>(tau.value());
  const std::size_t n_out = n / t;
  if (n_out == 0) {
    throw EmptyOutput("scale factor " + std::to_string(t) + " exceeds series length " +
                      std::to_string(n));
  }

  CoarseSeries out;
  out.source_len = n;
  out.tau = tau.value();
  out.kind = AttentionKind::all();
  out.values.reserve(n_out);
  out.block_sizes.assign(n_out, t);
  for (std::size_t i = 0; i < n_out; ++i) {
    out.values.push_back(block_mean(x.values, i * t, t));
  }
  return out;
}

CoarseSeries coarse_grain_attention(const TimeSeries& x, const AttentionKind& kind,
                                    ScaleFactor tau) {
  const AttentionIndexSet selection = select_attention(x, kind);
  const std::size_t m = selection.indices.size();
  const auto t = static_cast<std::size_t>(tau.value());
  const std::size_t n_out = m / t;
  if (n_out == 0) {
    throw InsufficientAttention("series '" + x.id + "' has " + std::to_string(m) +
                                " attention observations, fewer than scale factor " +
                                std::to_string(t));
  }

  CoarseSeries out;
  out.source_len = x.size();
  out.tau = tau.value();
  out.kind = kind;
  out.values.reserve(n_out);
  out.block_sizes.reserve(n_out);

  std::size_t prev = 0;  // I_0 = 0: the first segment starts at x_1
  for (std::size_t i = 1; i <= n_out; ++i) {
    const std::size_t bound = selection.indices[i * t - 1];
    const std::size_t len = bound - prev;
    out.values.push_back(block_mean(x.values, prev, len));
    out.block_sizes.push_back(len);
    prev = bound;
  }
  return out;
}

}  // namespace laas
