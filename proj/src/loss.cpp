#include "laas/loss.hpp"

#include <algorithm>
#include <cmath>

namespace laas {

std::string_view analysis_name(AnalysisKind analysis) {
  switch (analysis) {
    case AnalysisKind::CoarseComplexity:
      return "complexity";
    case AnalysisKind::ComplexityLoss:
      return "closs";
    case AnalysisKind::SimilarityLoss:
      return "sloss";
  }
  return "complexity";
}

std::optional<AnalysisKind> parse_analysis(std::string_view name) {
  if (name == "complexity" || name == "coarse-complexity") return AnalysisKind::CoarseComplexity;
  if (name == "closs" || name == "complexity-loss") return AnalysisKind::ComplexityLoss;
  if (name == "sloss" || name == "similarity-loss") return AnalysisKind::SimilarityLoss;
  return std::nullopt;
}

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw InvalidInput("KS statistic needs two non-empty samples");
  }
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());

  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < sa.size() || j < sb.size()) {
    double v;
    if (i == sa.size()) {
      v = sb[j];
    } else if (j == sb.size()) {
      v = sa[i];
    } else {
      v = std::min(sa[i], sb[j]);
    }
    // Consume every sample equal to v from both sides so the ECDFs are
    // evaluated at (right-continuous) pooled distinct values.
    while (i < sa.size() && sa[i] == v) ++i;
    while (j < sb.size() && sb[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

namespace {

bool distribution_based(const EntropySpec& spec) {
  switch (spec.estimator) {
    case EntropySpec::Estimator::Shannon:
    case EntropySpec::Estimator::Renyi:
    case EntropySpec::Estimator::Tsallis:
      return true;
    default:
      return false;
  }
}

double entropy_from_probs(const std::vector<double>& p, const EntropySpec& spec) {
  switch (spec.estimator) {
    case EntropySpec::Estimator::Shannon: {
      double h = 0.0;
      for (double pi : p) {
        if (pi > 0.0) h -= pi * std::log(pi);
      }
      return h;
    }
    case EntropySpec::Estimator::Renyi: {
      if (!(spec.alpha > 0.0) || spec.alpha == 1.0) {
        throw InvalidParameter("Renyi order must be > 0 and != 1");
      }
      double sum = 0.0;
      for (double pi : p) {
        if (pi > 0.0) sum += std::pow(pi, spec.alpha);
      }
      return std::log(sum) / (1.0 - spec.alpha);
    }
    case EntropySpec::Estimator::Tsallis: {
      if (spec.q == 1.0) {
        throw InvalidParameter("Tsallis order must be != 1");
      }
      double sum = 0.0;
      for (double pi : p) {
        if (pi > 0.0) sum += std::pow(pi, spec.q);
      }
      return (1.0 - sum) / (spec.q - 1.0);
    }
    default:
      throw InvalidParameter("shared-edge binning applies to distribution estimators only");
  }
}

}  // namespace

std::optional<double> complexity_loss(const TimeSeries& x, const CoarseSeries& z,
                                      const EntropySpec& spec, BinEdges edges) {
  if (z.values.empty()) {
    throw InvalidInput("complexity loss needs a non-empty coarse-grained series");
  }

  if (distribution_based(spec)) {
    // The discretization resolves once, on the original series, so both
    // sides are quantified at the same resolution. Edges stay per-series by
    // default; the Shared flag switches to one grid over the combined range.
    const BinningScheme scheme = spec.binning ? *spec.binning : default_binning(x.values);
    if (scheme.mode == BinningScheme::Mode::EqualWidth) {
      const auto [xlo, xhi] = std::minmax_element(x.values.begin(), x.values.end());
      const auto [zlo, zhi] = std::minmax_element(z.values.begin(), z.values.end());
      double x_lo = *xlo;
      double x_hi = *xhi;
      double z_lo = *zlo;
      double z_hi = *zhi;
      if (edges == BinEdges::Shared) {
        x_lo = z_lo = std::min(x_lo, z_lo);
        x_hi = z_hi = std::max(x_hi, z_hi);
      }
      const std::vector<double> px = histogram_in_range(x.values, scheme.bins, x_lo, x_hi);
      const std::vector<double> pz = histogram_in_range(z.values, scheme.bins, z_lo, z_hi);
      return entropy_from_probs(px, spec) - entropy_from_probs(pz, spec);
    }
    // Discrete counting has no edges; shared and independent coincide.
    return entropy_from_probs(histogram(x.values, scheme), spec) -
           entropy_from_probs(histogram(z.values, scheme), spec);
  }

  const std::optional<double> hx = evaluate_entropy(x.values, spec);
  const std::optional<double> hz = evaluate_entropy(z.values, spec);
  if (!hx || !hz) return std::nullopt;
  return *hx - *hz;
}

std::optional<double> analyze_cell(const TimeSeries& x, const AttentionKind& method,
                                   AnalysisKind analysis, int tau, const EntropySpec& spec,
                                   BinEdges edges) {
  try {
    const CoarseSeries z = coarse_grain_attention(x, method, ScaleFactor(tau));
    switch (analysis) {
      case AnalysisKind::CoarseComplexity:
        return evaluate_entropy(z.values, spec);
      case AnalysisKind::ComplexityLoss:
        return complexity_loss(x, z, spec, edges);
      case AnalysisKind::SimilarityLoss:
        return ks_statistic(x.values, z.values);
    }
  } catch (const DataError&) {
  }
  return std::nullopt;
}

std::vector<AnalysisRecord> analyze_sweep(const TimeSeries& x, const AttentionKind& method,
                                          AnalysisKind analysis, int tau_max,
                                          const EntropySpec& spec, BinEdges edges) {
  if (tau_max < 1) {
    throw InvalidParameter("tau_max must be >= 1, got " + std::to_string(tau_max));
  }

  std::vector<AnalysisRecord> records;
  records.reserve(static_cast<std::size_t>(tau_max));
  for (int tau = 1; tau <= tau_max; ++tau) {
    AnalysisRecord record;
    record.subject_id = x.id;
    record.method = method;
    record.analysis = analysis;
    record.tau = tau;
    record.value = analyze_cell(x, method, analysis, tau, spec, edges);
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace laas
