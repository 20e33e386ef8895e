#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "laas/entropy.hpp"
#include "laas/series.hpp"

namespace laas {

enum class AnalysisKind {
  CoarseComplexity,  // entropy of the coarse-grained series
  ComplexityLoss,    // entropy(original) - entropy(coarse-grained)
  SimilarityLoss,    // two-sample KS statistic between original and coarse-grained
};

// Canonical analysis token: "complexity", "closs" or "sloss".
std::string_view analysis_name(AnalysisKind analysis);
std::optional<AnalysisKind> parse_analysis(std::string_view name);

// One cell of an analysis grid. A missing value marks a cell where
// coarse-graining or the estimator was undefined; such cells are kept, never
// dropped.
struct AnalysisRecord {
  std::string subject_id;
  std::string group;
  AttentionKind method;
  AnalysisKind analysis;
  int tau = 1;
  std::optional<double> value;
};

// How complexity-loss bins the two series: each against its own [min, max]
// (the default; the two series are treated as independent) or both against
// the combined range.
enum class BinEdges { Independent, Shared };

// Two-sample Kolmogorov-Smirnov statistic: the largest absolute difference
// between the empirical CDFs, evaluated at every pooled distinct value.
// Symmetric, in [0, 1], and 0 exactly when the two multisets induce the same
// ECDF.
double ks_statistic(std::span<const double> a, std::span<const double> b);

// entropy(x) - entropy(z) under `spec`. Signed: positive means
// coarse-graining destroyed complexity. For the distribution-based
// estimators the binning scheme resolves once, on the original series, so
// both sides are quantified at the same resolution; edges follow `edges`.
// nullopt when either entropy is undefined.
std::optional<double> complexity_loss(const TimeSeries& x, const CoarseSeries& z,
                                      const EntropySpec& spec,
                                      BinEdges edges = BinEdges::Independent);

// One grid cell. nullopt where coarse-graining or the estimator fails on the
// data (insufficient attention observations, empty output, series too short,
// undefined sample entropy); configuration errors still throw.
std::optional<double> analyze_cell(const TimeSeries& x, const AttentionKind& method,
                                   AnalysisKind analysis, int tau, const EntropySpec& spec,
                                   BinEdges edges = BinEdges::Independent);

// One record per tau in 1..tau_max; undefined cells are kept, never dropped.
std::vector<AnalysisRecord> analyze_sweep(const TimeSeries& x, const AttentionKind& method,
                                          AnalysisKind analysis, int tau_max,
                                          const EntropySpec& spec,
                                          BinEdges edges = BinEdges::Independent);

}  // namespace laas
