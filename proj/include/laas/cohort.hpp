#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "laas/loss.hpp"
#include "laas/series.hpp"

namespace laas {

// One manifest line: a subject, its data file, a group label and whatever
// covariates were present (age, height, weight, leg_length, speed).
struct ManifestEntry {
  std::string subject_id;
  std::string path;
  std::string group;
  std::map<std::string, double> covariates;
};

struct CohortManifest {
  std::vector<ManifestEntry> entries;
};

struct GroupSummary {
  std::string group;
  std::size_t n = 0;
  double mean = 0.0;
  double se = 0.0;  // sd / sqrt(n), sd with the n-1 denominator; 0 when n == 1
};

GroupSummary group_summary(std::string group, std::span<const double> values);

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
};

// Welch's t-test; both samples need >= 2 values. Throws DegenerateVariance
// when both sample variances are zero.
WelchResult welch_t(std::span<const double> a, std::span<const double> b);

// Product-moment correlation; equal lengths >= 2, both with nonzero variance.
double pearson(std::span<const double> x, std::span<const double> y);

// Per-subject scale factor round((height - 1) / 18), round half up, clamped
// to >= 1. Throws InvalidCovariate for height <= 1 or non-finite height.
int dynamic_scale_factor(double height);

// Entropy of the peak-attention coarse-graining at tau1 = round((height-1)/18)
// plus the entropy of twice-applied multiscale coarse-graining at
// tau2 = round((height-1)/9). With single_ms the second arm applies
// multiscale once instead of twice. Selection and coarse-graining errors
// propagate; nullopt when an entropy is undefined.
std::optional<double> combined_score(const TimeSeries& x, double height, const EntropySpec& spec,
                                     bool single_ms = false);

struct GridOptions {
  std::vector<AttentionKind> methods;
  std::vector<AnalysisKind> analyses;
  int tau_max = 20;
  EntropySpec entropy;
  BinEdges edges = BinEdges::Independent;
  // Replace the tau sweep with one per-subject tau from the height covariate.
  bool dynamic_scale = false;
  // Add per-subject combined scores and their comparison rows.
  bool combined = false;
  bool combined_single_ms = false;
  // Add comparison rows for each subject's max over defined tau cells.
  bool best_over_tau = false;
};

// One line of the summary CSV: per-(group, method, analysis, tau) statistics
// over the defined per-subject values. tau 0 marks dynamic-scale summaries.
struct SummaryRow {
  std::string group;
  AttentionKind method;
  AnalysisKind analysis;
  int tau = 1;
  std::size_t n = 0;
  double mean = 0.0;
  double se = 0.0;
};

struct ComparisonRow {
  std::string measure;            // "pas/closs/tau=3", a covariate name, "combined"
  std::string covariate_or_pair;  // covariate name or "groupA|groupB"
  std::string statistic;          // pearson_r, pearson_n, welch_t, welch_df, welch_p
  double value = 0.0;
};

struct CombinedRow {
  std::string subject_id;
  std::string group;
  std::optional<double> value;
};

struct GridResult {
  std::vector<AnalysisRecord> records;
  std::vector<SummaryRow> summaries;
  std::vector<ComparisonRow> comparisons;
  std::vector<CombinedRow> combined;
  std::size_t undefined_cells = 0;
  std::vector<std::string> warnings;
};

// Full cross-product grid over the manifest. Per-subject failures (unreadable
// files, failed selections, undefined estimators) become undefined cells and
// warnings; only manifest-level problems throw. Output order is fixed:
// records by (manifest order, method order, analysis order, tau), summaries
// by (group, method, analysis, tau), comparisons by (measure, pair/covariate).
GridResult run_grid(const CohortManifest& manifest, const GridOptions& options);

}  // namespace laas
