#include "laas/cohort.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "laas/io.hpp"
#include "laas/student_t.hpp"

namespace laas {

namespace {

double mean_of(std::span<const double> values) {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values, double mean) {
  if (values.size() < 2) return 0.0;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

int round_half_up_min1(double value) {
  const auto rounded = static_cast<int>(std::floor(value + 0.5));
  return rounded < 1 ? 1 : rounded;
}

}  // namespace

GroupSummary group_summary(std::string group, std::span<const double> values) {
  if (values.empty()) {
    throw InvalidInput("group summary needs at least one value");
  }
  GroupSummary summary;
  summary.group = std::move(group);
  summary.n = values.size();
  summary.mean = mean_of(values);
  const double sd = std::sqrt(sample_variance(values, summary.mean));
  summary.se = sd / std::sqrt(static_cast<double>(summary.n));
  return summary;
}

WelchResult welch_t(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw InvalidInput("Welch's t-test needs at least 2 values per sample");
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double ma = mean_of(a);
  const double mb = mean_of(b);
  const double va = sample_variance(a, ma);
  const double vb = sample_variance(b, mb);
  if (va == 0.0 && vb == 0.0) {
    throw DegenerateVariance("both samples have zero variance");
  }

  const double sa = va / na;
  const double sb = vb / nb;
  WelchResult result;
  result.t = (ma - mb) / std::sqrt(sa + sb);
  result.df = (sa + sb) * (sa + sb) / (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
  result.p = student_t_two_sided_p(result.t, result.df);
  return result;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidInput("Pearson correlation needs equal lengths >= 2");
  }
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DegenerateVariance("Pearson correlation of a constant sequence");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

int dynamic_scale_factor(double height) {
  if (!std::isfinite(height) || height <= 1.0) {
    throw InvalidCovariate("dynamic scale factor needs height > 1, got " +
                           std::to_string(height));
  }
  return round_half_up_min1((height - 1.0) / 18.0);
}

std::optional<double> combined_score(const TimeSeries& x, double height, const EntropySpec& spec,
                                     bool single_ms) {
  const int tau1 = dynamic_scale_factor(height);
  const int tau2 = round_half_up_min1((height - 1.0) / 9.0);

  const CoarseSeries peak_arm = coarse_grain_attention(x, AttentionKind::peak(), ScaleFactor(tau1));
  const std::optional<double> h_peak = evaluate_entropy(peak_arm.values, spec);

  const CoarseSeries once = coarse_grain_ms(x, ScaleFactor(tau2));
  std::vector<double> ms_values = once.values;
  if (!single_ms) {
    ms_values = coarse_grain_ms(TimeSeries(x.id, std::move(ms_values)), ScaleFactor(tau2)).values;
  }
  const std::optional<double> h_ms = evaluate_entropy(ms_values, spec);

  if (!h_peak || !h_ms) return std::nullopt;
  return *h_peak + *h_ms;
}

namespace {

std::string grid_measure_label(const AttentionKind& method, AnalysisKind analysis,
                               const std::string& tau_label) {
  return std::string(method_name(method)) + "/" + std::string(analysis_name(analysis)) +
         "/tau=" + tau_label;
}

// Per-subject values for one measure, aligned with the manifest entries.
struct MeasureColumn {
  std::string label;
  std::vector<std::optional<double>> values;
};

}  // namespace

GridResult run_grid(const CohortManifest& manifest, const GridOptions& options) {
  if (manifest.entries.empty()) {
    throw InvalidInput("manifest has no subjects");
  }
  if (options.methods.empty() || options.analyses.empty()) {
    throw InvalidParameter("run_grid needs at least one method and one analysis");
  }
  if (options.tau_max < 1) {
    throw InvalidParameter("tau_max must be >= 1");
  }

  const std::size_t n_subjects = manifest.entries.size();
  GridResult result;

  std::vector<std::optional<TimeSeries>> series(n_subjects);
  for (std::size_t i = 0; i < n_subjects; ++i) {
    const ManifestEntry& entry = manifest.entries[i];
    try {
      series[i] = load_series(entry.path);
    } catch (const Error& error) {
      result.warnings.push_back("subject " + entry.subject_id + ": " + error.what());
    }
  }

  // Per-subject dynamic scale factors, when requested.
  std::vector<std::optional<int>> dynamic_tau(n_subjects);
  if (options.dynamic_scale) {
    for (std::size_t i = 0; i < n_subjects; ++i) {
      const ManifestEntry& entry = manifest.entries[i];
      const auto height = entry.covariates.find("height");
      if (height == entry.covariates.end()) {
        result.warnings.push_back("subject " + entry.subject_id +
                                  ": no height covariate, excluded from dynamic scaling");
        continue;
      }
      try {
        dynamic_tau[i] = dynamic_scale_factor(height->second);
      } catch (const Error& error) {
        result.warnings.push_back("subject " + entry.subject_id + ": " + error.what());
      }
    }
  }

  std::vector<MeasureColumn> measures;

  // Covariates are measures too (Pearson against themselves and each other,
  // Welch between groups).
  std::set<std::string> covariate_set;
  for (const ManifestEntry& entry : manifest.entries) {
    for (const auto& [name, value] : entry.covariates) covariate_set.insert(name);
  }
  const std::vector<std::string> covariates(covariate_set.begin(), covariate_set.end());
  for (const std::string& name : covariates) {
    MeasureColumn column;
    column.label = name;
    column.values.resize(n_subjects);
    for (std::size_t i = 0; i < n_subjects; ++i) {
      const auto it = manifest.entries[i].covariates.find(name);
      if (it != manifest.entries[i].covariates.end()) column.values[i] = it->second;
    }
    measures.push_back(std::move(column));
  }

  // The analysis grid itself.
  for (const AttentionKind& method : options.methods) {
    for (AnalysisKind analysis : options.analyses) {
      if (options.dynamic_scale) {
        MeasureColumn column;
        column.label = grid_measure_label(method, analysis, "dyn");
        column.values.resize(n_subjects);
        for (std::size_t i = 0; i < n_subjects; ++i) {
          if (!dynamic_tau[i]) continue;
          AnalysisRecord record;
          record.subject_id = manifest.entries[i].subject_id;
          record.group = manifest.entries[i].group;
          record.method = method;
          record.analysis = analysis;
          record.tau = *dynamic_tau[i];
          if (series[i]) {
            record.value = analyze_cell(*series[i], method, analysis, record.tau,
                                        options.entropy, options.edges);
          }
          column.values[i] = record.value;
          result.records.push_back(std::move(record));
        }
        measures.push_back(std::move(column));
        continue;
      }

      std::vector<MeasureColumn> per_tau(static_cast<std::size_t>(options.tau_max));
      for (int tau = 1; tau <= options.tau_max; ++tau) {
        per_tau[static_cast<std::size_t>(tau - 1)].label =
            grid_measure_label(method, analysis, std::to_string(tau));
        per_tau[static_cast<std::size_t>(tau - 1)].values.resize(n_subjects);
      }
      for (std::size_t i = 0; i < n_subjects; ++i) {
        for (int tau = 1; tau <= options.tau_max; ++tau) {
          AnalysisRecord record;
          record.subject_id = manifest.entries[i].subject_id;
          record.group = manifest.entries[i].group;
          record.method = method;
          record.analysis = analysis;
          record.tau = tau;
          if (series[i]) {
            record.value =
                analyze_cell(*series[i], method, analysis, tau, options.entropy, options.edges);
          }
          per_tau[static_cast<std::size_t>(tau - 1)].values[i] = record.value;
          result.records.push_back(std::move(record));
        }
      }
      for (MeasureColumn& column : per_tau) measures.push_back(std::move(column));

      if (options.best_over_tau && !options.dynamic_scale) {
        MeasureColumn best;
        best.label = grid_measure_label(method, analysis, "best");
        best.values.resize(n_subjects);
        const std::size_t base = measures.size() - static_cast<std::size_t>(options.tau_max);
        for (std::size_t i = 0; i < n_subjects; ++i) {
          std::optional<double> top;
          for (int tau = 1; tau <= options.tau_max; ++tau) {
            const auto& cell = measures[base + static_cast<std::size_t>(tau - 1)].values[i];
            if (cell && (!top || *cell > *top)) top = *cell;
          }
          best.values[i] = top;
        }
        measures.push_back(std::move(best));
      }
    }
  }

  // Combined peak + twice-multiscale score, when requested.
  if (options.combined) {
    MeasureColumn column;
    column.label = "combined";
    column.values.resize(n_subjects);
    for (std::size_t i = 0; i < n_subjects; ++i) {
      const ManifestEntry& entry = manifest.entries[i];
      CombinedRow row;
      row.subject_id = entry.subject_id;
      row.group = entry.group;
      const auto height = entry.covariates.find("height");
      if (!series[i]) {
        // load warning already recorded
      } else if (height == entry.covariates.end()) {
        result.warnings.push_back("subject " + entry.subject_id +
                                  ": no height covariate, combined score skipped");
      } else {
        try {
          row.value = combined_score(*series[i], height->second, options.entropy,
                                     options.combined_single_ms);
        } catch (const Error& error) {
          result.warnings.push_back("subject " + entry.subject_id + ": " + error.what());
        }
      }
      column.values[i] = row.value;
      result.combined.push_back(std::move(row));
    }
    measures.push_back(std::move(column));
  }

  for (const AnalysisRecord& record : result.records) {
    if (!record.value) ++result.undefined_cells;
  }
  for (const CombinedRow& row : result.combined) {
    if (!row.value) ++result.undefined_cells;
  }

  // Group summaries over defined cells.
  std::set<std::string> group_set;
  for (const ManifestEntry& entry : manifest.entries) group_set.insert(entry.group);
  const std::vector<std::string> groups(group_set.begin(), group_set.end());

  const auto summarize = [&](const AttentionKind& method, AnalysisKind analysis, int out_tau,
                             const std::vector<std::optional<double>>& cells) {
    for (const std::string& group : groups) {
      std::vector<double> values;
      for (std::size_t i = 0; i < n_subjects; ++i) {
        if (manifest.entries[i].group == group && cells[i]) values.push_back(*cells[i]);
      }
      if (values.empty()) continue;
      const GroupSummary gs = group_summary(group, values);
      result.summaries.push_back(
          SummaryRow{group, method, analysis, out_tau, gs.n, gs.mean, gs.se});
    }
  };

  // Summaries follow (group, method, analysis, tau); rebuild cell columns in
  // that order from the measure table, whose labels are unique.
  const auto find_measure = [&](const std::string& label) -> const MeasureColumn* {
    for (const MeasureColumn& column : measures) {
      if (column.label == label) return &column;
    }
    return nullptr;
  };

  for (const AttentionKind& method : options.methods) {
    for (AnalysisKind analysis : options.analyses) {
      if (options.dynamic_scale) {
        const MeasureColumn* column = find_measure(grid_measure_label(method, analysis, "dyn"));
        if (column) summarize(method, analysis, 0, column->values);
      } else {
        for (int tau = 1; tau <= options.tau_max; ++tau) {
          const MeasureColumn* column =
              find_measure(grid_measure_label(method, analysis, std::to_string(tau)));
          if (column) summarize(method, analysis, tau, column->values);
        }
      }
    }
  }

  // Comparison rows: Pearson against covariates, Welch per group pair.
  for (const MeasureColumn& measure : measures) {
    for (const std::string& covariate : covariates) {
      const MeasureColumn* cov = find_measure(covariate);
      std::vector<double> xs;
      std::vector<double> ys;
      for (std::size_t i = 0; i < n_subjects; ++i) {
        if (measure.values[i] && cov->values[i]) {
          xs.push_back(*measure.values[i]);
          ys.push_back(*cov->values[i]);
        }
      }
      if (xs.size() < 2) continue;
      try {
        const double r = pearson(xs, ys);
        result.comparisons.push_back({measure.label, covariate, "pearson_r", r});
        result.comparisons.push_back(
            {measure.label, covariate, "pearson_n", static_cast<double>(xs.size())});
      } catch (const DegenerateVariance&) {
        result.warnings.push_back("pearson " + measure.label + " vs " + covariate +
                                  ": degenerate variance, skipped");
      }
    }

    for (std::size_t g1 = 0; g1 < groups.size(); ++g1) {
      for (std::size_t g2 = g1 + 1; g2 < groups.size(); ++g2) {
        std::vector<double> a;
        std::vector<double> b;
        for (std::size_t i = 0; i < n_subjects; ++i) {
          if (!measure.values[i]) continue;
          if (manifest.entries[i].group == groups[g1]) a.push_back(*measure.values[i]);
          if (manifest.entries[i].group == groups[g2]) b.push_back(*measure.values[i]);
        }
        const std::string pair = groups[g1] + "|" + groups[g2];
        if (a.size() < 2 || b.size() < 2) {
          result.warnings.push_back("welch " + measure.label + " " + pair +
                                    ": fewer than 2 defined values per group, skipped");
          continue;
        }
        try {
          const WelchResult w = welch_t(a, b);
          result.comparisons.push_back({measure.label, pair, "welch_t", w.t});
          result.comparisons.push_back({measure.label, pair, "welch_df", w.df});
          result.comparisons.push_back({measure.label, pair, "welch_p", w.p});
        } catch (const DegenerateVariance&) {
          result.warnings.push_back("welch " + measure.label + " " + pair +
                                    ": both groups degenerate, skipped");
        }
      }
    }
  }

  result.comparisons.push_back(
      {"all", "", "undefined_cells", static_cast<double>(result.undefined_cells)});
  return result;
}

}  // namespace laas
