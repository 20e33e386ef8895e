#include "laas/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "laas/io.hpp"
#include "laas/plot.hpp"
#include "laas/synth.hpp"

namespace laas::cli {

namespace {

namespace fs = std::filesystem;

struct EntropyFlags {
  std::string estimator = "shannon";
  double alpha = 2.0;
  double q = 2.0;
  int perm_order = 3;
  int perm_delay = 1;
  int embed = 2;
  double tolerance = 0.15;
  bool absolute_r = false;
  std::string binning = "auto";
  int bins = 0;
  bool shared_edges = false;
  int precision = -1;  // -1: exact value comparison for oas/mas
};

void add_entropy_flags(CLI::App* cmd, EntropyFlags& flags) {
  cmd->add_option("--entropy", flags.estimator, "Estimator: shannon, renyi, tsallis, perm, sample, approx")
      ->check(CLI::IsMember({"shannon", "renyi", "tsallis", "perm", "permutation", "sample",
                             "approx", "approximate"}));
  cmd->add_option("--alpha", flags.alpha, "Renyi order (> 0, != 1)");
  cmd->add_option("--q", flags.q, "Tsallis order (!= 1)");
  cmd->add_option("--perm-order", flags.perm_order, "Permutation embedding order");
  cmd->add_option("--perm-delay", flags.perm_delay, "Permutation delay");
  cmd->add_option("--embed", flags.embed, "Sample/approximate template length");
  cmd->add_option("--r", flags.tolerance, "Sample/approximate tolerance (default 0.15 x sd)");
  cmd->add_flag("--absolute-r", flags.absolute_r, "Treat --r as an absolute tolerance");
  cmd->add_option("--binning", flags.binning, "Binning: auto, discrete, equal-width")
      ->check(CLI::IsMember({"auto", "discrete", "equal-width"}));
  cmd->add_option("--bins", flags.bins, "Bin count for --binning equal-width");
  cmd->add_flag("--shared-edges", flags.shared_edges,
                "Complexity-loss bins span the combined range of both series");
  cmd->add_option("--precision", flags.precision,
                  "Decimal places for oas/mas value equality (default: exact)");
}

EntropySpec make_entropy_spec(const EntropyFlags& flags) {
  EntropySpec spec;
  spec.estimator = *parse_estimator(flags.estimator);
  spec.alpha = flags.alpha;
  spec.q = flags.q;
  spec.order = flags.perm_order;
  spec.delay = flags.perm_delay;
  spec.embed = flags.embed;
  spec.r = flags.tolerance;
  spec.relative_r = !flags.absolute_r;
  if (flags.binning == "discrete") {
    spec.binning = BinningScheme::discrete();
  } else if (flags.binning == "equal-width") {
    if (flags.bins < 1) {
      throw InvalidParameter("--binning equal-width needs --bins >= 1");
    }
    spec.binning = BinningScheme::equal_width(flags.bins);
  }
  return spec;
}

AttentionKind make_method(const std::string& name, int precision) {
  const auto selector = parse_method(name);
  if (!selector) {
    throw InvalidParameter("unknown method '" + name + "'");
  }
  AttentionKind kind{*selector, {}};
  if (precision >= 0 && (kind.selector == AttentionSelector::Occurrence ||
                         kind.selector == AttentionSelector::Median)) {
    kind.precision = precision;
  }
  return kind;
}

void warn(const std::string& message) { std::cerr << "warning: " << message << '\n'; }

struct SynthArgs {
  std::string kind = "white";
  std::size_t n = 8192;
  int seeds = 30;
  std::uint64_t seed_base = 1;
  std::vector<std::uint64_t> seed_list;
  std::string out_dir;
};

int run_synth(const SynthArgs& args) {
  const auto kind = parse_noise(args.kind);
  if (!kind) {
    throw InvalidParameter("unknown noise kind '" + args.kind + "'");
  }
  std::vector<std::uint64_t> seeds = args.seed_list;
  if (seeds.empty()) {
    if (args.seeds < 1) {
      throw InvalidParameter("--seeds must be >= 1");
    }
    for (int i = 0; i < args.seeds; ++i) seeds.push_back(args.seed_base + static_cast<std::uint64_t>(i));
  }

  fs::create_directories(args.out_dir);
  CohortManifest manifest;
  for (std::uint64_t seed : seeds) {
    const TimeSeries series = gen_noise({*kind, args.n, seed});
    const std::string file_name = series.id + ".txt";
    write_series_file((fs::path(args.out_dir) / file_name).string(), series);
    manifest.entries.push_back(
        ManifestEntry{series.id, file_name, std::string(noise_name(*kind)), {}});
  }
  write_manifest_csv((fs::path(args.out_dir) / "manifest.csv").string(), manifest);
  return 0;
}

struct AnalyzeArgs {
  std::string input;
  std::string method = "ms";
  std::string analysis = "complexity";
  int tau_max = 20;
  std::string group;
  std::string out_csv;
  EntropyFlags entropy;
};

int run_analyze(const AnalyzeArgs& args) {
  const EntropySpec spec = make_entropy_spec(args.entropy);
  const AttentionKind method = make_method(args.method, args.entropy.precision);
  const auto analysis = parse_analysis(args.analysis);
  if (!analysis) {
    throw InvalidParameter("unknown analysis '" + args.analysis + "'");
  }
  const BinEdges edges = args.entropy.shared_edges ? BinEdges::Shared : BinEdges::Independent;

  const TimeSeries series = load_series(args.input);
  std::vector<AnalysisRecord> records =
      analyze_sweep(series, method, *analysis, args.tau_max, spec, edges);
  for (AnalysisRecord& record : records) {
    record.group = args.group;
    if (!record.value) {
      warn("undefined cell subject=" + record.subject_id +
           " method=" + std::string(method_name(record.method)) +
           " analysis=" + std::string(analysis_name(record.analysis)) +
           " tau=" + std::to_string(record.tau));
    }
  }
  write_records_csv(args.out_csv, records);
  return 0;
}

struct CohortArgs {
  std::string manifest;
  std::vector<std::string> methods{"ms", "pas", "oas", "mas"};
  std::vector<std::string> analyses{"complexity", "closs", "sloss"};
  int tau_max = 20;
  std::string out_dir;
  bool dynamic_scale = false;
  bool combined = false;
  bool combined_single_ms = false;
  bool best_over_tau = false;
  EntropyFlags entropy;
};

int run_cohort(const CohortArgs& args) {
  GridOptions options;
  options.entropy = make_entropy_spec(args.entropy);
  options.edges = args.entropy.shared_edges ? BinEdges::Shared : BinEdges::Independent;
  options.tau_max = args.tau_max;
  options.dynamic_scale = args.dynamic_scale;
  options.combined = args.combined;
  options.combined_single_ms = args.combined_single_ms;
  options.best_over_tau = args.best_over_tau;
  for (const std::string& name : args.methods) {
    options.methods.push_back(make_method(name, args.entropy.precision));
  }
  for (const std::string& name : args.analyses) {
    const auto analysis = parse_analysis(name);
    if (!analysis) {
      throw InvalidParameter("unknown analysis '" + name + "'");
    }
    options.analyses.push_back(*analysis);
  }

  const CohortManifest manifest = load_manifest(args.manifest);
  const GridResult result = run_grid(manifest, options);
  for (const std::string& message : result.warnings) warn(message);

  fs::create_directories(args.out_dir);
  write_records_csv((fs::path(args.out_dir) / "records.csv").string(), result.records);
  write_summary_csv((fs::path(args.out_dir) / "summary.csv").string(), result.summaries);
  write_comparison_csv((fs::path(args.out_dir) / "comparison.csv").string(), result.comparisons);
  if (args.combined) {
    write_combined_csv((fs::path(args.out_dir) / "combined.csv").string(), result.combined);
  }
  return 0;
}

struct PlotArgs {
  std::string records_csv;
  std::string summary_csv;
  std::string out_svg;
};

int run_plot(const PlotArgs& args) {
  if (args.records_csv.empty() && args.summary_csv.empty()) {
    throw InvalidParameter("plot needs --records and/or --summary");
  }
  std::vector<SummaryRow> cells;
  if (!args.summary_csv.empty()) {
    cells = read_summary_csv(args.summary_csv);
    if (!args.records_csv.empty()) {
      read_records_csv(args.records_csv);  // validated even when summary drives the plot
    }
  } else {
    cells = summarize_records(read_records_csv(args.records_csv));
  }
  write_panel_grid_svg(args.out_svg, cells);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Loss analysis via attention-driven coarse-graining of time series"};
  app.require_subcommand(1);

  SynthArgs synth_args;
  CLI::App* synth_cmd = app.add_subcommand("synth", "Generate seeded white or 1/f noise series");
  synth_cmd->add_option("--kind", synth_args.kind, "white or pink (1/f)")
      ->check(CLI::IsMember({"white", "pink", "1f", "1/f", "one-over-f"}));
  synth_cmd->add_option("--n", synth_args.n, "Series length (>= 2)");
  synth_cmd->add_option("--seeds", synth_args.seeds, "Number of series to generate");
  synth_cmd->add_option("--seed-base", synth_args.seed_base, "First seed (seeds are consecutive)");
  synth_cmd->add_option("--seed-list", synth_args.seed_list, "Explicit seed list (overrides --seeds)");
  synth_cmd->add_option("--out", synth_args.out_dir, "Output directory")->required();

  AnalyzeArgs analyze_args;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Sweep one series over scale factors");
  analyze_cmd->add_option("--input", analyze_args.input, "Series file")->required();
  analyze_cmd->add_option("--method", analyze_args.method, "ms, pas, oas (alias fas), mas")
      ->check(CLI::IsMember({"ms", "pas", "oas", "fas", "mas"}));
  analyze_cmd->add_option("--analysis", analyze_args.analysis, "complexity, closs, sloss")
      ->check(CLI::IsMember({"complexity", "closs", "sloss"}));
  analyze_cmd->add_option("--tau-max", analyze_args.tau_max, "Largest scale factor");
  analyze_cmd->add_option("--group", analyze_args.group, "Group label for the records");
  analyze_cmd->add_option("--out", analyze_args.out_csv, "Output records CSV")->required();
  add_entropy_flags(analyze_cmd, analyze_args.entropy);

  CohortArgs cohort_args;
  CLI::App* cohort_cmd = app.add_subcommand("cohort", "Run the full grid over a manifest");
  cohort_cmd->add_option("--manifest", cohort_args.manifest, "Cohort manifest CSV")->required();
  cohort_cmd->add_option("--methods", cohort_args.methods, "Methods (default: ms pas oas mas)")
      ->check(CLI::IsMember({"ms", "pas", "oas", "fas", "mas"}));
  cohort_cmd
      ->add_option("--analyses", cohort_args.analyses,
                   "Analyses (default: complexity closs sloss)")
      ->check(CLI::IsMember({"complexity", "closs", "sloss"}));
  cohort_cmd->add_option("--tau-max", cohort_args.tau_max, "Largest scale factor");
  cohort_cmd->add_flag("--dynamic-scale", cohort_args.dynamic_scale,
                       "One per-subject tau from the height covariate");
  cohort_cmd->add_flag("--combined", cohort_args.combined,
                       "Emit per-subject combined peak + twice-multiscale scores");
  cohort_cmd->add_flag("--combined-single-ms", cohort_args.combined_single_ms,
                       "Combined score applies multiscale once instead of twice");
  cohort_cmd->add_flag("--best-over-tau", cohort_args.best_over_tau,
                       "Add per-measure best-over-tau comparison rows");
  cohort_cmd->add_option("--out", cohort_args.out_dir, "Output directory")->required();
  add_entropy_flags(cohort_cmd, cohort_args.entropy);

  PlotArgs plot_args;
  CLI::App* plot_cmd = app.add_subcommand("plot", "Render a panel grid SVG from CSV output");
  plot_cmd->add_option("--records", plot_args.records_csv, "Records CSV");
  plot_cmd->add_option("--summary", plot_args.summary_csv, "Summary CSV");
  plot_cmd->add_option("--out", plot_args.out_svg, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (synth_cmd->parsed()) return run_synth(synth_args);
    if (analyze_cmd->parsed()) return run_analyze(analyze_args);
    if (cohort_cmd->parsed()) return run_cohort(cohort_args);
    if (plot_cmd->parsed()) return run_plot(plot_args);
  } catch (const InvalidParameter& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace laas::cli
