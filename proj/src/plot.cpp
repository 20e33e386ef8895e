#include "laas/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "laas/io.hpp"

namespace laas {

namespace {

constexpr AttentionSelector kMethodOrder[] = {
    AttentionSelector::All,
    AttentionSelector::Peak,
    AttentionSelector::Occurrence,
    AttentionSelector::Median,
};

constexpr AnalysisKind kAnalysisOrder[] = {
    AnalysisKind::CoarseComplexity,
    AnalysisKind::ComplexityLoss,
    AnalysisKind::SimilarityLoss,
};

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
};

std::string fmt(double v, int precision = 2) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.*f", precision, v);
  return buffer;
}

std::string fmt_tick(double v) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.3g", v);
  return buffer;
}

struct Panel {
  AnalysisKind analysis;
  AttentionSelector method;
  // group -> tau -> (mean, se)
  std::map<std::string, std::map<int, std::pair<double, double>>> data;
};

}  // namespace

std::vector<SummaryRow> summarize_records(const std::vector<AnalysisRecord>& records) {
  std::set<std::string> groups;
  std::set<int> taus;
  std::set<AttentionSelector> methods_present;
  std::set<AnalysisKind> analyses_present;
  for (const AnalysisRecord& record : records) {
    groups.insert(record.group);
    taus.insert(record.tau);
    methods_present.insert(record.method.selector);
    analyses_present.insert(record.analysis);
  }

  std::vector<SummaryRow> rows;
  for (const std::string& group : groups) {
    for (AttentionSelector method : kMethodOrder) {
      if (!methods_present.count(method)) continue;
      for (AnalysisKind analysis : kAnalysisOrder) {
        if (!analyses_present.count(analysis)) continue;
        for (int tau : taus) {
          std::vector<double> values;
          for (const AnalysisRecord& record : records) {
            if (record.group == group && record.method.selector == method &&
                record.analysis == analysis && record.tau == tau && record.value) {
              values.push_back(*record.value);
            }
          }
          if (values.empty()) continue;
          const GroupSummary gs = group_summary(group, values);
          rows.push_back(SummaryRow{group, AttentionKind{method, {}}, analysis, tau, gs.n,
                                    gs.mean, gs.se});
        }
      }
    }
  }
  return rows;
}

void write_panel_grid_svg(const std::string& path, const std::vector<SummaryRow>& cells) {
  if (cells.empty()) {
    throw InvalidInput("nothing to plot: no summary rows");
  }

  std::set<AttentionSelector> methods_present;
  std::set<AnalysisKind> analyses_present;
  std::set<std::string> group_set;
  int tau_lo = cells.front().tau;
  int tau_hi = cells.front().tau;
  for (const SummaryRow& row : cells) {
    methods_present.insert(row.method.selector);
    analyses_present.insert(row.analysis);
    group_set.insert(row.group);
    tau_lo = std::min(tau_lo, row.tau);
    tau_hi = std::max(tau_hi, row.tau);
  }

  std::vector<AttentionSelector> columns;
  for (AttentionSelector method : kMethodOrder) {
    if (methods_present.count(method)) columns.push_back(method);
  }
  std::vector<AnalysisKind> rows;
  for (AnalysisKind analysis : kAnalysisOrder) {
    if (analyses_present.count(analysis)) rows.push_back(analysis);
  }
  const std::vector<std::string> groups(group_set.begin(), group_set.end());

  std::vector<Panel> panels;
  for (AnalysisKind analysis : rows) {
    for (AttentionSelector method : columns) {
      Panel panel{analysis, method, {}};
      for (const SummaryRow& row : cells) {
        if (row.analysis == analysis && row.method.selector == method) {
          panel.data[row.group][row.tau] = {row.mean, row.se};
        }
      }
      panels.push_back(std::move(panel));
    }
  }

  const int panel_w = 320;
  const int panel_h = 230;
  const int margin_left = 58;
  const int margin_bottom = 40;
  const int margin_top = 28;
  const int margin_right = 12;
  const int legend_h = 26;
  const int width = static_cast<int>(columns.size()) * panel_w + 10;
  const int height = legend_h + static_cast<int>(rows.size()) * panel_h + 8;

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path);
  }

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  out << "<style>\n"
      << " .axis { stroke:#000; stroke-width:1; fill:none; }\n"
      << " .label { font-family:Helvetica,Arial,sans-serif; font-size:11px; fill:#000; }\n"
      << " .title { font-family:Helvetica,Arial,sans-serif; font-size:12px; fill:#000; }\n"
      << "</style>\n";

  // Legend strip.
  {
    int x = 12;
    const int y = 16;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const char* color = kPalette[g % (sizeof(kPalette) / sizeof(kPalette[0]))];
      out << "<line x1=\"" << x << "\" y1=\"" << y << "\" x2=\"" << (x + 22) << "\" y2=\"" << y
          << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
      out << "<circle cx=\"" << (x + 11) << "\" cy=\"" << y << "\" r=\"3\" fill=\"" << color
          << "\"/>\n";
      out << "<text class=\"label\" x=\"" << (x + 27) << "\" y=\"" << (y + 4) << "\">"
          << groups[g] << "</text>\n";
      x += 34 + static_cast<int>(groups[g].size()) * 7;
    }
  }

  for (std::size_t p = 0; p < panels.size(); ++p) {
    const Panel& panel = panels[p];
    const int col = static_cast<int>(p % columns.size());
    const int row = static_cast<int>(p / columns.size());
    const double x0 = col * panel_w + margin_left;
    const double y0 = legend_h + row * panel_h + margin_top;
    const double plot_w = panel_w - margin_left - margin_right;
    const double plot_h = panel_h - margin_top - margin_bottom;

    // Panel value range over mean +- se.
    double ymin = 0.0;
    double ymax = 0.0;
    bool have_y = false;
    for (const auto& [group, points] : panel.data) {
      for (const auto& [tau, ms] : points) {
        const double lo = ms.first - ms.second;
        const double hi = ms.first + ms.second;
        if (!have_y) {
          ymin = lo;
          ymax = hi;
          have_y = true;
        } else {
          ymin = std::min(ymin, lo);
          ymax = std::max(ymax, hi);
        }
      }
    }
    if (!have_y) {
      ymin = 0.0;
      ymax = 1.0;
    }
    double pad = 0.05 * (ymax - ymin);
    if (pad == 0.0) pad = std::max(0.5, std::abs(ymax) * 0.1);
    ymin -= pad;
    ymax += pad;

    const double x_span = tau_hi > tau_lo ? static_cast<double>(tau_hi - tau_lo) : 1.0;
    const auto map_x = [&](int tau) {
      return x0 + (static_cast<double>(tau - tau_lo) / x_span) * plot_w;
    };
    const auto map_y = [&](double v) { return y0 + plot_h - (v - ymin) / (ymax - ymin) * plot_h; };

    out << "<text class=\"title\" x=\"" << fmt(x0 + plot_w / 2) << "\" y=\"" << fmt(y0 - 10)
        << "\" text-anchor=\"middle\">" << analysis_name(panel.analysis) << " &#183; "
        << method_name(AttentionKind{panel.method, {}}) << "</text>\n";

    // Frame and ticks.
    out << "<rect class=\"axis\" x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\""
        << fmt(plot_w) << "\" height=\"" << fmt(plot_h) << "\"/>\n";

    const int tau_step = std::max(1, (tau_hi - tau_lo) / 8);
    for (int tau = tau_lo; tau <= tau_hi; tau += tau_step) {
      const double px = map_x(tau);
      out << "<line class=\"axis\" x1=\"" << fmt(px) << "\" y1=\"" << fmt(y0 + plot_h)
          << "\" x2=\"" << fmt(px) << "\" y2=\"" << fmt(y0 + plot_h + 4) << "\"/>\n";
      out << "<text class=\"label\" x=\"" << fmt(px) << "\" y=\"" << fmt(y0 + plot_h + 16)
          << "\" text-anchor=\"middle\">" << tau << "</text>\n";
    }
    out << "<text class=\"label\" x=\"" << fmt(x0 + plot_w / 2) << "\" y=\""
        << fmt(y0 + plot_h + 31) << "\" text-anchor=\"middle\">scale factor</text>\n";

    for (int tick = 0; tick <= 4; ++tick) {
      const double v = ymin + (ymax - ymin) * tick / 4.0;
      const double py = map_y(v);
      out << "<line class=\"axis\" x1=\"" << fmt(x0 - 4) << "\" y1=\"" << fmt(py) << "\" x2=\""
          << fmt(x0) << "\" y2=\"" << fmt(py) << "\"/>\n";
      out << "<text class=\"label\" x=\"" << fmt(x0 - 7) << "\" y=\"" << fmt(py + 3.5)
          << "\" text-anchor=\"end\">" << fmt_tick(v) << "</text>\n";
    }

    // One polyline + markers + SE bars per group.
    std::size_t group_index = 0;
    for (const std::string& group : groups) {
      const char* color = kPalette[group_index % (sizeof(kPalette) / sizeof(kPalette[0]))];
      ++group_index;
      const auto it = panel.data.find(group);
      if (it == panel.data.end()) continue;

      // Connect consecutive taus only; gaps stay visible where cells are
      // undefined.
      std::vector<std::pair<int, std::pair<double, double>>> points(it->second.begin(),
                                                                    it->second.end());
      std::string segment;
      int prev_tau = 0;
      bool open = false;
      const auto flush = [&]() {
        if (open && segment.find(' ') != std::string::npos) {
          out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
              << segment << "\"/>\n";
        }
        segment.clear();
        open = false;
      };
      for (const auto& [tau, ms] : points) {
        if (open && tau != prev_tau + 1) flush();
        if (!segment.empty()) segment += ' ';
        segment += fmt(map_x(tau)) + "," + fmt(map_y(ms.first));
        open = true;
        prev_tau = tau;
      }
      flush();

      for (const auto& [tau, ms] : points) {
        const double px = map_x(tau);
        if (ms.second > 0.0) {
          const double y_hi = map_y(ms.first + ms.second);
          const double y_lo = map_y(ms.first - ms.second);
          out << "<line stroke=\"" << color << "\" stroke-width=\"1\" x1=\"" << fmt(px)
              << "\" y1=\"" << fmt(y_hi) << "\" x2=\"" << fmt(px) << "\" y2=\"" << fmt(y_lo)
              << "\"/>\n";
          out << "<line stroke=\"" << color << "\" stroke-width=\"1\" x1=\"" << fmt(px - 3)
              << "\" y1=\"" << fmt(y_hi) << "\" x2=\"" << fmt(px + 3) << "\" y2=\"" << fmt(y_hi)
              << "\"/>\n";
          out << "<line stroke=\"" << color << "\" stroke-width=\"1\" x1=\"" << fmt(px - 3)
              << "\" y1=\"" << fmt(y_lo) << "\" x2=\"" << fmt(px + 3) << "\" y2=\"" << fmt(y_lo)
              << "\"/>\n";
        }
        out << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(map_y(ms.first))
            << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      }
    }
  }

  out << "</svg>\n";
}

}  // namespace laas
