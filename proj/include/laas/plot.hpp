#pragma once

#include <string>
#include <vector>

#include "laas/cohort.hpp"

namespace laas {

// Per-(group, method, analysis, tau) summaries computed from raw records;
// undefined cells are skipped. Rows come out ordered by (group, method,
// analysis, tau) with methods and analyses in canonical token order.
std::vector<SummaryRow> summarize_records(const std::vector<AnalysisRecord>& records);

// One SVG with a grid of panels: analyses as rows, methods as columns. Each
// panel plots per-group mean markers connected by lines with SE bars against
// the scale factor. Output bytes are deterministic.
void write_panel_grid_svg(const std::string& path, const std::vector<SummaryRow>& cells);

}  // namespace laas
