#pragma once

#include <string>
#include <vector>

#include "laas/cohort.hpp"
#include "laas/series.hpp"

namespace laas {

// Series files: one value per line; '#' starts a comment line; blank lines
// are skipped; a multi-column line (time value ...) contributes its second
// column. The id is the file stem.
TimeSeries load_series(const std::string& path);
void write_series_file(const std::string& path, const TimeSeries& x);

// Manifest: CSV with header subject_id,path,group,age,height,weight,
// leg_length,speed. Missing covariates stay empty. Relative data paths are
// resolved against the manifest's directory. Subject ids must be unique,
// groups non-empty, and every referenced file present.
CohortManifest load_manifest(const std::string& path);
void write_manifest_csv(const std::string& path, const CohortManifest& manifest);

// Analysis grids: subject_id,group,method,analysis,tau,value with an empty
// value field for undefined cells.
void write_records_csv(const std::string& path, const std::vector<AnalysisRecord>& records);
std::vector<AnalysisRecord> read_records_csv(const std::string& path);

// group,method,analysis,tau,n,mean,se
void write_summary_csv(const std::string& path, const std::vector<SummaryRow>& rows);
std::vector<SummaryRow> read_summary_csv(const std::string& path);

// measure,covariate_or_pair,statistic,value
void write_comparison_csv(const std::string& path, const std::vector<ComparisonRow>& rows);

// subject_id,group,value
void write_combined_csv(const std::string& path, const std::vector<CombinedRow>& rows);

// Shortest decimal form that round-trips a double exactly.
std::string format_double(double v);

}  // namespace laas
