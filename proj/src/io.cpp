#include "laas/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace laas {

namespace {

namespace fs = std::filesystem;

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_number(const std::string& token, std::size_t line_no) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ParseError("cannot parse number '" + token + "'", line_no);
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite value '" + token + "'", line_no);
  }
  return value;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path);
  }
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path);
  }
  return out;
}

void expect_header(const std::string& got, const std::string& want, const std::string& path) {
  if (trim(got) != want) {
    throw ParseError(path + ": expected header '" + want + "', got '" + trim(got) + "'", 1);
  }
}

constexpr const char* kCovariateNames[] = {"age", "height", "weight", "leg_length", "speed"};

}  // namespace

std::string format_double(double v) {
  char buffer[40];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buffer, sizeof(buffer), "%.*g", precision, v);
    if (std::strtod(buffer, nullptr) == v) break;
  }
  return buffer;
}

TimeSeries load_series(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;

    std::istringstream fields(stripped);
    std::string first, second;
    fields >> first;
    if (fields >> second) {
      values.push_back(parse_number(second, line_no));  // (time, value) form
    } else {
      values.push_back(parse_number(first, line_no));
    }
  }
  if (values.empty()) {
    throw EmptyFile(path + " has no data lines");
  }
  return TimeSeries(fs::path(path).stem().string(), std::move(values));
}

void write_series_file(const std::string& path, const TimeSeries& x) {
  std::ofstream out = open_output(path);
  for (double v : x.values) {
    out << format_double(v) << '\n';
  }
}

CohortManifest load_manifest(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw EmptyFile(path + " is empty");
  }
  expect_header(line, "subject_id,path,group,age,height,weight,leg_length,speed", path);

  const fs::path base = fs::path(path).parent_path();
  CohortManifest manifest;
  std::set<std::string> seen_ids;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != 8) {
      throw ParseError(path + ": expected 8 fields, got " + std::to_string(fields.size()),
                       line_no);
    }

    ManifestEntry entry;
    entry.subject_id = fields[0];
    entry.group = fields[2];
    if (entry.subject_id.empty()) {
      throw ParseError(path + ": empty subject_id", line_no);
    }
    if (!seen_ids.insert(entry.subject_id).second) {
      throw ParseError(path + ": duplicate subject_id '" + entry.subject_id + "'", line_no);
    }
    if (entry.group.empty()) {
      throw ParseError(path + ": empty group for subject '" + entry.subject_id + "'", line_no);
    }
    if (fields[1].empty()) {
      throw ParseError(path + ": empty path for subject '" + entry.subject_id + "'", line_no);
    }

    fs::path data_path(fields[1]);
    if (data_path.is_relative()) data_path = base / data_path;
    if (!fs::exists(data_path)) {
      throw InvalidInput(path + ": data file '" + data_path.string() + "' for subject '" +
                         entry.subject_id + "' does not exist");
    }
    entry.path = data_path.string();

    for (std::size_t c = 0; c < 5; ++c) {
      const std::string& token = fields[3 + c];
      if (!token.empty()) {
        entry.covariates[kCovariateNames[c]] = parse_number(token, line_no);
      }
    }
    manifest.entries.push_back(std::move(entry));
  }
  if (manifest.entries.empty()) {
    throw EmptyFile(path + " has no subjects");
  }
  return manifest;
}

void write_manifest_csv(const std::string& path, const CohortManifest& manifest) {
  std::ofstream out = open_output(path);
  out << "subject_id,path,group,age,height,weight,leg_length,speed\n";
  for (const ManifestEntry& entry : manifest.entries) {
    out << entry.subject_id << ',' << entry.path << ',' << entry.group;
    for (const char* name : kCovariateNames) {
      out << ',';
      const auto it = entry.covariates.find(name);
      if (it != entry.covariates.end()) out << format_double(it->second);
    }
    out << '\n';
  }
}

void write_records_csv(const std::string& path, const std::vector<AnalysisRecord>& records) {
  std::ofstream out = open_output(path);
  out << "subject_id,group,method,analysis,tau,value\n";
  for (const AnalysisRecord& record : records) {
    out << record.subject_id << ',' << record.group << ',' << method_name(record.method) << ','
        << analysis_name(record.analysis) << ',' << record.tau << ',';
    if (record.value) out << format_double(*record.value);
    out << '\n';
  }
}

std::vector<AnalysisRecord> read_records_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw EmptyFile(path + " is empty");
  }
  expect_header(line, "subject_id,group,method,analysis,tau,value", path);

  std::vector<AnalysisRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != 6) {
      throw ParseError(path + ": expected 6 fields, got " + std::to_string(fields.size()),
                       line_no);
    }
    AnalysisRecord record;
    record.subject_id = fields[0];
    record.group = fields[1];
    const auto method = parse_method(fields[2]);
    if (!method) throw ParseError(path + ": unknown method '" + fields[2] + "'", line_no);
    record.method = AttentionKind{*method, {}};
    const auto analysis = parse_analysis(fields[3]);
    if (!analysis) throw ParseError(path + ": unknown analysis '" + fields[3] + "'", line_no);
    record.analysis = *analysis;
    record.tau = static_cast<int>(parse_number(fields[4], line_no));
    if (!fields[5].empty()) record.value = parse_number(fields[5], line_no);
    records.push_back(std::move(record));
  }
  return records;
}

void write_summary_csv(const std::string& path, const std::vector<SummaryRow>& rows) {
  std::ofstream out = open_output(path);
  out << "group,method,analysis,tau,n,mean,se\n";
  for (const SummaryRow& row : rows) {
    out << row.group << ',' << method_name(row.method) << ',' << analysis_name(row.analysis)
        << ',' << row.tau << ',' << row.n << ',' << format_double(row.mean) << ','
        << format_double(row.se) << '\n';
  }
}

std::vector<SummaryRow> read_summary_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw EmptyFile(path + " is empty");
  }
  expect_header(line, "group,method,analysis,tau,n,mean,se", path);

  std::vector<SummaryRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != 7) {
      throw ParseError(path + ": expected 7 fields, got " + std::to_string(fields.size()),
                       line_no);
    }
    SummaryRow row;
    row.group = fields[0];
    const auto method = parse_method(fields[1]);
    if (!method) throw ParseError(path + ": unknown method '" + fields[1] + "'", line_no);
    row.method = AttentionKind{*method, {}};
    const auto analysis = parse_analysis(fields[2]);
    if (!analysis) throw ParseError(path + ": unknown analysis '" + fields[2] + "'", line_no);
    row.analysis = *analysis;
    row.tau = static_cast<int>(parse_number(fields[3], line_no));
    row.n = static_cast<std::size_t>(parse_number(fields[4], line_no));
    row.mean = parse_number(fields[5], line_no);
    row.se = parse_number(fields[6], line_no);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_comparison_csv(const std::string& path, const std::vector<ComparisonRow>& rows) {
  std::ofstream out = open_output(path);
  out << "measure,covariate_or_pair,statistic,value\n";
  for (const ComparisonRow& row : rows) {
    out << row.measure << ',' << row.covariate_or_pair << ',' << row.statistic << ','
        << format_double(row.value) << '\n';
  }
}

void write_combined_csv(const std::string& path, const std::vector<CombinedRow>& rows) {
  std::ofstream out = open_output(path);
  out << "subject_id,group,value\n";
  for (const CombinedRow& row : rows) {
    out << row.subject_id << ',' << row.group << ',';
    if (row.value) out << format_double(*row.value);
    out << '\n';
  }
}

}  // namespace laas
