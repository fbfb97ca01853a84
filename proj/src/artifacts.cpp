#include "cwts/artifacts.hpp"

#include <sstream>

#include "cwts/errors.hpp"

namespace cwts {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string serialize_matrix(const MatrixFile& m) {
  if (m.values.rows() != m.dates.size() || m.values.cols() != m.grid.count()) {
    throw InputError("cli-render", "matrix dimensions disagree with dates/scales");
  }
  std::string out;
  out += "# cwt-spectra matrix v1\n";
  out += "# kind: " + m.kind + "\n";
  out += "# n_times: " + std::to_string(m.values.rows()) + "\n";
  out += "# n_scales: " + std::to_string(m.values.cols()) + "\n";
  out += "# dt: " + format_double(m.grid.dt) + "\n";
  out += "# s0: " + format_double(m.grid.s0) + "\n";
  out += "# dj: " + format_double(m.grid.dj) + "\n";
  out += "# omega0: " + format_double(m.omega0) + "\n";
  out += "scales";
  for (double s : m.grid.scales) out += "," + format_double(s);
  out += "\n";
  for (std::size_t t = 0; t < m.values.rows(); ++t) {
    out += to_string(m.dates[t]);
    for (std::size_t j = 0; j < m.values.cols(); ++j) {
      out += "," + format_double(m.values(t, j));
    }
    out += "\n";
  }
  return out;
}

MatrixFile parse_matrix(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string line;
  MatrixFile m;
  std::size_t n_times = 0, n_scales = 0;
  bool have_scales = false;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto colon = line.find(": ");
      if (colon == std::string::npos) continue;
      auto key = line.substr(2, colon - 2);
      auto value = line.substr(colon + 2);
      if (key == "kind") m.kind = value;
      else if (key == "n_times") n_times = static_cast<std::size_t>(std::stoull(value));
      else if (key == "n_scales") n_scales = static_cast<std::size_t>(std::stoull(value));
      else if (key == "dt") m.grid.dt = parse_double(value);
      else if (key == "s0") m.grid.s0 = parse_double(value);
      else if (key == "dj") m.grid.dj = parse_double(value);
      else if (key == "omega0") m.omega0 = parse_double(value);
      continue;
    }
    auto fields = split(line, ',');
    if (!have_scales) {
      if (fields.empty() || fields[0] != "scales") {
        throw InputError("cli-render", "matrix file: expected a 'scales' line");
      }
      for (std::size_t i = 1; i < fields.size(); ++i) {
        m.grid.scales.push_back(parse_double(fields[i]));
      }
      if (n_scales != 0 && m.grid.scales.size() != n_scales) {
        throw InputError("cli-render", "matrix file: scale count mismatch");
      }
      m.values = RealMatrix(n_times, m.grid.scales.size());
      m.dates.reserve(n_times);
      have_scales = true;
      continue;
    }
    if (fields.size() != m.grid.scales.size() + 1) {
      throw InputError("cli-render", "matrix file: bad row width at data row " +
                                         std::to_string(row));
    }
    if (row >= n_times) throw InputError("cli-render", "matrix file: more rows than n_times");
    m.dates.push_back(parse_date(fields[0]));
    for (std::size_t j = 0; j < m.grid.scales.size(); ++j) {
      m.values(row, j) = parse_double(fields[j + 1]);
    }
    ++row;
  }
  if (!have_scales || row != n_times) {
    throw InputError("cli-render", "matrix file: truncated");
  }
  return m;
}

std::string serialize_thresholds(const std::vector<double>& scales,
                                 const std::vector<double>& thresholds) {
  if (scales.size() != thresholds.size()) {
    throw InputError("cli-render", "thresholds/scales length mismatch");
  }
  std::string out = "scale,threshold\n";
  for (std::size_t j = 0; j < scales.size(); ++j) {
    out += format_double(scales[j]) + "," + format_double(thresholds[j]) + "\n";
  }
  return out;
}

void parse_thresholds(const std::string& bytes, std::vector<double>& scales,
                      std::vector<double>& thresholds) {
  std::istringstream in(bytes);
  std::string line;
  if (!std::getline(in, line) || split(line, ',')[0] != "scale") {
    throw InputError("cli-render", "thresholds CSV must start with 'scale,threshold'");
  }
  scales.clear();
  thresholds.clear();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != 2) throw InputError("cli-render", "bad thresholds row: " + line);
    scales.push_back(parse_double(fields[0]));
    thresholds.push_back(parse_double(fields[1]));
  }
  if (scales.empty()) throw InputError("cli-render", "thresholds CSV has no rows");
}

std::string serialize_coi(const std::vector<Date>& dates, const std::vector<double>& coi) {
  if (dates.size() != coi.size()) {
    throw InputError("cli-render", "coi/dates length mismatch");
  }
  std::string out = "date,coi_scale\n";
  for (std::size_t t = 0; t < coi.size(); ++t) {
    out += to_string(dates[t]) + "," + format_double(coi[t]) + "\n";
  }
  return out;
}

void parse_coi(const std::string& bytes, std::vector<Date>& dates, std::vector<double>& coi) {
  std::istringstream in(bytes);
  std::string line;
  if (!std::getline(in, line) || split(line, ',')[0] != "date") {
    throw InputError("cli-render", "COI CSV must start with 'date,coi_scale'");
  }
  dates.clear();
  coi.clear();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != 2) throw InputError("cli-render", "bad COI row: " + line);
    dates.push_back(parse_date(fields[0]));
    coi.push_back(parse_double(fields[1]));
  }
  if (dates.empty()) throw InputError("cli-render", "COI CSV has no rows");
}

}  // namespace cwts
