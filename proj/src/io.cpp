#include "pathsig/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace pathsig {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::optional<double> parse_number(const std::string& cell) {
  if (cell.empty()) return std::numeric_limits<double>::quiet_NaN();
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (*first == '+') ++first;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

nlohmann::json cm_json(const ConfusionMatrix& cm) {
  return {{"tp", cm.tp}, {"tn", cm.tn}, {"fp", cm.fp}, {"fn", cm.fn}, {"accuracy", cm.accuracy()}};
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  int line_no = 0;
  bool first_data_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto cells = split_cells(t);
    std::vector<double> row;
    row.reserve(cells.size());
    bool ok = true;
    for (const auto& c : cells) {
      auto v = parse_number(c);
      if (!v) {
        ok = false;
        break;
      }
      row.push_back(*v);
    }
    if (!ok) {
      if (first_data_row) {
        table.header = cells;
        first_data_row = false;
        continue;
      }
      throw InputError("cannot parse numeric cell", line_no);
    }
    first_data_row = false;
    table.rows.push_back(std::move(row));
    table.line_numbers.push_back(line_no);
  }
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  return read_csv(in);
}

std::string format_double(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << cells[i];
  }
  out << '\n';
}

void write_csv_row(std::ostream& out, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << format_double(values[i]);
  }
  out << '\n';
}

void write_feature_csv(std::ostream& out, const FeatureMatrix& fm) {
  std::vector<std::string> header = fm.columns;
  if (fm.labels) header.emplace_back("label");
  write_csv_row(out, header);
  for (Eigen::Index i = 0; i < fm.rows.rows(); ++i) {
    std::vector<std::string> cells;
    for (Eigen::Index j = 0; j < fm.rows.cols(); ++j) cells.push_back(format_double(fm.rows(i, j)));
    if (fm.labels) cells.push_back(std::to_string((*fm.labels)[static_cast<std::size_t>(i)]));
    write_csv_row(out, cells);
  }
}

nlohmann::json feature_matrix_json(const FeatureMatrix& fm) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < fm.rows.rows(); ++i) {
    std::vector<double> r(static_cast<std::size_t>(fm.rows.cols()));
    for (Eigen::Index j = 0; j < fm.rows.cols(); ++j) r[static_cast<std::size_t>(j)] = fm.rows(i, j);
    rows.push_back(r);
  }
  nlohmann::json doc;
  doc["words"] = fm.columns;
  doc["rows"] = std::move(rows);
  doc["labels"] = fm.labels ? nlohmann::json(*fm.labels) : nlohmann::json(nullptr);
  doc["means"] = fm.column_means;
  doc["stds"] = fm.column_stds;
  return doc;
}

nlohmann::json experiment_json(const ExperimentResult& r) {
  nlohmann::json doc;
  doc["seed"] = r.config.seed;
  doc["lambda1"] = r.config.lambda1;
  doc["lambda2"] = r.config.lambda2;
  doc["null_labels"] = r.config.shuffle_labels;
  doc["train"] = cm_json(r.train);
  doc["test"] = cm_json(r.test);
  doc["selected_features"] = r.selected_features;
  std::vector<double> w(r.model.weights.data(), r.model.weights.data() + r.model.weights.size());
  doc["weights"] = w;
  doc["intercept"] = r.model.intercept;
  return doc;
}

}  // namespace pathsig
