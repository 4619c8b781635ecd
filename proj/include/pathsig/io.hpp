#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pathsig/experiment.hpp"
#include "pathsig/features.hpp"

namespace pathsig {

/// Malformed input data; `line` is 1-based, 0 when not tied to a line.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Numeric CSV table. Empty cells become NaN. Blank lines and lines starting
/// with '#' are skipped. A first row that does not parse as numbers is kept
/// as the header.
struct CsvTable {
  std::optional<std::vector<std::string>> header;
  std::vector<std::vector<double>> rows;
  std::vector<int> line_numbers;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

/// 17 significant digits, "%.17g" style; round-trips exactly.
std::string format_double(double v);

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);
void write_csv_row(std::ostream& out, const std::vector<double>& values);

/// Header of column labels (plus "label" when present), then one row per stream.
void write_feature_csv(std::ostream& out, const FeatureMatrix& fm);

/// {words, rows, labels, means, stds}
nlohmann::json feature_matrix_json(const FeatureMatrix& fm);

/// {seed, lambda1, lambda2, train: {tp,tn,fp,fn}, test: {...}, selected_features}
nlohmann::json experiment_json(const ExperimentResult& r);

}  // namespace pathsig
