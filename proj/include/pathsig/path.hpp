#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pathsig {

/// Ordered points in R^d, linearly interpolated between consecutive rows.
/// Stored row-major. At least one point; all entries finite.
class PiecewisePath {
 public:
  /// Throws std::invalid_argument on an empty list, ragged rows, or non-finite values.
  PiecewisePath(int dim, std::vector<double> row_major);
  PiecewisePath(std::initializer_list<std::initializer_list<double>> rows);
  static PiecewisePath from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const { return dim_; }
  std::size_t num_points() const { return data_.size() / static_cast<std::size_t>(dim_); }
  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * static_cast<std::size_t>(dim_),
                                                  static_cast<std::size_t>(dim_));
  }
  std::span<const double> data() const { return data_; }

  /// Position at parameter s in [0, num_points()-1]; segment j spans [j, j+1].
  std::vector<double> at(double s) const;

  /// Last point minus first point.
  std::vector<double> increment() const;

  friend bool operator==(const PiecewisePath&, const PiecewisePath&) = default;

 private:
  int dim_;
  std::vector<double> data_;
};

}  // namespace pathsig
