#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathsig/path.hpp"

namespace pathsig {

/// A one-dimensional data stream with optional strictly increasing times.
struct Stream {
  std::vector<double> values;
  std::optional<std::vector<double>> times;

  /// The explicit times, or 0..n-1 when absent. Validates length and ordering.
  std::vector<double> resolved_times() const;
};

/// A stream where mask[i] == true marks values[i] as missing.
struct MaskedStream {
  std::vector<double> values;
  std::vector<bool> mask;
};

/// Rows (t_i, x_i).
PiecewisePath embed_linear(const Stream& s);

/// Axis path (t_i, x_i) -> (t_{i+1}, x_i) -> (t_{i+1}, x_{i+1}); 2n-1 rows.
PiecewisePath embed_rectilinear(const Stream& s);

/// Axis path through arbitrary d-dimensional points, moving one coordinate at
/// a time in coordinate order. For d = 2 with time first this is
/// embed_rectilinear.
PiecewisePath axis_path(const PiecewisePath& points);

/// {0, x1, x1+x2, ...}; length n+1.
std::vector<double> cumsum_basepoint(std::span<const double> values);

/// Rows (lag, lead) with lead = {x1, x2, x2, ..., xn, xn} and
/// lag = {x1, x1, x2, ..., x_{n-1}, xn}; 2n-1 rows. The lead moves first,
/// so the path runs clockwise and its Levy area is -QV/2.
PiecewisePath lead_lag(std::span<const double> values);

/// Axis path through (t, lag, lead): time moves first, then lead, then lag.
PiecewisePath lead_lag_time(std::span<const double> times, std::span<const double> values);

/// Rows (t_i, y_i, r_i): missing values are carried forward from the last
/// observation and r counts the missing entries seen so far.
PiecewisePath missing_data_embed(const MaskedStream& ms, std::span<const double> times);

enum class Embedding { Linear, Rectilinear, CumsumLeadLag, LeadLag, LeadLagTime, Missing };

/// Parses "linear", "rectilinear", "cumsum-leadlag", "leadlag", "leadlag-time", "missing".
std::optional<Embedding> parse_embedding(const std::string& name);
std::string embedding_name(Embedding e);

/// Embeds a stream; NaN values mark missing entries, valid only for
/// Embedding::Missing.
PiecewisePath embed(const Stream& s, Embedding e);

}  // namespace pathsig
