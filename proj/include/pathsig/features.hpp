#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pathsig/embeddings.hpp"

namespace pathsig {

/// Sum of squared consecutive differences; 0 for a single value.
double quadratic_variation(std::span<const double> x);

/// Level-1 and level-2 signature terms of a two-dimensional lead-lag path.
struct LeadLagLevel2 {
  double s1 = 0;   // S(1) = S(2)
  double s11 = 0;  // S(1,1) = S(2,2)
  double s12 = 0;
  double s21 = 0;
};

/// Closed forms for signature(lead_lag(cumsum_basepoint(x))) at depth 2:
/// S(1) = Σx, S(1,1) = ½(Σx)², S(1,2) = ½[(Σx)² - Σx²], S(2,1) = ½[(Σx)² + Σx²].
LeadLagLevel2 cumsum_leadlag_level2(std::span<const double> values);

struct MeanVar {
  double mean;
  double variance;  // population convention
};

/// Mean and population variance of N values from cumsum lead-lag signature terms.
MeanVar mean_var_from_sig(double s12, double s21, double s1, std::size_t n);

/// Level-2 terms of signature(lead_lag(x)) from the pipeline, next to the
/// printed closed-form variant whose second summand is Σ(x_{i+1}-x_i)
/// rather than QV.
struct BareLeadLagComparison {
  LeadLagLevel2 pipeline;
  LeadLagLevel2 printed_formula;
};
BareLeadLagComparison bare_leadlag_level2(std::span<const double> values);

struct FeatureConfig {
  Embedding embedding = Embedding::CumsumLeadLag;
  int depth = 2;
  bool log_signature = false;
  bool standardize = false;
};

/// Rows are streams; columns are signature (or log-signature) terms without
/// the constant term.
struct FeatureMatrix {
  std::vector<std::string> columns;
  Eigen::MatrixXd rows;
  std::optional<std::vector<int>> labels;
  std::vector<double> column_means;  // empty unless standardized
  std::vector<double> column_stds;
};

struct Standardizer {
  std::vector<double> means;
  std::vector<double> stds;

  /// Population mean/std per column over the given rows.
  static Standardizer fit(const Eigen::MatrixXd& rows);
  /// (x - mean) / std; a zero-std column is only centered.
  void apply(Eigen::MatrixXd& rows) const;
};

/// Embeds each stream, computes its (log-)signature, drops the constant
/// term and stacks the rows. Standardizes over all rows when requested.
FeatureMatrix build_feature_matrix(const std::vector<Stream>& streams, const FeatureConfig& cfg,
                                   std::optional<std::vector<int>> labels = std::nullopt);

/// Column labels for a configuration over a path of dimension `dim`.
std::vector<std::string> feature_columns(int dim, int depth, bool log_signature);

/// Path dimension produced by an embedding.
int embedding_dim(Embedding e);

}  // namespace pathsig
