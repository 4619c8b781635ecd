#include "pathsig/features.hpp"

#include <cmath>
#include <stdexcept>

#include "pathsig/lyndon.hpp"
#include "pathsig/signature.hpp"

namespace pathsig {

double quadratic_variation(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("quadratic_variation: empty sequence");
  double qv = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) qv += (x[i] - x[i - 1]) * (x[i] - x[i - 1]);
  return qv;
}

LeadLagLevel2 cumsum_leadlag_level2(std::span<const double> values) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double v : values) {
    sum += v;
    sum_sq += v * v;
  }
  return {sum, 0.5 * sum * sum, 0.5 * (sum * sum - sum_sq), 0.5 * (sum * sum + sum_sq)};
}

MeanVar mean_var_from_sig(double s12, double s21, double s1, std::size_t n) {
  if (n == 0) throw std::invalid_argument("mean_var_from_sig: N must be >= 1");
  const double nn = static_cast<double>(n);
  return {s1 / nn, -(nn + 1.0) / (nn * nn) * s12 + (nn - 1.0) / (nn * nn) * s21};
}

BareLeadLagComparison bare_leadlag_level2(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("bare_leadlag_level2: need >= 2 values");
  const SignatureResult s = signature(lead_lag(values), 2);
  BareLeadLagComparison out;
  out.pipeline = {s[Word{1}], s[Word{1, 1}], s[Word{1, 2}], s[Word{2, 1}]};

  const double delta = values.back() - values.front();
  double sum_increments = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i) sum_increments += values[i] - values[i - 1];
  out.printed_formula = {delta, 0.5 * delta * delta, 0.5 * (delta * delta + sum_increments),
                         0.5 * (delta * delta - sum_increments)};
  return out;
}

Standardizer Standardizer::fit(const Eigen::MatrixXd& rows) {
  if (rows.rows() == 0) throw std::invalid_argument("Standardizer::fit: no rows");
  Standardizer s;
  const auto n = static_cast<double>(rows.rows());
  for (Eigen::Index j = 0; j < rows.cols(); ++j) {
    const double mean = rows.col(j).sum() / n;
    const double var = (rows.col(j).array() - mean).square().sum() / n;
    s.means.push_back(mean);
    s.stds.push_back(std::sqrt(var));
  }
  return s;
}

void Standardizer::apply(Eigen::MatrixXd& rows) const {
  if (static_cast<std::size_t>(rows.cols()) != means.size()) {
    throw std::invalid_argument("Standardizer::apply: column count mismatch");
  }
  for (Eigen::Index j = 0; j < rows.cols(); ++j) {
    const auto col = static_cast<std::size_t>(j);
    rows.col(j).array() -= means[col];
    if (stds[col] > 0.0) rows.col(j).array() /= stds[col];
  }
}

int embedding_dim(Embedding e) {
  switch (e) {
    case Embedding::Linear:
    case Embedding::Rectilinear:
    case Embedding::CumsumLeadLag:
    case Embedding::LeadLag: return 2;
    case Embedding::LeadLagTime:
    case Embedding::Missing: return 3;
  }
  return 0;
}

std::vector<std::string> feature_columns(int dim, int depth, bool log_signature) {
  std::vector<std::string> cols;
  if (log_signature) {
    const LyndonBasis basis(dim, depth);
    for (const auto& lw : basis.words()) cols.push_back(lw.word.label("logS"));
  } else {
    for (int k = 1; k <= depth; ++k) {
      for (const Word& w : words_of_length(dim, k)) cols.push_back(w.label("S"));
    }
  }
  return cols;
}

FeatureMatrix build_feature_matrix(const std::vector<Stream>& streams, const FeatureConfig& cfg,
                                   std::optional<std::vector<int>> labels) {
  if (streams.empty()) throw std::invalid_argument("build_feature_matrix: no streams");
  if (cfg.depth < 1) throw std::invalid_argument("build_feature_matrix: depth must be >= 1");
  if (labels && labels->size() != streams.size()) {
    throw std::invalid_argument("build_feature_matrix: label count does not match stream count");
  }
  const int dim = embedding_dim(cfg.embedding);
  FeatureMatrix fm;
  fm.columns = feature_columns(dim, cfg.depth, cfg.log_signature);
  fm.rows.resize(static_cast<Eigen::Index>(streams.size()),
                 static_cast<Eigen::Index>(fm.columns.size()));
  auto basis = cfg.log_signature ? std::make_shared<const LyndonBasis>(dim, cfg.depth) : nullptr;

  for (std::size_t i = 0; i < streams.size(); ++i) {
    const PiecewisePath path = embed(streams[i], cfg.embedding);
    if (path.dim() != dim) {
      throw std::invalid_argument("build_feature_matrix: inconsistent stream dimension");
    }
    const SignatureResult s = signature(path, cfg.depth);
    const auto r = static_cast<Eigen::Index>(i);
    if (cfg.log_signature) {
      const LogSignature ls = log_signature_coords(s, basis);
      for (std::size_t j = 0; j < ls.coords.size(); ++j) {
        fm.rows(r, static_cast<Eigen::Index>(j)) = ls.coords[j];
      }
    } else {
      auto coeffs = s.series.coeffs();
      for (std::size_t j = 1; j < coeffs.size(); ++j) {
        fm.rows(r, static_cast<Eigen::Index>(j - 1)) = coeffs[j];
      }
    }
  }
  if (cfg.standardize) {
    const Standardizer st = Standardizer::fit(fm.rows);
    st.apply(fm.rows);
    fm.column_means = st.means;
    fm.column_stds = st.stds;
  }
  fm.labels = std::move(labels);
  return fm;
}

}  // namespace pathsig
