#include "pathsig/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "pathsig/features.hpp"

namespace pathsig {
namespace {

Eigen::MatrixXd take_rows(const Eigen::MatrixXd& m, const std::vector<std::size_t>& idx) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(idx.size()), m.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(idx[i]));
  }
  return out;
}

std::vector<int> take(const std::vector<int>& v, const std::vector<std::size_t>& idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(v[i]);
  return out;
}

}  // namespace

ExperimentData generate_experiment_data(const ExperimentConfig& cfg) {
  if (cfg.streams_per_class < 2) throw std::invalid_argument("experiment: need >= 2 streams per class");
  if (!(cfg.train_fraction > 0.0 && cfg.train_fraction < 1.0)) {
    throw std::invalid_argument("experiment: train_fraction must lie in (0, 1)");
  }
  std::mt19937_64 rng(cfg.seed);

  std::vector<Stream> streams;
  std::vector<int> labels;
  for (int cls = 0; cls < 2; ++cls) {
    const ArmaSpec& spec = cls == 0 ? cfg.class0 : cfg.class1;
    for (int i = 0; i < cfg.streams_per_class; ++i) {
      streams.push_back(Stream{arma_generate(spec, rng()), std::nullopt});
      labels.push_back(cls);
    }
  }
  if (cfg.shuffle_labels) std::shuffle(labels.begin(), labels.end(), rng);

  FeatureConfig fc;
  fc.embedding = Embedding::CumsumLeadLag;
  fc.depth = cfg.depth;
  FeatureMatrix fm = build_feature_matrix(streams, fc);

  ExperimentData data;
  data.columns = std::move(fm.columns);
  data.features = std::move(fm.rows);
  data.labels = std::move(labels);

  // Stratified split: shuffle each class's rows, send the leading fraction to training.
  for (int cls = 0; cls < 2; ++cls) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
      if (data.labels[i] == cls) rows.push_back(i);
    }
    std::shuffle(rows.begin(), rows.end(), rng);
    const auto cut = static_cast<std::size_t>(std::llround(cfg.train_fraction * static_cast<double>(rows.size())));
    data.train_rows.insert(data.train_rows.end(), rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(cut));
    data.test_rows.insert(data.test_rows.end(), rows.begin() + static_cast<std::ptrdiff_t>(cut), rows.end());
  }
  std::sort(data.train_rows.begin(), data.train_rows.end());
  std::sort(data.test_rows.begin(), data.test_rows.end());
  return data;
}

SplitMatrices standardized_split(const ExperimentData& data) {
  SplitMatrices s;
  s.train_x = take_rows(data.features, data.train_rows);
  s.test_x = take_rows(data.features, data.test_rows);
  s.train_y = take(data.labels, data.train_rows);
  s.test_y = take(data.labels, data.test_rows);
  const Standardizer st = Standardizer::fit(s.train_x);
  st.apply(s.train_x);
  st.apply(s.test_x);
  return s;
}

ExperimentResult run_arma_experiment(const ExperimentConfig& cfg) {
  const ExperimentData data = generate_experiment_data(cfg);
  const SplitMatrices split = standardized_split(data);

  ExperimentResult r;
  r.config = cfg;
  r.columns = data.columns;
  r.model = logistic_fit(split.train_x, split.train_y, ElasticNet{cfg.lambda1, cfg.lambda2});
  r.train = confusion_matrix(split.train_y, r.model.predict(split.train_x));
  r.test = confusion_matrix(split.test_y, r.model.predict(split.test_x));
  for (int j : r.model.support()) r.selected_features.push_back(data.columns[static_cast<std::size_t>(j)]);
  return r;
}

std::vector<std::string> lasso_support_at_sparsity(const ExperimentConfig& cfg, int target,
                                                   int grid_points) {
  const ExperimentData data = generate_experiment_data(cfg);
  const SplitMatrices split = standardized_split(data);
  const double lmax = lambda1_max(split.train_x, split.train_y);
  // geometric grid from lmax down to lmax * 1e-4
  for (int g = 1; g <= grid_points; ++g) {
    const double lambda = lmax * std::pow(1e-4, static_cast<double>(g) / grid_points);
    const LogisticModel m = logistic_fit(split.train_x, split.train_y, ElasticNet{lambda, cfg.lambda2});
    const auto support = m.support();
    if (static_cast<int>(support.size()) >= target) {
      std::vector<std::string> names;
      for (int j : support) names.push_back(data.columns[static_cast<std::size_t>(j)]);
      return names;
    }
  }
  return {};
}

}  // namespace pathsig
