#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pathsig/arma.hpp"
#include "pathsig/logistic.hpp"

namespace pathsig {

struct ExperimentConfig {
  std::uint64_t seed = 42;
  double lambda1 = 0.01;
  double lambda2 = 0.0;
  int streams_per_class = 500;
  int depth = 2;
  double train_fraction = 0.7;
  bool shuffle_labels = false;  // null experiment
  ArmaSpec class0 = kArmaClass0;
  ArmaSpec class1 = kArmaClass1;
};

/// Raw material of the experiment: unstandardized cumsum lead-lag signature
/// features, labels, and a stratified train/test split.
struct ExperimentData {
  std::vector<std::string> columns;
  Eigen::MatrixXd features;
  std::vector<int> labels;
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> test_rows;
};

ExperimentData generate_experiment_data(const ExperimentConfig& cfg);

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<std::string> columns;
  LogisticModel model;
  ConfusionMatrix train;
  ConfusionMatrix test;
  std::vector<std::string> selected_features;
};

/// Generates both ARMA classes, embeds each stream with cumsum + lead-lag,
/// takes the depth-L signature without its constant term, standardizes on
/// the training rows, fits the penalized logistic model and scores both splits.
ExperimentResult run_arma_experiment(const ExperimentConfig& cfg);

/// Walks a descending λ1 grid from lambda1_max and returns the support
/// (column names) of the first model with at least `target` nonzero weights.
std::vector<std::string> lasso_support_at_sparsity(const ExperimentConfig& cfg, int target,
                                                   int grid_points = 60);

/// Standardized training and test blocks of an experiment.
struct SplitMatrices {
  Eigen::MatrixXd train_x;
  std::vector<int> train_y;
  Eigen::MatrixXd test_x;
  std::vector<int> test_y;
};
SplitMatrices standardized_split(const ExperimentData& data);

}  // namespace pathsig
