#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace pathsig {

struct ElasticNet {
  double l1 = 0.0;  // λ1·‖w‖1
  double l2 = 0.0;  // λ2·‖w‖²/2
};

struct FitOptions {
  double tolerance = 1e-6;  // on the norm of the unit-step proximal gradient mapping
  int max_iterations = 10000;
  bool record_objective = false;
};

/// Binary logistic regression with an unpenalized intercept.
struct LogisticModel {
  Eigen::VectorXd weights;
  double intercept = 0.0;
  ElasticNet penalty;
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective;  // per iteration, when recorded

  Eigen::VectorXd predict_proba(const Eigen::MatrixXd& x) const;
  std::vector<int> predict(const Eigen::MatrixXd& x) const;
  /// Indices of weights that are exactly nonzero.
  std::vector<int> support() const;
};

/// Penalized mean logistic loss at (weights, intercept).
double logistic_objective(const Eigen::MatrixXd& x, std::span<const int> y,
                          const Eigen::VectorXd& weights, double intercept,
                          const ElasticNet& penalty);

/// Minimizes mean logistic loss + λ1‖w‖1 + λ2‖w‖²/2 by proximal Newton
/// steps (coordinate descent on the local quadratic model) with a
/// backtracking line search, starting from w = 0 and the base-rate log-odds
/// intercept. Labels must be 0/1 with both classes present.
LogisticModel logistic_fit(const Eigen::MatrixXd& x, std::span<const int> y,
                           const ElasticNet& penalty, const FitOptions& options = {});

/// Smallest λ1 at which every weight is zero (for λ2 = 0).
double lambda1_max(const Eigen::MatrixXd& x, std::span<const int> y);

struct ConfusionMatrix {
  long tp = 0;
  long tn = 0;
  long fp = 0;
  long fn = 0;

  long total() const { return tp + tn + fp + fn; }
  double accuracy() const {
    return total() == 0 ? 0.0 : static_cast<double>(tp + tn) / static_cast<double>(total());
  }
};

ConfusionMatrix confusion_matrix(std::span<const int> truth, std::span<const int> predicted);

}  // namespace pathsig
