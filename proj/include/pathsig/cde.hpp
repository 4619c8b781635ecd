#pragma once

#include <vector>

#include <Eigen/Dense>

#include "pathsig/path.hpp"
#include "pathsig/signature.hpp"

namespace pathsig {

/// One e×e matrix per driving coordinate: dY = Σ_i V_i Y dX^i.
class LinearVectorField {
 public:
  explicit LinearVectorField(std::vector<Eigen::MatrixXd> matrices);

  int driver_dim() const { return static_cast<int>(matrices_.size()); }
  int state_dim() const { return static_cast<int>(matrices_.front().rows()); }
  const Eigen::MatrixXd& operator[](int i) const { return matrices_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Eigen::MatrixXd> matrices_;
};

/// Order in which the matrices of a word act on the initial state.
enum class WordOrder {
  EarliestFirst,  // S^(i1..ik) multiplies V_ik ... V_i1
  LatestFirst,    // S^(i1..ik) multiplies V_i1 ... V_ik (wrong for non-commuting V)
};

/// Y_T ≈ (I + Σ_{|w|<=L} S^w(X) V_w) y0 using the truncated signature of the driver.
Eigen::VectorXd linear_cde_solve_signature(const LinearVectorField& v, const PiecewisePath& driver,
                                           const Eigen::VectorXd& y0, int depth,
                                           WordOrder order = WordOrder::EarliestFirst);

/// Same, from a precomputed signature.
Eigen::VectorXd linear_cde_solve_signature(const LinearVectorField& v, const SignatureResult& sig,
                                           const Eigen::VectorXd& y0,
                                           WordOrder order = WordOrder::EarliestFirst);

/// Explicit Euler stepping on a uniform refinement of the driver.
Eigen::VectorXd euler_cde_oracle(const LinearVectorField& v, const PiecewisePath& driver,
                                 const Eigen::VectorXd& y0, int steps);

/// Picard iterates for dy/dx = y, y(0) = 1 on a grid starting at 0.
struct PicardTrace {
  std::vector<double> grid;
  std::vector<std::vector<double>> iterates;  // iterates[k][j] = y_k(grid[j])

  int iterations() const { return static_cast<int>(iterates.size()) - 1; }
};

/// Iterates y_k(x) = 1 + ∫_0^x y_{k-1}(t) dt with trapezoid quadrature on `grid`.
PicardTrace picard_exponential(int iterations, std::vector<double> grid);

}  // namespace pathsig
