#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pathsig/cde.hpp"
#include "test_support.hpp"

using namespace pathsig;
using pathsig::testing::random_path;
using pathsig::testing::uniform;

namespace {

Eigen::MatrixXd random_matrix(int e, double spectral_norm) {
  Eigen::MatrixXd m(e, e);
  for (int r = 0; r < e; ++r) {
    for (int c = 0; c < e; ++c) m(r, c) = uniform(-1, 1);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return m * (spectral_norm / svd.singularValues()(0));
}

LinearVectorField random_field(int d, int e, double norm) {
  std::vector<Eigen::MatrixXd> ms;
  for (int i = 0; i < d; ++i) ms.push_back(random_matrix(e, norm));
  return LinearVectorField(ms);
}

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

std::vector<double> grid01(int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
  return g;
}

const PiecewisePath kUnitLine{{0.0}, {1.0}};
const LinearVectorField kIdentity({Eigen::MatrixXd::Identity(1, 1)});

}  // namespace

TEST_CASE("picard_exponential") {
  const PicardTrace t2 = picard_exponential(2, grid01(2001));
  CHECK(t2.iterations() == 2);
  CHECK(std::abs(t2.iterates[2].back() - 2.5) < 1e-6);

  const PicardTrace t0 = picard_exponential(0, grid01(11));
  for (double v : t0.iterates[0]) CHECK(v == 1.0);

  const PicardTrace t10 = picard_exponential(10, grid01(2001));
  CHECK(std::abs(t10.iterates[10].back() - std::exp(1.0)) < 1e-6);

  // each iterate matches the Taylor polynomial of the matching degree
  const PicardTrace t5 = picard_exponential(5, grid01(4001));
  for (int k = 0; k <= 5; ++k) {
    double taylor = 0, term = 1;
    for (int n = 0; n <= k; ++n) {
      taylor += term;
      term /= (n + 1);
    }
    CHECK(std::abs(t5.iterates[static_cast<std::size_t>(k)].back() - taylor) < 1e-6);
  }

  CHECK_THROWS_AS(picard_exponential(-1, grid01(5)), std::invalid_argument);
  CHECK_THROWS_AS(picard_exponential(2, std::vector<double>{0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(picard_exponential(2, std::vector<double>{0.0, 1.0, 0.5}), std::invalid_argument);
}

TEST_CASE("linear_cde_solve_signature") {
  SUBCASE("zero field returns y0") {
    const LinearVectorField zero({Eigen::MatrixXd::Zero(2, 2), Eigen::MatrixXd::Zero(2, 2)});
    const Eigen::VectorXd y0 = vec({1.5, -2.0});
    const PiecewisePath x = random_path(2, 4);
    CHECK((linear_cde_solve_signature(zero, x, y0, 5) - y0).norm() == 0.0);
    CHECK((euler_cde_oracle(zero, x, y0, 100) - y0).norm() == 0.0);
  }
  SUBCASE("exponential") {
    const Eigen::VectorXd y = linear_cde_solve_signature(kIdentity, kUnitLine, vec({1.0}), 12);
    CHECK(std::abs(y(0) - std::exp(1.0)) < 1e-8);
    const Eigen::VectorXd ye = euler_cde_oracle(kIdentity, kUnitLine, vec({1.0}), 1000000);
    CHECK(std::abs(ye(0) - std::exp(1.0)) < 1e-5);
  }
  SUBCASE("random instances agree with the Euler oracle") {
    for (int trial = 0; trial < 5; ++trial) {
      const LinearVectorField v = random_field(2, 2, 0.5);
      const PiecewisePath x = random_path(2, 3, 0.5);
      const Eigen::VectorXd y0 = vec({uniform(-1, 1), uniform(-1, 1)});
      const Eigen::VectorXd sig = linear_cde_solve_signature(v, x, y0, 8);
      const Eigen::VectorXd euler = euler_cde_oracle(v, x, y0, 100000);
      CHECK((sig - euler).cwiseAbs().maxCoeff() < 1e-5);
    }
  }
  SUBCASE("the reversed letter order disagrees on non-commuting fields") {
    Eigen::MatrixXd a(2, 2), b(2, 2);
    a << 0, 0.5, 0, 0;
    b << 0, 0, 0.5, 0;
    const LinearVectorField v({a, b});
    const PiecewisePath x{{0, 0}, {1, 0}, {1, 1}};
    const Eigen::VectorXd y0 = vec({1.0, 1.0});
    const Eigen::VectorXd euler = euler_cde_oracle(v, x, y0, 100000);
    const Eigen::VectorXd good = linear_cde_solve_signature(v, x, y0, 8, WordOrder::EarliestFirst);
    const Eigen::VectorXd bad = linear_cde_solve_signature(v, x, y0, 8, WordOrder::LatestFirst);
    CHECK((good - euler).cwiseAbs().maxCoeff() < 1e-5);
    CHECK((bad - euler).cwiseAbs().maxCoeff() > 1e-2);
  }
  SUBCASE("truncation error shrinks with depth") {
    for (int trial = 0; trial < 5; ++trial) {
      const LinearVectorField v = random_field(2, 3, 0.5);
      const PiecewisePath x = random_path(2, 4, 0.5);
      const Eigen::VectorXd y0 = vec({1.0, 0.0, -1.0});
      const Eigen::VectorXd ref = linear_cde_solve_signature(v, x, y0, 14);
      double prev = INFINITY;
      for (int depth = 1; depth <= 10; ++depth) {
        const double err = (linear_cde_solve_signature(v, x, y0, depth) - ref).norm();
        CHECK(err <= prev + 1e-12);
        prev = err;
      }
    }
  }
  SUBCASE("equal signatures give equal solutions") {
    const LinearVectorField v = random_field(2, 2, 0.5);
    const PiecewisePath x = random_path(2, 4, 0.5);
    const Eigen::VectorXd y0 = vec({0.3, -0.7});
    const Eigen::VectorXd base = linear_cde_solve_signature(v, x, y0, 6);
    CHECK((linear_cde_solve_signature(v, x, y0, 6) - base).norm() == 0.0);
    const PiecewisePath refined = reparametrize_uniform(x, 37);
    CHECK((linear_cde_solve_signature(v, refined, y0, 6) - base).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((linear_cde_solve_signature(v, signature(x, 6), y0) - base).norm() == 0.0);
  }
  SUBCASE("errors") {
    const LinearVectorField v = random_field(2, 2, 0.5);
    CHECK_THROWS_AS(linear_cde_solve_signature(v, kUnitLine, vec({1, 1}), 3), std::invalid_argument);
    CHECK_THROWS_AS(linear_cde_solve_signature(v, random_path(2, 3), vec({1}), 3), std::invalid_argument);
    CHECK_THROWS_AS(euler_cde_oracle(v, random_path(2, 5), vec({1, 1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(LinearVectorField({}), std::invalid_argument);
    CHECK_THROWS_AS(LinearVectorField({Eigen::MatrixXd::Zero(2, 2), Eigen::MatrixXd::Zero(3, 3)}),
                    std::invalid_argument);
  }
}
