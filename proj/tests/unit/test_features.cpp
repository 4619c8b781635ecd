#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pathsig/features.hpp"
#include "pathsig/signature.hpp"
#include "test_support.hpp"

using namespace pathsig;
using pathsig::testing::random_values;
using pathsig::testing::uniform_int;

namespace {

const std::vector<double> kStream{1, 4, 2, 6};

// Direct population statistics, the oracle for the signature route.
MeanVar direct_stats(const std::vector<double>& x) {
  double m = 0, m2 = 0;
  for (double v : x) {
    m += v;
    m2 += v * v;
  }
  const double n = static_cast<double>(x.size());
  return {m / n, m2 / n - (m / n) * (m / n)};
}

void check_column_moments(const Eigen::MatrixXd& rows, double tol) {
  const auto n = static_cast<double>(rows.rows());
  for (Eigen::Index j = 0; j < rows.cols(); ++j) {
    const double mean = rows.col(j).sum() / n;
    const double sd = std::sqrt((rows.col(j).array() - mean).square().sum() / n);
    CHECK(std::abs(mean) < tol);
    CHECK(std::abs(sd - 1.0) < tol);
  }
}

}  // namespace

TEST_CASE("quadratic_variation") {
  CHECK(quadratic_variation(kStream) == 29.0);
  CHECK(quadratic_variation(std::vector<double>{2, 2, 2}) == 0.0);
  CHECK(quadratic_variation(std::vector<double>{5}) == 0.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_values(uniform_int(2, 30));
    CHECK(std::abs(std::abs(levy_area(signature(lead_lag(x), 2))) - 0.5 * quadratic_variation(x)) < 1e-9);
  }
}

TEST_CASE("cumsum_leadlag_level2") {
  const LeadLagLevel2 t = cumsum_leadlag_level2(kStream);
  CHECK(t.s1 == 13.0);
  CHECK(t.s11 == 84.5);
  CHECK(t.s12 == 56.0);
  CHECK(t.s21 == 113.0);

  const LeadLagLevel2 z = cumsum_leadlag_level2(std::vector<double>{0, 0, 0});
  CHECK(z.s1 == 0.0);
  CHECK(z.s11 == 0.0);
  CHECK(z.s12 == 0.0);
  CHECK(z.s21 == 0.0);

  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_values(uniform_int(1, 50));
    const LeadLagLevel2 c = cumsum_leadlag_level2(x);
    const SignatureResult s = signature(lead_lag(cumsum_basepoint(x)), 2);
    CHECK(std::abs(c.s1 - s[Word{1}]) < 1e-9);
    CHECK(std::abs(c.s1 - s[Word{2}]) < 1e-9);
    CHECK(std::abs(c.s11 - s[Word{1, 1}]) < 1e-9);
    CHECK(std::abs(c.s11 - s[Word{2, 2}]) < 1e-9);
    CHECK(std::abs(c.s12 - s[Word{1, 2}]) < 1e-9);
    CHECK(std::abs(c.s21 - s[Word{2, 1}]) < 1e-9);
  }
}

TEST_CASE("mean_var_from_sig") {
  const LeadLagLevel2 t = cumsum_leadlag_level2(kStream);
  const MeanVar mv = mean_var_from_sig(t.s12, t.s21, t.s1, kStream.size());
  CHECK(std::abs(mv.mean - 3.25) < 1e-12);
  CHECK(std::abs(mv.variance - 3.6875) < 1e-12);

  const std::vector<double> c(7, 2.5);
  const LeadLagLevel2 tc = cumsum_leadlag_level2(c);
  const MeanVar mc = mean_var_from_sig(tc.s12, tc.s21, tc.s1, c.size());
  CHECK(std::abs(mc.mean - 2.5) < 1e-12);
  CHECK(std::abs(mc.variance) < 1e-12);

  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_values(uniform_int(1, 50));
    const SignatureResult s = signature(lead_lag(cumsum_basepoint(x)), 2);
    const MeanVar got = mean_var_from_sig(s[Word{1, 2}], s[Word{2, 1}], s[Word{1}], x.size());
    const MeanVar want = direct_stats(x);
    CHECK(std::abs(got.mean - want.mean) < 1e-9);
    CHECK(std::abs(got.variance - want.variance) < 1e-9);
  }

  CHECK_THROWS_AS(mean_var_from_sig(1, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("bare_leadlag_level2") {
  const BareLeadLagComparison b = bare_leadlag_level2(kStream);
  CHECK(b.pipeline.s1 == 5.0);
  CHECK(b.pipeline.s11 == 12.5);
  CHECK(b.pipeline.s12 == -2.0);
  CHECK(b.pipeline.s21 == 27.0);
  // the printed variant uses the plain sum of increments in place of QV
  CHECK(b.printed_formula.s12 == 15.0);
  CHECK(b.printed_formula.s21 == 10.0);

  const BareLeadLagComparison c = bare_leadlag_level2(std::vector<double>{4, 4, 4});
  CHECK(c.pipeline.s1 == 0.0);
  CHECK(c.pipeline.s11 == 0.0);
  CHECK(c.pipeline.s12 == 0.0);
  CHECK(c.pipeline.s21 == 0.0);

  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_values(uniform_int(2, 30));
    const LeadLagLevel2 p = bare_leadlag_level2(x).pipeline;
    CHECK(std::abs(p.s1 * p.s1 - (p.s12 + p.s21)) < 1e-9);
  }
  CHECK_THROWS_AS(bare_leadlag_level2(std::vector<double>{1}), std::invalid_argument);
}

TEST_CASE("build_feature_matrix") {
  const std::vector<Stream> streams{{{1, 4, 2, 6}, std::nullopt}, {{1, 3, 5, 8}, std::nullopt}};

  SUBCASE("signature shape and columns") {
    const FeatureMatrix fm = build_feature_matrix(streams, FeatureConfig{});
    CHECK(fm.rows.rows() == 2);
    CHECK(fm.rows.cols() == 6);
    CHECK(fm.columns == std::vector<std::string>{"S(1)", "S(2)", "S(1,1)", "S(1,2)", "S(2,1)", "S(2,2)"});
    CHECK(fm.rows(0, 3) == 56.0);
    CHECK(fm.rows(0, 4) == 113.0);
    CHECK(fm.column_means.empty());
    CHECK_FALSE(fm.labels.has_value());
  }
  SUBCASE("log signature shape") {
    FeatureConfig cfg;
    cfg.log_signature = true;
    const FeatureMatrix fm = build_feature_matrix(streams, cfg);
    CHECK(fm.rows.rows() == 2);
    CHECK(fm.rows.cols() == 3);
    CHECK(fm.columns == std::vector<std::string>{"logS(1)", "logS(2)", "logS(1,2)"});
  }
  SUBCASE("other embeddings") {
    FeatureConfig cfg;
    cfg.embedding = Embedding::LeadLagTime;
    cfg.depth = 3;
    CHECK(build_feature_matrix(streams, cfg).rows.cols() == 3 + 9 + 27);
    cfg.embedding = Embedding::Linear;
    cfg.depth = 2;
    const FeatureMatrix fm = build_feature_matrix(streams, cfg);
    CHECK(fm.rows(1, 0) == 3.0);
    CHECK(fm.rows(1, 1) == 7.0);
  }
  SUBCASE("labels are carried") {
    const FeatureMatrix fm = build_feature_matrix(streams, FeatureConfig{}, std::vector<int>{0, 1});
    REQUIRE(fm.labels.has_value());
    CHECK(*fm.labels == std::vector<int>{0, 1});
    CHECK_THROWS_AS(build_feature_matrix(streams, FeatureConfig{}, std::vector<int>{0}), std::invalid_argument);
  }
  SUBCASE("shuffle consistency on each row") {
    std::vector<Stream> many;
    for (int i = 0; i < 20; ++i) many.push_back({random_values(uniform_int(1, 40)), std::nullopt});
    const FeatureMatrix fm = build_feature_matrix(many, FeatureConfig{});
    for (Eigen::Index r = 0; r < fm.rows.rows(); ++r) {
      CHECK(std::abs(fm.rows(r, 0) * fm.rows(r, 1) - (fm.rows(r, 3) + fm.rows(r, 4))) < 1e-9);
    }
  }
  SUBCASE("standardization") {
    std::vector<Stream> many;
    for (int i = 0; i < 30; ++i) many.push_back({random_values(uniform_int(2, 40)), std::nullopt});
    FeatureConfig cfg;
    cfg.standardize = true;
    const FeatureMatrix fm = build_feature_matrix(many, cfg);
    check_column_moments(fm.rows, 1e-9);
    CHECK(fm.column_means.size() == 6);
    CHECK(fm.column_stds.size() == 6);

    Eigen::MatrixXd again = fm.rows;
    Standardizer::fit(again).apply(again);
    CHECK((again - fm.rows).cwiseAbs().maxCoeff() < 1e-9);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(build_feature_matrix({}, FeatureConfig{}), std::invalid_argument);
    FeatureConfig cfg;
    cfg.depth = 0;
    CHECK_THROWS_AS(build_feature_matrix(streams, cfg), std::invalid_argument);
  }
}

TEST_CASE("Standardizer") {
  Eigen::MatrixXd m(3, 2);
  m << 1, 5, 2, 5, 3, 5;
  const Standardizer st = Standardizer::fit(m);
  CHECK(st.means[0] == doctest::Approx(2.0));
  CHECK(st.stds[0] == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(st.stds[1] == 0.0);
  st.apply(m);
  CHECK(m(0, 1) == 0.0);
  CHECK(m(2, 0) == doctest::Approx(std::sqrt(1.5)));

  Eigen::MatrixXd wrong(1, 3);
  CHECK_THROWS_AS(st.apply(wrong), std::invalid_argument);
  CHECK_THROWS_AS(Standardizer::fit(Eigen::MatrixXd(0, 2)), std::invalid_argument);
}
