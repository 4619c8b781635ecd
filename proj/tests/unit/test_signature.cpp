#include <doctest.h>

#include <cmath>

#include "pathsig/embeddings.hpp"
#include "pathsig/signature.hpp"
#include "test_support.hpp"

using namespace pathsig;
using pathsig::testing::random_path;
using pathsig::testing::uniform;
using pathsig::testing::uniform_int;

namespace {

const PiecewisePath kExample{{1, 1}, {3, 4}, {5, 2}, {8, 6}};

}  // namespace

TEST_CASE("signature of the worked example path") {
  const SignatureResult s = signature(kExample, 2);
  const std::vector<double> expected{1, 7, 5, 24.5, 19, 16, 12.5};
  REQUIRE(s.series.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(std::abs(s.series.coeffs()[i] - expected[i]) < 1e-12);
  }
}

TEST_CASE("signature edge cases") {
  SUBCASE("constant path") {
    const PiecewisePath single{{2.0, -1.0}};
    const PiecewisePath repeated{{2.0, -1.0}, {2.0, -1.0}, {2.0, -1.0}};
    for (int depth = 0; depth <= 4; ++depth) {
      CHECK(signature(single, depth).series.max_abs_diff(TensorSeries::unit(2, depth)) == 0.0);
      CHECK(signature(repeated, depth).series.max_abs_diff(TensorSeries::unit(2, depth)) == 0.0);
    }
  }
  SUBCASE("one-dimensional path depends only on the increment") {
    const PiecewisePath p{{0.0}, {0.4}, {0.1}, {1.0}};
    const SignatureResult s = signature(p, 4);
    const std::vector<double> expected{1, 1, 0.5, 1.0 / 6, 1.0 / 24};
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(std::abs(s.series.coeffs()[i] - expected[i]) < 1e-15);
    }
  }
  SUBCASE("empty point list is rejected") {
    CHECK_THROWS_AS(PiecewisePath(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewisePath(2, {1.0, NAN}), std::invalid_argument);
  }
}

TEST_CASE("signature_bruteforce oracle") {
  const PiecewisePath segment{{0, 0}, {2, 3}};
  CHECK(std::abs(signature_bruteforce(segment, Word{1, 2}, 2000) - 3.0) < 0.01);

  const PiecewisePath constant{{1, 1}, {1, 1}, {1, 1}};
  CHECK(signature_bruteforce(constant, Word{1}, 100) == 0.0);
  CHECK(signature_bruteforce(constant, Word{2, 1, 2}, 100) == 0.0);

  CHECK(std::abs(signature_bruteforce(kExample, Word{1, 2}, 4000) - 19.0) < 0.05);
  CHECK(signature_bruteforce(kExample, Word{}, 10) == 1.0);
  CHECK_THROWS_AS(signature_bruteforce(kExample, Word{1, 2, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(signature_bruteforce(kExample, Word{3}, 20), std::invalid_argument);
}

TEST_CASE("signature_of_sampled_function") {
  SUBCASE("parabola (3+t, (3+t)^2) on [0,5]") {
    auto f = [](double t) { return std::vector<double>{3 + t, (3 + t) * (3 + t)}; };
    const SignatureResult s = signature_of_sampled_function(f, 0.0, 5.0, 2000, 3);
    CHECK(s[Word{1}] == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(s[Word{2}] == doctest::Approx(55.0).epsilon(1e-14));
    CHECK(std::abs(s[Word{1, 2}] - 475.0 / 3) < 1e-3);
    CHECK(std::abs(s[Word{2, 1}] - 350.0 / 3) < 1e-3);
    CHECK(std::abs(s[Word{2, 2}] - 3025.0 / 2) < 1e-2);
    CHECK(std::abs(s[Word{1, 1, 1}] - 125.0 / 6) < 1e-3);
  }
  SUBCASE("constant function") {
    auto f = [](double) { return std::vector<double>{1.5, -2.0}; };
    CHECK(signature_of_sampled_function(f, 0, 1, 10, 3).series.max_abs_diff(TensorSeries::unit(2, 3)) == 0.0);
  }
  SUBCASE("(t, t^3) on [-2,2] has level-1 terms (4, 16) at any resolution") {
    auto f = [](double t) { return std::vector<double>{t, t * t * t}; };
    for (int n : {2, 3, 17, 500}) {
      const SignatureResult s = signature_of_sampled_function(f, -2, 2, n, 2);
      CHECK(s[Word{1}] == doctest::Approx(4.0));
      CHECK(s[Word{2}] == doctest::Approx(16.0));
    }
  }
  SUBCASE("errors") {
    auto f = [](double t) { return std::vector<double>{t}; };
    CHECK_THROWS_AS(signature_of_sampled_function(f, 0, 1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(signature_of_sampled_function(f, 1, 1, 5, 2), std::invalid_argument);
    auto bad = [](double t) { return std::vector<double>{t > 0.5 ? INFINITY : t}; };
    CHECK_THROWS_AS(signature_of_sampled_function(bad, 0, 1, 5, 2), std::invalid_argument);
  }
}

TEST_CASE("concat") {
  const PiecewisePath x{{0, 0}, {1, 0}};
  const PiecewisePath y{{0, 0}, {0, 1}};
  CHECK(concat(x, y) == PiecewisePath{{0, 0}, {1, 0}, {1, 1}});

  const PiecewisePath c{{5, 5}, {5, 5}};
  const PiecewisePath xc = concat(x, c);
  CHECK(xc == PiecewisePath{{0, 0}, {1, 0}, {1, 0}});
  CHECK(signature(xc, 3).series.max_abs_diff(signature(x, 3).series) == 0.0);

  CHECK_THROWS_AS(concat(x, PiecewisePath{{1.0}}), std::invalid_argument);

  for (int trial = 0; trial < 50; ++trial) {
    const int d = uniform_int(1, 3);
    const int depth = uniform_int(1, 4);
    const PiecewisePath a = random_path(d, uniform_int(1, 6));
    const PiecewisePath b = random_path(d, uniform_int(1, 6));
    const TensorSeries chen = tensor_mul(signature(a, depth).series, signature(b, depth).series);
    CHECK(signature(concat(a, b), depth).series.max_abs_diff(chen) < 1e-12);
  }
}

TEST_CASE("time_reverse") {
  CHECK(time_reverse(PiecewisePath{{0, 0}, {1, 2}}) == PiecewisePath{{1, 2}, {0, 0}});

  const SignatureResult r = signature(time_reverse(kExample), 2);
  CHECK(r[Word{1}] == doctest::Approx(-7.0));
  CHECK(r[Word{2}] == doctest::Approx(-5.0));

  for (int trial = 0; trial < 50; ++trial) {
    const int d = uniform_int(1, 3);
    const int depth = uniform_int(1, 4);
    const PiecewisePath x = random_path(d, uniform_int(1, 7));
    const TensorSeries prod = tensor_mul(signature(x, depth).series, signature(time_reverse(x), depth).series);
    CHECK(prod.max_abs_diff(TensorSeries::unit(d, depth)) < 1e-12);
  }
}

TEST_CASE("levy_area") {
  CHECK(levy_area(signature(kExample, 2)) == doctest::Approx(1.5));
  CHECK(std::abs(levy_area(signature(PiecewisePath{{0, 0}, {3, -2}}, 3))) < 1e-15);
  const std::vector<double> x{1, 4, 2, 6};
  CHECK(levy_area(signature(lead_lag(x), 2)) == doctest::Approx(-14.5));

  CHECK_THROWS_AS(levy_area(signature(random_path(3, 3), 2)), std::invalid_argument);
  CHECK_THROWS_AS(levy_area(signature(kExample, 1)), std::invalid_argument);
}

TEST_CASE("reparametrize_uniform") {
  SUBCASE("collinear subdivision of a segment") {
    const PiecewisePath seg{{0, 0}, {1, 1}};
    const PiecewisePath r = reparametrize_uniform(seg, 5);
    REQUIRE(r.num_points() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(r.point(i)[0] == doctest::Approx(0.25 * static_cast<double>(i)));
      CHECK(r.point(i)[0] == doctest::Approx(r.point(i)[1]));
    }
    CHECK(signature(r, 4).series.max_abs_diff(signature(seg, 4).series) < 1e-12);
  }
  SUBCASE("example path keeps its signature") {
    const PiecewisePath r = reparametrize_uniform(kExample, 50);
    CHECK(r.num_points() >= 50);
    CHECK(signature(r, 2).series.max_abs_diff(signature(kExample, 2).series) < 1e-12);
  }
  SUBCASE("random paths") {
    for (int trial = 0; trial < 30; ++trial) {
      const int d = uniform_int(1, 3);
      const PiecewisePath x = random_path(d, uniform_int(2, 6));
      const PiecewisePath r = reparametrize_uniform(x, uniform_int(2, 40));
      CHECK(signature(r, 4).series.max_abs_diff(signature(x, 4).series) < 1e-12);
    }
  }
  CHECK_THROWS_AS(reparametrize_uniform(kExample, 1), std::invalid_argument);
}

TEST_CASE("translation invariance") {
  for (int trial = 0; trial < 30; ++trial) {
    const int d = uniform_int(1, 3);
    const PiecewisePath x = random_path(d, uniform_int(1, 6));
    std::vector<double> shifted(x.data().begin(), x.data().end());
    std::vector<double> offset(static_cast<std::size_t>(d));
    for (double& o : offset) o = uniform(-10, 10);
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += offset[i % static_cast<std::size_t>(d)];
    CHECK(signature(PiecewisePath(d, shifted), 4).series.max_abs_diff(signature(x, 4).series) < 1e-12);
  }
}

TEST_CASE("shuffle identity holds on computed signatures") {
  for (int trial = 0; trial < 30; ++trial) {
    const int d = uniform_int(1, 3);
    const int depth = 4;
    const SignatureResult s = signature(random_path(d, uniform_int(2, 6)), depth);
    for (int k = 1; k <= 2; ++k) {
      for (int m = 1; m + k <= depth; ++m) {
        for (const Word& i : words_of_length(d, k)) {
          for (const Word& j : words_of_length(d, m)) {
            double rhs = 0.0;
            for (const auto& [w, mult] : shuffle(i, j)) rhs += static_cast<double>(mult) * s[w];
            CHECK(std::abs(s[i] * s[j] - rhs) < 1e-9);
          }
        }
      }
    }
  }
}

TEST_CASE("Chen fold agrees with the Riemann-sum oracle") {
  for (int trial = 0; trial < 5; ++trial) {
    const PiecewisePath x = random_path(2, 4);
    const SignatureResult s = signature(x, 3);
    for (int k = 1; k <= 3; ++k) {
      for (const Word& w : words_of_length(2, k)) {
        CHECK(std::abs(signature_bruteforce(x, w, 4000) - s[w]) < 0.05);
      }
    }
  }
}
