#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "hypcolor/bounds.hpp"
#include "hypcolor/checkerboard.hpp"

using namespace hypcolor;

namespace {

const double kLog2 = std::log(2.0), kLog3 = std::log(3.0), kLog4 = std::log(4.0);

// Widest base for which the rectangle diameter stays <= d, by bisection on
// the diameter itself.
double bisect_width(double d, double h) {
  double lo = 0.0, hi = d;
  if (rect_diameter(hi, h) <= d) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (rect_diameter(mid, h) <= d ? lo : hi) = mid;
  }
  return lo;
}

double residual(double d) {
  return (1.0 + 2.0 * std::exp(d / 2.0) * std::cosh(d) - std::exp(d)) / 2.0 - std::cosh(d);
}

long long large_d(double d) {
  return std::min(5 * (static_cast<long long>(std::ceil(d / kLog4)) + 1),
                  4 * (static_cast<long long>(std::ceil(d / kLog3)) + 1));
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("w_of_h examples and bisection oracle") {
  CHECK(w_of_h(1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
  const double w = w_of_h(0.3, 0.15);
  CHECK(w < 0.3);
  CHECK(rect_diameter(w, 0.15) == doctest::Approx(0.3).epsilon(1e-9));
  for (double d : {0.2, 0.5, 1.0, 3.0, 8.0}) {
    for (double frac : {0.05, 0.2, 0.5, 0.9}) {
      const double h = frac * d;
      CAPTURE(d);
      CAPTURE(h);
      CHECK(w_of_h(d, h) == doctest::Approx(bisect_width(d, h)).epsilon(1e-9));
    }
  }
  CHECK(w_of_h(0.7, 1e-9) == doctest::Approx(0.7).epsilon(1e-9));
  CHECK_THROWS_AS(w_of_h(1.0, 1.5), std::domain_error);
}

TEST_CASE("k_of_h examples") {
  CHECK(k_of_h(1.0, 0.5) == 2);
  CHECK(k_of_h(2.0 * kLog3, kLog3) == 3);
  for (double d : {1.0, 2.0, 5.0}) {
    const double h = 0.3;
    if (w_of_h(d, h) == d) CHECK(k_of_h(d, h) == static_cast<int>(std::ceil(std::exp(h))));
  }
}

TEST_CASE("optimizer examples") {
  CHECK(optimize_checkerboard(1.0).value == 9);
  CHECK(optimize_checkerboard(2.0).value <= 12);
  CHECK(optimize_checkerboard(10.0).value <= 45);
  CHECK(optimize_checkerboard(0.01).value == 9);
  CHECK(optimize_checkerboard(2.0).source == BoundSource::OPTIMIZED);
}

TEST_CASE("closed form examples") {
  // The 9-colour form holds at 1.3, but 1.3 also lies in the fundamental
  // domain window, and the minimum over applicable forms is 8 there.
  const auto at13 = applicable_closed_forms(1.3);
  REQUIRE_FALSE(at13.empty());
  CHECK(at13.front().source == BoundSource::SMALL_D_9);
  CHECK(at13.front().value == 9);
  CHECK(closed_form_bound(1.3).value == 8);
  CHECK(closed_form_bound(1.0).value == 9);
  CHECK(closed_form_bound(1.0).source == BoundSource::SMALL_D_9);
  CHECK(closed_form_bound(1.5).value == 8);
  CHECK(closed_form_bound(1.5).source == BoundSource::FUNDDOM_8);
  CHECK(closed_form_bound(100.0).value == 370);
  CHECK(closed_form_bound(100.0).source == BoundSource::LARGE_D_K4);
  CHECK(closed_form_bound(150.0).source == BoundSource::LARGE_D_K4);
  CHECK(closed_form_bound(150.0).value == large_d(150.0));
  CHECK(closed_form_bound(10.0).value == large_d(10.0));
}

TEST_CASE("closed form interval endpoints are inclusive") {
  auto has = [](double d, BoundSource s) {
    for (const auto& b : applicable_closed_forms(d)) {
      if (b.source == s) return true;
    }
    return false;
  };
  CHECK(has(2.0 * kLog2, BoundSource::SMALL_D_9));
  CHECK_FALSE(has(2.0 * kLog2 + 1e-6, BoundSource::SMALL_D_9));
  CHECK(has(2.0 * kLog3, BoundSource::TABLE_12));
  CHECK_FALSE(has(2.0 * kLog3 + 1e-6, BoundSource::TABLE_12));
  CHECK(has(1.22, BoundSource::FUNDDOM_8));
  CHECK(has(1.77, BoundSource::FUNDDOM_8));
  CHECK_FALSE(has(1.7701, BoundSource::FUNDDOM_8));
  CHECK_FALSE(has(1.2199, BoundSource::FUNDDOM_8));
}

TEST_CASE("property: closed forms never go below 4") {
  for (int k = 1; k <= 2000; ++k) {
    const double d = 0.01 * k;
    CHECK(closed_form_bound(d).value >= 4);
  }
}

TEST_CASE("d0 against an independent bisection") {
  double lo = 0.1, hi = 1.0;
  REQUIRE(residual(lo) * residual(hi) < 0.0);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (residual(lo) * residual(mid) <= 0.0 ? hi : lo) = mid;
  }
  const double root = 0.5 * (lo + hi);
  CHECK(std::fabs(solve_d0() - root) <= 1e-12);
  CHECK(std::fabs(solve_d0() - d0_closed_form()) <= 1e-9);
  CHECK(std::fabs(d0_residual(solve_d0())) <= 1e-10);
  CHECK(std::fabs(d0_residual(0.4)) == doctest::Approx(std::fabs(residual(0.4))).epsilon(1e-12));
  CHECK(std::round(solve_d0() * 100.0) == 56.0);
}

TEST_CASE("interval bound at (6, 2)") {
  const IntervalBound ib = interval_upper_bound(6.0, 2.0);
  REQUIRE(ib.applicable);
  const long long k = static_cast<long long>(std::ceil(4.0 * std::sqrt((std::cosh(12.0) - 1) / (std::cosh(6.0) - 1)) - 1e-9));
  CHECK(ib.bound.value == (k + 1) * 13);
  CHECK(ib.bound.source == BoundSource::INTERVAL);
  const double envelope = 2.0 * (2.0 * std::exp(5.5) + 1.0) * 13.0;
  CHECK(ib.envelope == doctest::Approx(envelope).epsilon(1e-12));
  CHECK(static_cast<double>(ib.bound.value) <= envelope);
  REQUIRE(ib.scheme);
  CHECK(validate_scheme(*ib.scheme).ok());
}

TEST_CASE("interval bound envelope formula and degeneration") {
  for (double d : {2.0, 4.0, 10.0}) {
    for (double c : {1.5, 2.0, 3.0}) {
      const IntervalBound ib = interval_upper_bound(d, c);
      CHECK(ib.envelope == doctest::Approx(2.0 * (2.0 * std::exp((c * d - 1) / 2) + 1) * (c * d + 1)).epsilon(1e-12));
      if (ib.applicable) CHECK(static_cast<double>(ib.bound.value) <= ib.envelope);
    }
  }
  // As c -> 1 the horizontal period falls to e^{log 4} = 4 and the strata
  // period to d + 1.
  const IntervalBound near = interval_upper_bound(10.0, 1.0 + 1e-12);
  REQUIRE(near.applicable);
  CHECK(near.bound.value == 5 * 11);
  CHECK(near.bound.value >= closed_form_bound(10.0).value);
}

TEST_CASE("interval clique at (6, 2)") {
  const CliqueWitness w = interval_clique_points(6.0, 2.0);
  const double theta = 2.0 * std::asin(std::sinh(3.0) / std::sinh(6.0));
  CHECK(w.theta == doctest::Approx(theta).epsilon(1e-12));
  CHECK(w.theta == doctest::Approx(0.09937).epsilon(1e-4));
  CHECK(w.size() == static_cast<int>(std::floor(2.0 * std::numbers::pi / theta)));
  CHECK(w.size() == 63);
  CHECK(w.pairwiseOk);
  int pairs = 0, bad = 0;
  for (int a = 0; a < w.size(); ++a) {
    for (int b = a + 1; b < w.size(); ++b) {
      const double t = hyp_distance(w.points[static_cast<std::size_t>(a)], w.points[static_cast<std::size_t>(b)]);
      bad += t < 6.0 - 1e-9 || t > 12.0 + 1e-9;
      ++pairs;
    }
  }
  CHECK(pairs == 1953);
  CHECK(bad == 0);
  for (int a = 0; a + 1 < w.size(); ++a) {
    CHECK(hyp_distance(w.points[static_cast<std::size_t>(a)], w.points[static_cast<std::size_t>(a + 1)]) ==
          doctest::Approx(6.0).epsilon(1e-9));
  }
  CHECK_THROWS_AS(interval_clique_points(6.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(interval_clique_points(0.0, 2.0), std::invalid_argument);
}

TEST_CASE("property: interval cliques stay in range and grow") {
  for (double d : {1.0, 2.0, 3.0, 5.0}) {
    for (double c : {1.5, 2.0, 2.5}) {
      const CliqueWitness w = interval_clique_points(d, c);
      CAPTURE(d);
      CAPTURE(c);
      CHECK(w.pairwiseOk);
      CHECK(pairwise_in_range(w.points, d, c * d));
      if (d >= 2.0) CHECK(static_cast<double>(w.size()) >= 2.0 * std::exp((c - 1) * d / 2));
    }
  }
}

TEST_CASE("property: optimized schemes are valid and survive sampling") {
  SamplingOptions opt;
  opt.samples = 100'000;
  for (double d : {0.05, 0.1, 0.3, 0.56, 0.7, 1.0, 1.386, 1.5, 2.0, 2.197, 2.5, 2.772, 3.0, 3.296, 3.466,
                   4.0, 5.0, 6.0, 7.5, 9.0, 10.0, 12.0, 14.0, 16.0, 18.0, 20.0}) {
    CAPTURE(d);
    const BoundResult b = optimize_checkerboard(d);
    REQUIRE(b.params);
    const Scheme s = scheme_from(*b.params, d);
    CHECK(s.palette_size() == b.value);
    CHECK(validate_scheme(s).ok());
    opt.seed = static_cast<std::uint64_t>(d * 1000.0);
    const ViolationReport rep = verify_by_sampling(s, opt);
    CHECK(rep.violationCount == 0);
    // Every closed form except the heptagonal one is itself a checkerboard.
    for (const auto& cf : applicable_closed_forms(d)) {
      if (cf.source != BoundSource::FUNDDOM_8) CHECK(b.value <= cf.value);
    }
  }
}

}  // TEST_SUITE
