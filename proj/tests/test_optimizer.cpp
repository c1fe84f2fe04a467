#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ramsey/optimize.hpp"
#include "ramsey/stage.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

// Minimum sampled psi of a piecewise profile on a grid shifted half a step
// off the one the explorer itself used, to catch grid artifacts.
double shifted_min_psi(const PiecewiseResult& pw) {
  double worst = 1e9;
  for (const PiecewiseInterval& iv : pw.intervals) {
    double width = iv.lam_right - iv.lam_left;
    for (int j = 0; j < 100; ++j) {
      double lam = iv.lam_left + width * (j + 0.5) / 100.0;
      double f = iv.f_left + iv.slope * (lam - iv.lam_left);
      double x = std::pow(1.0 - std::exp(-iv.slope), 1.0 / (1.0 - iv.m)) *
                 (1.0 - iv.m);
      double psi = f + 0.5 * std::log(x) +
                   0.5 * lam * (std::log(iv.m) + std::log(1.0 - x));
      worst = std::min(worst, psi);
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("grid search finds the smallest verifiable correction") {
  ProvenAlpha start{Alpha::zero(), -1};
  BetaSearchResult res = search_min_beta(start, Rational(1, 100));
  REQUIRE(res.best_beta.has_value());
  CHECK(*res.best_beta == Rational(2, 25));
  // The probe record demonstrates the bisection invariant: everything
  // below the answer failed, everything probed at or above it passed.
  for (const BetaProbe& probe : res.probes) {
    if (probe.beta < *res.best_beta) {
      CHECK(probe.status == Status::Fail);
    } else {
      CHECK(probe.status == Status::Pass);
    }
  }
}

TEST_CASE("feasibility is monotone in the correction coefficient") {
  // A slightly larger beta than a passing one still passes.
  ProvenAlphaSet axioms;
  VerificationPolicy pol;
  ExponentStage above{Alpha::zero(), Rational(2, 25) + Rational(1, 200)};
  CHECK(verify_stage(above, axioms, pol).status == Status::Pass);
  ExponentStage below{Alpha::zero(), Rational(2, 25) - Rational(1, 100)};
  CHECK(verify_stage(below, axioms, pol).status == Status::Fail);
}

TEST_CASE("iteration trace json round trips through the documented shape") {
  IterationTrace trace = run_iteration(1, Rational(1, 100));
  CHECK(trace.steps.size() == 1);
  CHECK(trace.steps[0].stage.beta == Rational(2, 25));
  CHECK(trace.steps[0].base.to_double() ==
        doctest::Approx(3.869732).epsilon(1e-5));
  CHECK(trace.status == Status::Pass);
  nlohmann::json j = to_json(trace);
  CHECK(j["steps"].size() == 1);
  CHECK(j["steps"][0]["beta"] == "2/25");
  CHECK(j["steps"][0]["search"]["best_beta"] == "2/25");
  CHECK(j["stop_reason"] == "max_stages");
  CHECK(j["status"] == "pass");
}

TEST_CASE("two-interval piecewise profile matches its frozen optimum") {
  PiecewiseResult pw = piecewise_explore(2, 0.01, 0.01);
  REQUIRE(pw.feasible);
  REQUIRE(pw.intervals.size() == 2);
  CHECK(pw.base == doctest::Approx(18.541287).epsilon(1e-4));
  CHECK(pw.intervals[0].slope == doctest::Approx(5.79).epsilon(1e-9));
  CHECK(pw.intervals[0].m == doctest::Approx(0.01).epsilon(1e-9));
  CHECK(pw.intervals[1].m == doctest::Approx(0.10).epsilon(1e-9));
}

TEST_CASE("ten-interval piecewise profile, frozen base and shifted recheck") {
  PiecewiseResult pw = piecewise_explore(10, 0.01, 0.01);
  REQUIRE(pw.feasible);
  REQUIRE(pw.intervals.size() == 10);
  CHECK(pw.base == doctest::Approx(4.246096).epsilon(1e-4));
  CHECK(pw.intervals[0].slope == doctest::Approx(9.66).epsilon(1e-9));
  // Breakpoints continuous: each f_left equals the previous segment's end.
  for (size_t i = 1; i < pw.intervals.size(); ++i) {
    const PiecewiseInterval& prev = pw.intervals[i - 1];
    double f_end = prev.f_left + prev.slope * (prev.lam_right - prev.lam_left);
    CHECK(pw.intervals[i].f_left == doctest::Approx(f_end).epsilon(1e-9));
    CHECK(pw.intervals[i].lam_left == doctest::Approx(prev.lam_right));
    // The step-distribution constant never decreases along the profile.
    CHECK(pw.intervals[i].m + 1e-12 >= prev.m);
  }
  // Feasibility is not an artifact of the explorer's own sample grid.
  CHECK(shifted_min_psi(pw) > -1e-3);
}

TEST_CASE("finer grids push the two-sided profile base toward 4") {
  PiecewiseResult pw = piecewise_explore(16, 0.005, 0.001);
  REQUIRE(pw.feasible);
  CHECK(pw.base == doctest::Approx(4.008832).epsilon(1e-4));
  CHECK(pw.base > 4.0);
  CHECK(pw.intervals[0].slope == doctest::Approx(7.395).epsilon(1e-6));
  CHECK(pw.intervals[0].m == doctest::Approx(0.002).epsilon(1e-9));
}

TEST_CASE("infeasible piecewise request is reported, not patched") {
  // A slope cap below what the first interval needs cannot keep psi
  // positive near zero.
  PiecewiseResult pw = piecewise_explore(4, 0.01, 0.01, 2.0);
  CHECK_FALSE(pw.feasible);
  CHECK(pw.infeasible_index == 0);
  CHECK(pw.best_violation < 0);
}

TEST_CASE("smooth family fit reports an honest residual") {
  PiecewiseResult pw = piecewise_explore(10, 0.01, 0.01);
  SmoothFit fit = fit_beta(pw);
  CHECK(fit.beta >= 0);
  CHECK(fit.residual > 0);
  // The greedy profile is far from the smooth family; the fit must not
  // pretend otherwise.
  CHECK(fit.residual > 0.01);
  // Snapping works: beta is a multiple of the default 1/1000 grid.
  Rational snapped = fit.beta * 1000;
  CHECK(snapped.get_den() == 1);
}

TEST_CASE("piecewise csv lists every breakpoint") {
  PiecewiseResult pw = piecewise_explore(2, 0.01, 0.01);
  std::string csv = to_csv(pw);
  std::istringstream in(csv);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 4);  // header + 2 breakpoints + final end point
  CHECK(csv.rfind("breakpoint,F,M\n", 0) == 0);
}

TEST_CASE("piecewise explorer validates its arguments") {
  CHECK_THROWS_AS(piecewise_explore(0, 0.01, 0.01), PreconditionError);
  CHECK_THROWS_AS(piecewise_explore(4, -0.01, 0.01), PreconditionError);
  CHECK_THROWS_AS(piecewise_explore(4, 0.01, 0.0), PreconditionError);
}
