#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsey/stage.hpp"
#include "ramsey/verify.hpp"

namespace ramsey {

/// The offset a stage with this beta licenses for its successor, once
/// verify_linear_domination(beta) has passed: (17/100 - beta)/e.
Alpha alpha_from_beta(const Rational& beta);

struct BetaProbe {
  Rational beta;
  Status status = Status::Inconclusive;
};

struct BetaSearchResult {
  std::optional<Rational> best_beta;  // smallest verifiable beta on the grid
  std::vector<BetaProbe> probes;
};

/// Smallest beta on the grid {0, res, 2*res, ..., 1/10} whose stage
/// (alpha, beta) verifies, found by bisecting the grid: feasibility is
/// monotone in beta because a larger correction only raises psi.
BetaSearchResult search_min_beta(const ProvenAlpha& alpha,
                                 const Rational& resolution,
                                 const VerificationPolicy& policy = {});

enum class StopReason { Converged, MaxStages, VerificationFailure };
std::string to_string(StopReason r);

struct IterationStep {
  ExponentStage stage;
  BetaSearchResult search;
  VerificationReport report;             // for the chosen beta
  std::optional<DominationReport> handoff;
  Real base;
};

struct IterationTrace {
  std::vector<IterationStep> steps;
  StopReason stop_reason = StopReason::MaxStages;
  Status status = Status::Inconclusive;
  Real final_base;
};

/// Alternate beta minimization and offset handoff, starting from offset
/// zero, until the improvement in beta drops below the resolution or
/// max_stages is reached. Offsets are linked to the previous beta by exact
/// rational arithmetic.
IterationTrace run_iteration(int max_stages, const Rational& resolution,
                             const VerificationPolicy& policy = {});

struct PiecewiseInterval {
  double lam_left = 0;
  double lam_right = 0;
  double slope = 0;   // F' on the interval
  double m = 0;       // step-distribution constant on the interval
  double f_left = 0;  // F at the left endpoint
};

struct PiecewiseResult {
  std::vector<PiecewiseInterval> intervals;
  double base = 0;          // e^{F(1)}
  bool feasible = false;    // every sampled point kept psi positive
  int infeasible_index = -1;  // first interval with no feasible pair
  double best_violation = 0;  // largest sampled min-psi seen there
};

/// Greedy float exploration of an n-interval piecewise-linear F on [0, 1]
/// with piecewise-constant M: on each interval take the lexicographically
/// smallest (slope, m) grid pair that keeps X inside (0,1) and psi positive
/// at 100 sample points. A design study, not a certificate.
PiecewiseResult piecewise_explore(int n_intervals, double slope_resolution,
                                  double m_resolution, double slope_max = 12.0);

struct SmoothFit {
  Rational beta;        // least-squares beta snapped to a rational grid
  double residual = 0;  // rms correction gap between profile and fit
};

/// Least-squares fit of the profile's correction F - entropy to the family
/// beta * lambda^2 e^{-lambda} on top of the fixed -lambda/4 + (2/25)
/// lambda^3 terms, snapping beta to multiples of snap.
SmoothFit fit_beta(const PiecewiseResult& pw,
                   const Rational& snap = make_rational(1, 1000));

std::string to_csv(const PiecewiseResult& pw);

nlohmann::json to_json(const BetaSearchResult& r);
nlohmann::json to_json(const IterationTrace& t);

}  // namespace ramsey
