#include "ramsey/optimize.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

Alpha alpha_from_beta(const Rational& beta) {
  if (beta < 0 || beta > make_rational(1, 10)) {
    throw DomainError("beta outside [0, 1/10]");
  }
  return Alpha::einv_multiple(make_rational(17, 100) - beta);
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::Converged:
      return "converged";
    case StopReason::MaxStages:
      return "max_stages";
    default:
      return "verification_failure";
  }
}

BetaSearchResult search_min_beta(const ProvenAlpha& alpha,
                                 const Rational& resolution,
                                 const VerificationPolicy& policy) {
  if (resolution <= 0) throw PreconditionError("resolution must be positive");
  ProvenAlphaSet proven;
  proven.add(alpha);

  BetaSearchResult result;
  auto probe = [&](const Rational& beta) {
    ExponentStage stage{alpha.alpha, beta};
    Status s = verify_stage(stage, proven, policy).status;
    result.probes.push_back(BetaProbe{beta, s});
    return s == Status::Pass;
  };

  Rational top = make_rational(1, 10);
  long grid_max = mpz_class(ceil_rational(top / resolution)).get_si();
  auto beta_at = [&](long i) {
    Rational b = Rational(i) * resolution;
    return b < top ? b : top;
  };

  if (!probe(beta_at(grid_max))) return result;
  long lo = 0, hi = grid_max;
  while (lo < hi) {
    long mid = lo + (hi - lo) / 2;
    if (probe(beta_at(mid))) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  result.best_beta = beta_at(hi);
  return result;
}

IterationTrace run_iteration(int max_stages, const Rational& resolution,
                             const VerificationPolicy& policy) {
  if (max_stages < 1) throw PreconditionError("max_stages must be >= 1");
  IterationTrace trace;
  trace.final_base = Real::of(0, policy.precision);

  ProvenAlpha alpha{Alpha::zero(), -1};
  std::optional<Rational> prev_beta;
  for (int i = 0; i < max_stages; ++i) {
    IterationStep step;
    step.search = search_min_beta(alpha, resolution, policy);
    if (!step.search.best_beta) {
      trace.stop_reason = StopReason::VerificationFailure;
      trace.status = Status::Fail;
      trace.steps.push_back(std::move(step));
      return trace;
    }
    Rational beta = *step.search.best_beta;
    step.stage = ExponentStage{alpha.alpha, beta};

    ProvenAlphaSet proven;
    proven.add(alpha);
    step.report = verify_stage(step.stage, proven, policy);
    step.base = diagonal_base(step.stage, policy.precision);

    bool converged = prev_beta && *prev_beta - beta < resolution;
    if (!converged && i + 1 < max_stages) {
      DominationReport handoff = verify_linear_domination(beta, policy);
      if (handoff.status != Status::Pass) {
        trace.stop_reason = StopReason::VerificationFailure;
        trace.status = handoff.status;
        step.handoff = std::move(handoff);
        trace.steps.push_back(std::move(step));
        return trace;
      }
      alpha = ProvenAlpha{handoff.alpha_next, i};
      step.handoff = std::move(handoff);
    }

    trace.final_base = step.base;
    trace.steps.push_back(std::move(step));
    prev_beta = beta;
    if (converged) {
      trace.stop_reason = StopReason::Converged;
      trace.status = Status::Pass;
      return trace;
    }
  }
  trace.stop_reason = StopReason::MaxStages;
  trace.status = Status::Pass;
  return trace;
}

namespace {

// Float model of the stage functions used only by the uncertified explorer.
double x_of(double slope, double m) {
  double u = 1.0 - std::exp(-slope);
  if (!(u > 0) || !(m > 0) || !(m < 1)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return std::pow(u, 1.0 / (1.0 - m)) * (1.0 - m);
}

// Smallest sampled psi over the interval's 100-point grid, or -inf if X
// leaves (0,1). Sampling is left-exclusive: the left endpoint belongs to
// the previous interval (and lambda = 0 is singular).
double min_sampled_psi(double lam_left, double width, double f_left,
                       double slope, double m) {
  double x = x_of(slope, m);
  if (!(x > 0) || !(x < 1)) {
    return -std::numeric_limits<double>::infinity();
  }
  double log_x = std::log(x);
  double log_m = std::log(m);
  double log_y = std::log(1.0 - x);
  double worst = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= 100; ++j) {
    double lam = lam_left + width * j / 100.0;
    double f = f_left + slope * (lam - lam_left);
    double psi = f + 0.5 * (log_x + lam * (log_m + log_y));
    worst = std::min(worst, psi);
  }
  return worst;
}

}  // namespace

PiecewiseResult piecewise_explore(int n_intervals, double slope_resolution,
                                  double m_resolution, double slope_max) {
  if (n_intervals < 2) throw PreconditionError("need at least 2 intervals");
  if (!(slope_resolution > 0) || !(m_resolution > 0) || !(slope_max > 0)) {
    throw PreconditionError("grid resolutions must be positive");
  }

  PiecewiseResult result;
  double width = 1.0 / n_intervals;
  double f_left = 0.0;
  long slope_steps = std::lround(slope_max / slope_resolution);
  long m_steps = std::lround(1.0 / m_resolution) - 1;

  for (int i = 0; i < n_intervals; ++i) {
    double lam_left = static_cast<double>(i) / n_intervals;
    bool found = false;
    double best_violation = -std::numeric_limits<double>::infinity();
    PiecewiseInterval chosen;
    for (long si = 1; si <= slope_steps && !found; ++si) {
      double slope = si * slope_resolution;
      for (long mi = 1; mi <= m_steps; ++mi) {
        double m = mi * m_resolution;
        double worst = min_sampled_psi(lam_left, width, f_left, slope, m);
        best_violation = std::max(best_violation, worst);
        if (worst > 0) {
          chosen = PiecewiseInterval{lam_left, lam_left + width, slope, m,
                                     f_left};
          found = true;
          break;
        }
      }
    }
    if (!found) {
      result.infeasible_index = i;
      result.best_violation = best_violation;
      result.feasible = false;
      return result;
    }
    result.intervals.push_back(chosen);
    f_left += chosen.slope * width;
  }
  result.base = std::exp(f_left);
  result.feasible = true;
  return result;
}

SmoothFit fit_beta(const PiecewiseResult& pw, const Rational& snap) {
  if (!pw.feasible || pw.intervals.empty()) {
    throw PreconditionError("cannot fit an infeasible profile");
  }
  double num = 0, den = 0;
  auto f_at = [&](double lam) {
    for (const PiecewiseInterval& iv : pw.intervals) {
      if (lam <= iv.lam_right || &iv == &pw.intervals.back()) {
        return iv.f_left + iv.slope * (lam - iv.lam_left);
      }
    }
    return 0.0;
  };
  int samples = 100;
  for (int j = 1; j <= samples; ++j) {
    double lam = static_cast<double>(j) / samples;
    double entropy = (lam + 1) * std::log(lam + 1) - lam * std::log(lam);
    double correction = f_at(lam) - entropy;
    double fixed = (-0.25 * lam + 0.08 * lam * lam * lam) * std::exp(-lam);
    double g = lam * lam * std::exp(-lam);
    num += g * (correction - fixed);
    den += g * g;
  }
  double beta_hat = den > 0 ? num / den : 0.0;

  SmoothFit fit;
  double snap_d = snap.get_d();
  long snapped = std::lround(beta_hat / snap_d);
  if (snapped < 0) snapped = 0;
  fit.beta = Rational(snapped) * snap;

  double bd = fit.beta.get_d();
  double ss = 0;
  for (int j = 1; j <= samples; ++j) {
    double lam = static_cast<double>(j) / samples;
    double entropy = (lam + 1) * std::log(lam + 1) - lam * std::log(lam);
    double correction = f_at(lam) - entropy;
    double model =
        (-0.25 * lam + bd * lam * lam + 0.08 * lam * lam * lam) *
        std::exp(-lam);
    ss += (correction - model) * (correction - model);
  }
  fit.residual = std::sqrt(ss / samples);
  return fit;
}

std::string to_csv(const PiecewiseResult& pw) {
  std::ostringstream out;
  out << "breakpoint,F,M\n";
  out.precision(12);
  if (pw.intervals.empty()) return out.str();
  for (const PiecewiseInterval& iv : pw.intervals) {
    out << iv.lam_left << "," << iv.f_left << "," << iv.m << "\n";
  }
  const PiecewiseInterval& last = pw.intervals.back();
  double f_end = last.f_left + last.slope * (last.lam_right - last.lam_left);
  out << last.lam_right << "," << f_end << "," << last.m << "\n";
  return out.str();
}

nlohmann::json to_json(const BetaSearchResult& r) {
  nlohmann::json probes = nlohmann::json::array();
  for (const BetaProbe& p : r.probes) {
    probes.push_back(nlohmann::json{{"beta", p.beta.get_str()},
                                    {"status", to_string(p.status)}});
  }
  nlohmann::json j{{"probes", probes}};
  j["best_beta"] =
      r.best_beta ? nlohmann::json(r.best_beta->get_str()) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const IterationTrace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const IterationStep& s : t.steps) {
    nlohmann::json step{{"alpha", s.stage.alpha.to_string()},
                        {"beta", s.stage.beta.get_str()},
                        {"search", to_json(s.search)},
                        {"report", to_json(s.report)},
                        {"base", s.base.to_string()}};
    if (s.handoff) step["handoff"] = to_json(*s.handoff);
    steps.push_back(std::move(step));
  }
  return nlohmann::json{{"steps", steps},
                        {"stop_reason", to_string(t.stop_reason)},
                        {"status", to_string(t.status)},
                        {"final_base", t.final_base.to_string()}};
}

}  // namespace ramsey
