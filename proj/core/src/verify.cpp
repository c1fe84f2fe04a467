#include "ramsey/verify.hpp"

#include <chrono>

#include "ramsey/errors.hpp"

namespace ramsey {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

Interval enclose_psi(const ExponentStage& stage, const Interval& lam,
                     mpfr_prec_t prec, StraddleMode mode) {
  StageConsts<Interval> k = make_consts_interval(stage, prec);
  return eval_stage(lam, k, mode).psi;
}

Interval enclose_psi_prime(const ExponentStage& stage, const Interval& lam,
                           mpfr_prec_t prec) {
  StageConsts<Dual<Interval>> k = make_consts_dual(stage, prec);
  Dual<Interval> v = make_variable(lam, Interval::of(1L, prec));
  return eval_stage(v, k, StraddleMode::Error).psi.der;
}

namespace {

struct BisectionState {
  const EncloseFn& f;
  const BisectionSettings& s;
  ConditionReport report;
  long evals = 0;
  bool out_of_budget = false;

  void note_leaf(const Interval& enc, int depth) {
    ++report.leaves;
    if (depth > report.deepest) report.deepest = depth;
    if (!report.certified_min || enc.lo() < *report.certified_min) {
      report.certified_min = enc.lo();
    }
  }

  void note_undecided(const Rational& lo, const Rational& hi,
                      const std::optional<Interval>& enc,
                      const std::string& note) {
    if (report.witness) return;  // keep the first unresolved spot
    report.witness = FloorWitness{lo, hi, report.name, enc, note};
  }

  Status recurse(const Rational& lo, const Rational& hi, int depth) {
    if (evals >= s.eval_budget) {
      out_of_budget = true;
      note_undecided(lo, hi, std::nullopt, "evaluation budget exhausted");
      return Status::Inconclusive;
    }
    ++evals;
    std::optional<Interval> enc;
    std::string why;
    try {
      enc = f(lo, hi, s.precision);
    } catch (const XUndefinedError& e) {
      why = e.what();
    } catch (const BranchBoundaryError& e) {
      why = e.what();
    } catch (const DomainError& e) {
      why = e.what();
    }
    if (enc) {
      if (enc->lo().cmp(s.floor_value) > 0) {
        note_leaf(*enc, depth);
        return Status::Pass;
      }
      if (enc->hi().cmp(s.floor_value) <= 0) {
        report.witness = FloorWitness{lo, hi, report.name, enc,
                                      "enclosure entirely at or below floor"};
        return Status::Fail;
      }
    }
    if (depth >= s.max_depth || lo == hi || out_of_budget) {
      note_undecided(lo, hi, enc,
                     why.empty() ? "depth limit reached" : why);
      return Status::Inconclusive;
    }
    Rational mid = (lo + hi) / 2;
    Status left = recurse(lo, mid, depth + 1);
    if (left == Status::Fail) return Status::Fail;
    Status right = recurse(mid, hi, depth + 1);
    if (right == Status::Fail) return Status::Fail;
    return (left == Status::Pass && right == Status::Pass)
               ? Status::Pass
               : Status::Inconclusive;
  }
};

}  // namespace

ConditionReport certify_lower_bound(const EncloseFn& f,
                                    const BisectionSettings& settings) {
  if (settings.lo > settings.hi) {
    throw DomainError("bisection domain is empty");
  }
  BisectionState state{f, settings, ConditionReport{}, 0, false};
  state.report.name = settings.quantity;
  state.report.status = state.recurse(settings.lo, settings.hi, 0);
  if (state.report.status == Status::Pass) state.report.witness.reset();
  return state.report;
}

namespace {

EncloseFn psi_encloser(const ExponentStage& stage) {
  return [stage](const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    return enclose_psi(stage, Interval::of(lo, hi, prec), prec,
                       StraddleMode::Hull);
  };
}

EncloseFn psi_prime_encloser(const ExponentStage& stage) {
  return [stage](const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    return enclose_psi_prime(stage, Interval::of(lo, hi, prec), prec);
  };
}

EncloseFn fprime_encloser(const ExponentStage& stage) {
  return [stage](const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    StageConsts<Interval> k = make_consts_interval(stage, prec);
    return stage_Fp(Interval::of(lo, hi, prec), k);
  };
}

// min(X, 1 - X): positive exactly when X lies inside (0, 1).
EncloseFn x_margin_encloser(const ExponentStage& stage) {
  return [stage](const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    StageConsts<Interval> k = make_consts_interval(stage, prec);
    Interval lam = Interval::of(lo, hi, prec);
    Interval x = stage_X(stage_Fp(lam, k), stage_M(lam), k);
    Interval omx = k.one - x;
    return Interval(min(x.lo(), omx.lo()), min(x.hi(), omx.hi()));
  };
}

ConditionReport run_condition(const char* name, const EncloseFn& f,
                              const Rational& lo, const Rational& hi,
                              const Rational& floor_value,
                              const VerificationPolicy& policy) {
  BisectionSettings s{lo,
                      hi,
                      floor_value,
                      policy.max_depth,
                      policy.eval_budget,
                      policy.precision,
                      name};
  ConditionReport r = certify_lower_bound(f, s);
  if (r.status == Status::Inconclusive) {
    s.precision = policy.precision * 2;
    ConditionReport retry = certify_lower_bound(f, s);
    retry.name = name;
    if (retry.status != Status::Inconclusive) return retry;
    return r;
  }
  return r;
}

Status combine(const std::vector<ConditionReport>& conditions) {
  Status out = Status::Pass;
  for (const ConditionReport& c : conditions) {
    if (c.status == Status::Fail) return Status::Fail;
    if (c.status == Status::Inconclusive) out = Status::Inconclusive;
  }
  return out;
}

}  // namespace

VerificationReport verify_stage(const ExponentStage& stage,
                                const ProvenAlphaSet& proven,
                                const VerificationPolicy& policy) {
  auto t0 = std::chrono::steady_clock::now();
  validate_stage(stage);
  if (!(0 < policy.lambda_min && policy.lambda_min < policy.main_left &&
        policy.main_left < 1)) {
    throw PreconditionError("policy domain split must satisfy "
                            "0 < lambda_min < main_left < 1");
  }

  VerificationReport report;
  report.stage = stage;
  report.policy = policy;
  report.near_zero_note =
      "below lambda_min, positivity of psi is an assumption resting on "
      "psi(0+) = 0 and the certified derivative floor, not a certificate";

  report.conditions.push_back(run_condition("fprime_positive",
                                            fprime_encloser(stage),
                                            policy.lambda_min, Rational(1),
                                            Rational(0), policy));

  // Condition 1 is structural: Y is the frontier of the stage offset, so
  // membership needs the offset dominated by a proven one plus X in (0,1).
  bool alpha_ok = false;
  for (const ProvenAlpha& pa : proven.items()) {
    if (cmp(pa.alpha, stage.alpha) >= 0) {
      alpha_ok = true;
      break;
    }
  }
  if (alpha_ok) {
    report.conditions.push_back(
        run_condition("condition1_membership", x_margin_encloser(stage),
                      policy.lambda_min, Rational(1), Rational(0), policy));
  } else {
    ConditionReport c1;
    c1.name = "condition1_membership";
    c1.status = Status::Fail;
    c1.witness = FloorWitness{Rational(0), Rational(0), "alpha", std::nullopt,
                              "stage offset exceeds every proven offset"};
    report.conditions.push_back(std::move(c1));
  }

  report.conditions.push_back(run_condition(
      "condition2_psi", psi_encloser(stage), policy.main_left, Rational(1),
      policy.psi_floor_main, policy));

  ConditionReport near_zero = run_condition(
      "near_zero_derivative", psi_prime_encloser(stage), policy.lambda_min,
      policy.main_left, policy.psi_prime_floor, policy);
  ConditionReport at_min = run_condition(
      "near_zero_derivative", psi_encloser(stage), policy.lambda_min,
      policy.lambda_min, -(policy.psi_prime_floor * policy.lambda_min),
      policy);
  near_zero.leaves += at_min.leaves;
  if (at_min.status == Status::Fail ||
      (at_min.status == Status::Inconclusive &&
       near_zero.status == Status::Pass)) {
    near_zero.status = at_min.status;
    if (!near_zero.witness) near_zero.witness = at_min.witness;
  }
  report.conditions.push_back(std::move(near_zero));

  report.status = combine(report.conditions);
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

DominationReport verify_linear_domination(const Rational& beta,
                                          const VerificationPolicy& policy) {
  if (beta < 0 || beta > make_rational(1, 10)) {
    throw PreconditionError("beta outside [0, 1/10]");
  }
  DominationReport report;
  report.beta = beta;
  report.alpha_next = Alpha::einv_multiple(make_rational(17, 100) - beta);

  // The claimed line has exact contact at both endpoints: at 0 trivially,
  // at 1 because -1/4 + 2/25 = -17/100 makes the correction value there
  // exactly (beta - 17/100)/e.
  if (make_rational(-1, 4) + make_rational(2, 25) != make_rational(-17, 100)) {
    throw InternalContradictionError("endpoint identity broken");
  }

  ExponentStage stage{Alpha::zero(), beta};

  // h(lambda) = (beta - 17/100) e^{-1} lambda - correction(lambda) vanishes
  // at both endpoints; certify h' > 0 near 0, h > 0 in the middle, h' < 0
  // near 1.
  auto h_fn = [stage](const Rational& lo, const Rational& hi,
                      mpfr_prec_t prec) {
    StageConsts<Interval> k = make_consts_interval(stage, prec);
    Interval lam = Interval::of(lo, hi, prec);
    Interval slope = Interval::of(stage.beta - make_rational(17, 100), prec) *
                     exp(Interval::of(-1L, prec));
    return slope * lam - correction_term(lam, k);
  };
  auto hp_fn = [stage](const Rational& lo, const Rational& hi,
                       mpfr_prec_t prec) {
    StageConsts<Interval> k = make_consts_interval(stage, prec);
    Interval lam = Interval::of(lo, hi, prec);
    Interval slope = Interval::of(stage.beta - make_rational(17, 100), prec) *
                     exp(Interval::of(-1L, prec));
    return slope - correction_term_deriv(lam, k);
  };
  auto neg_hp_fn = [hp_fn](const Rational& lo, const Rational& hi,
                           mpfr_prec_t prec) {
    return -hp_fn(lo, hi, prec);
  };

  for (long denom : {16L, 32L, 64L}) {
    Rational s = make_rational(1, denom);
    std::vector<ConditionReport> conditions;
    conditions.push_back(run_condition("h_prime_positive_left", hp_fn,
                                       Rational(0), s, Rational(0), policy));
    conditions.push_back(run_condition("h_positive_middle", h_fn, s,
                                       1 - s, Rational(0), policy));
    conditions.push_back(run_condition("h_prime_negative_right", neg_hp_fn,
                                       1 - s, Rational(1), Rational(0),
                                       policy));
    Status status = combine(conditions);
    if (status != Status::Inconclusive || denom == 64L) {
      report.status = status;
      report.zone = s;
      report.conditions = std::move(conditions);
      break;
    }
  }
  return report;
}

ChainReport verify_chain(const std::vector<ExponentStage>& stages,
                         const VerificationPolicy& policy) {
  ChainReport report;
  report.final_base = Real::of(0, policy.precision);
  if (stages.empty()) throw PreconditionError("empty stage chain");
  if (!stages.front().alpha.is_zero()) {
    throw PreconditionError("first stage must have offset zero");
  }
  for (size_t i = 1; i < stages.size(); ++i) {
    Alpha expected =
        Alpha::einv_multiple(make_rational(17, 100) - stages[i - 1].beta);
    if (stages[i].alpha != expected) {
      throw PreconditionError("stage offset does not follow the handoff rule");
    }
  }

  Status overall = Status::Pass;
  for (size_t i = 0; i < stages.size(); ++i) {
    VerificationReport vr = verify_stage(stages[i], report.proven, policy);
    if (vr.status == Status::Fail) overall = Status::Fail;
    if (vr.status == Status::Inconclusive && overall == Status::Pass) {
      overall = Status::Inconclusive;
    }
    report.stages.push_back(std::move(vr));
    if (report.stages.back().status != Status::Pass) break;
    if (i + 1 < stages.size()) {
      DominationReport dr =
          verify_linear_domination(stages[i].beta, policy);
      if (dr.status == Status::Pass) {
        report.proven.add(ProvenAlpha{dr.alpha_next, static_cast<int>(i)});
      } else {
        overall = dr.status;
      }
      report.handoffs.push_back(std::move(dr));
      if (report.handoffs.back().status != Status::Pass) break;
    }
  }
  report.status = overall;
  if (report.stages.size() == stages.size() &&
      report.stages.back().status == Status::Pass) {
    report.final_base = diagonal_base(stages.back(), policy.precision);
  }
  return report;
}

nlohmann::json to_json(const VerificationPolicy& p) {
  return nlohmann::json{{"psi_floor_main", p.psi_floor_main.get_str()},
                        {"psi_prime_floor", p.psi_prime_floor.get_str()},
                        {"lambda_min", p.lambda_min.get_str()},
                        {"main_left", p.main_left.get_str()},
                        {"max_depth", p.max_depth},
                        {"eval_budget", p.eval_budget},
                        {"precision", static_cast<long>(p.precision)}};
}

nlohmann::json to_json(const ConditionReport& c) {
  nlohmann::json j{{"name", c.name},
                   {"status", to_string(c.status)},
                   {"leaves", c.leaves},
                   {"deepest", c.deepest}};
  if (c.certified_min) j["certified_min"] = c.certified_min->to_string();
  if (c.witness) {
    j["witness"] = nlohmann::json{{"lo", c.witness->lo.get_str()},
                                  {"hi", c.witness->hi.get_str()},
                                  {"quantity", c.witness->quantity},
                                  {"note", c.witness->note}};
    if (c.witness->enclosure) {
      j["witness"]["enclosure_lo"] = c.witness->enclosure->lo().to_string();
      j["witness"]["enclosure_hi"] = c.witness->enclosure->hi().to_string();
    }
  }
  return j;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json conditions = nlohmann::json::array();
  for (const ConditionReport& c : r.conditions) conditions.push_back(to_json(c));
  return nlohmann::json{{"alpha", r.stage.alpha.to_string()},
                        {"beta", r.stage.beta.get_str()},
                        {"status", to_string(r.status)},
                        {"conditions", conditions},
                        {"policy", to_json(r.policy)},
                        {"near_zero_note", r.near_zero_note},
                        {"wall_ms", r.wall_ms}};
}

nlohmann::json to_json(const DominationReport& r) {
  nlohmann::json conditions = nlohmann::json::array();
  for (const ConditionReport& c : r.conditions) conditions.push_back(to_json(c));
  return nlohmann::json{{"status", to_string(r.status)},
                        {"beta", r.beta.get_str()},
                        {"alpha_next", r.alpha_next.to_string()},
                        {"zone", r.zone.get_str()},
                        {"conditions", conditions}};
}

nlohmann::json to_json(const ChainReport& r) {
  nlohmann::json stages = nlohmann::json::array();
  for (const VerificationReport& vr : r.stages) stages.push_back(to_json(vr));
  nlohmann::json handoffs = nlohmann::json::array();
  for (const DominationReport& dr : r.handoffs) handoffs.push_back(to_json(dr));
  return nlohmann::json{{"status", to_string(r.status)},
                        {"stages", stages},
                        {"handoffs", handoffs},
                        {"final_base", r.final_base.to_string()}};
}

}  // namespace ramsey
