#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsey/interval.hpp"
#include "ramsey/region.hpp"
#include "ramsey/stage.hpp"
#include "ramsey/stage_math.hpp"

namespace ramsey {

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct VerificationPolicy {
  Rational psi_floor_main = make_rational(1, 10000);
  Rational psi_prime_floor = make_rational(1, 100);
  Rational lambda_min = make_rational(1, 1000000);
  // psi is certified above psi_floor_main on [main_left, 1], its derivative
  // above psi_prime_floor on [lambda_min, main_left], and psi(lambda_min)
  // above -psi_prime_floor * lambda_min; together these pin psi > 0 on
  // (2*lambda_min, 1].
  Rational main_left = make_rational(1, 20);
  int max_depth = 60;
  long eval_budget = 2000000;
  mpfr_prec_t precision = 128;
};

/// Certified violation or unresolved spot found by bisection.
struct FloorWitness {
  Rational lo, hi;
  std::string quantity;
  std::optional<Interval> enclosure;
  std::string note;
};

struct ConditionReport {
  std::string name;
  Status status = Status::Inconclusive;
  long leaves = 0;
  int deepest = 0;
  std::optional<Real> certified_min;
  std::optional<FloorWitness> witness;
};

struct VerificationReport {
  ExponentStage stage;
  Status status = Status::Inconclusive;
  std::vector<ConditionReport> conditions;
  VerificationPolicy policy;
  // The interval certificates stop at lambda_min; below it positivity of psi
  // rests on psi(0+) = 0 plus the certified derivative floor. Recorded here
  // so reports never present that stretch as certified.
  std::string near_zero_note;
  double wall_ms = 0;
};

/// Enclosure of psi over an interval of lambda. Hull mode is sound across
/// the X = 1/2 seam; Error mode refuses it.
Interval enclose_psi(const ExponentStage& stage, const Interval& lam,
                     mpfr_prec_t prec = kDefaultPrec,
                     StraddleMode mode = StraddleMode::Hull);

/// Enclosure of d psi / d lambda via forward-mode intervals. Throws
/// BranchBoundaryError if the interval straddles the X = 1/2 seam, where
/// the derivative jumps.
Interval enclose_psi_prime(const ExponentStage& stage, const Interval& lam,
                           mpfr_prec_t prec = kDefaultPrec);

/// Enclosure of a quantity over an exact rational subinterval [lo, hi]
/// (lo == hi for point evaluation) at the given precision. Throwing
/// XUndefinedError / BranchBoundaryError / DomainError marks the
/// subinterval undecided rather than failed.
using EncloseFn =
    std::function<Interval(const Rational&, const Rational&, mpfr_prec_t)>;

struct BisectionSettings {
  Rational lo, hi;
  Rational floor_value;
  int max_depth = 60;
  long eval_budget = 2000000;
  mpfr_prec_t precision = kDefaultPrec;
  std::string quantity = "f";
};

/// Certify f(lambda) > floor for every lambda in [lo, hi] by adaptive
/// midpoint bisection. Pass: every leaf enclosure clears the floor. Fail:
/// some subinterval's enclosure lies entirely at or below it (witness).
/// Inconclusive: depth or budget ran out first.
ConditionReport certify_lower_bound(const EncloseFn& f,
                                    const BisectionSettings& settings);

/// Full verification of one stage against the policy, as four conditions:
///   fprime_positive       - F' > 0 on [lambda_min, 1]
///   condition1_membership - stage.alpha at most some proven offset (so Y is
///                           the frontier of a proven offset, clamped) and
///                           X in (0,1) on [lambda_min, 1]
///   condition2_psi        - psi > psi_floor_main on [main_left, 1]
///   near_zero_derivative  - psi' > psi_prime_floor on [lambda_min, main_left]
///                           and psi(lambda_min) > -psi_prime_floor*lambda_min
/// Inconclusive conditions are retried once at doubled precision.
VerificationReport verify_stage(const ExponentStage& stage,
                                const ProvenAlphaSet& proven,
                                const VerificationPolicy& policy = {});

struct DominationReport {
  Status status = Status::Inconclusive;
  Rational beta;
  Alpha alpha_next;
  Rational zone;  // endpoint-zone half-width that certified the sign conditions
  std::vector<ConditionReport> conditions;
};

/// Certify that the cubic correction with this beta sits below the line
/// (beta - 17/100) e^{-1} lambda on [0, 1] (equality at both endpoints),
/// which licenses the offset alpha = (17/100 - beta)/e for the next stage.
DominationReport verify_linear_domination(
    const Rational& beta, const VerificationPolicy& policy = {});

struct ChainReport {
  Status status = Status::Inconclusive;
  std::vector<VerificationReport> stages;
  std::vector<DominationReport> handoffs;
  Real final_base;
  ProvenAlphaSet proven;
};

/// Verify stages in order, feeding each handoff offset to the next stage's
/// condition1_membership check. Requires the first stage to have offset zero
/// and each later offset to equal (17/100 - previous beta)/e exactly; a
/// mis-linked chain is rejected with PreconditionError.
ChainReport verify_chain(const std::vector<ExponentStage>& stages,
                         const VerificationPolicy& policy = {});

nlohmann::json to_json(const VerificationPolicy& p);
nlohmann::json to_json(const ConditionReport& c);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const DominationReport& r);
nlohmann::json to_json(const ChainReport& r);

}  // namespace ramsey
