#include "ramsey/stage.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/stage_math.hpp"

namespace ramsey {

Real Alpha::value(mpfr_prec_t prec) const {
  Real einv = exp(Real::of(-1, prec));
  return Real::of(plain, prec) + Real::of(einv_coeff, prec) * einv;
}

Interval Alpha::enclosure(mpfr_prec_t prec) const {
  Interval einv = exp(Interval::of(-1L, prec));
  return Interval::of(plain, prec) + Interval::of(einv_coeff, prec) * einv;
}

std::string Alpha::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (plain != 0) out = plain.get_str();
  if (einv_coeff != 0) {
    if (!out.empty()) out += " + ";
    out += einv_coeff.get_str() + "/e";
  }
  return out;
}

bool operator==(const Alpha& a, const Alpha& b) {
  return a.plain == b.plain && a.einv_coeff == b.einv_coeff;
}
bool operator!=(const Alpha& a, const Alpha& b) { return !(a == b); }

int cmp(const Alpha& a, const Alpha& b) {
  Rational dp = a.plain - b.plain;
  Rational dc = a.einv_coeff - b.einv_coeff;
  if (dc == 0) return sgn(dp);
  if (dp == 0) return sgn(dc);
  if (sgn(dp) == sgn(dc)) return sgn(dp);
  // dp + dc/e with opposite signs: never zero (e is irrational), so interval
  // refinement terminates.
  for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
    Interval einv = exp(Interval::of(-1L, prec));
    Interval v = Interval::of(dp, prec) + Interval::of(dc, prec) * einv;
    if (v.definitely_positive()) return 1;
    if (v.definitely_negative()) return -1;
  }
  throw PrecisionError("alpha comparison did not resolve");
}

void validate_stage(const ExponentStage& stage) {
  if (stage.beta < 0 || stage.beta > make_rational(1, 10)) {
    throw PreconditionError("beta outside [0, 1/10]");
  }
  if (cmp(stage.alpha, Alpha::zero()) < 0) {
    throw PreconditionError("alpha must be nonnegative");
  }
}

std::vector<ExponentStage> paper_chain() {
  return {
      {Alpha::zero(), make_rational(2, 25)},
      {Alpha::einv_multiple(make_rational(9, 100)), make_rational(9, 200)},
      {Alpha::einv_multiple(make_rational(1, 8)), make_rational(33, 1000)},
      {Alpha::einv_multiple(make_rational(137, 1000)), make_rational(3, 100)},
  };
}

StageConsts<Real> make_consts_real(const ExponentStage& stage,
                                   mpfr_prec_t prec) {
  StageConsts<Real> k{
      Real::of(1, prec),
      Real::of(make_rational(1, 2), prec),
      Real::of(make_rational(1, 4), prec),
      Real::of(make_rational(2, 25), prec),
      Real::of(make_rational(6, 25), prec),
      Real::of(stage.beta, prec),
      Real::of(2 * stage.beta, prec),
      Real(prec),
      Real(prec),
      Real::of(0, prec),
  };
  Real a = stage.alpha.value(prec);
  k.e_alpha = exp(a);
  k.e_neg_alpha = exp(neg(a));
  return k;
}

StageConsts<Interval> make_consts_interval(const ExponentStage& stage,
                                           mpfr_prec_t prec) {
  Interval a = stage.alpha.enclosure(prec);
  return StageConsts<Interval>{
      Interval::of(1L, prec),
      Interval::of(make_rational(1, 2), prec),
      Interval::of(make_rational(1, 4), prec),
      Interval::of(make_rational(2, 25), prec),
      Interval::of(make_rational(6, 25), prec),
      Interval::of(stage.beta, prec),
      Interval::of(2 * stage.beta, prec),
      exp(a),
      exp(-a),
      Interval::of(0L, prec),
  };
}

StageConsts<Dual<Interval>> make_consts_dual(const ExponentStage& stage,
                                             mpfr_prec_t prec) {
  StageConsts<Interval> k = make_consts_interval(stage, prec);
  auto lift = [&](const Interval& v) {
    return Dual<Interval>{v, k.zero};
  };
  return StageConsts<Dual<Interval>>{
      lift(k.one),     lift(k.half),      lift(k.quarter),
      lift(k.c2_25),   lift(k.c6_25),     lift(k.beta),
      lift(k.two_beta), lift(k.e_alpha),  lift(k.e_neg_alpha),
      lift(k.zero),
  };
}

namespace {

StageProfile profile_once(const ExponentStage& stage, const Rational& lambda,
                          mpfr_prec_t prec) {
  StageConsts<Real> k = make_consts_real(stage, prec);
  Real lam = Real::of(lambda, prec);
  StageValues<Real> v = eval_stage(lam, k, StraddleMode::Error);
  Real corr = correction_term(lam, k);
  return StageProfile{v.F, v.Fp, v.M, v.X, v.Y, v.psi, corr};
}

}  // namespace

StageProfile stage_profile(const ExponentStage& stage, const Rational& lambda,
                           mpfr_prec_t prec) {
  validate_stage(stage);
  if (lambda <= 0) throw DomainError("lambda must be positive");
  StageProfile p = profile_once(stage, lambda, prec);
  StageProfile q = profile_once(stage, lambda, prec * 2);
  require_agreement(p.F, q.F, prec, "F");
  require_agreement(p.Fprime, q.Fprime, prec, "F'");
  require_agreement(p.M, q.M, prec, "M");
  require_agreement(p.X, q.X, prec, "X");
  require_agreement(p.Y, q.Y, prec, "Y");
  require_agreement(p.psi, q.psi, prec, "psi");
  return p;
}

Real correction_at(const ExponentStage& stage, const Rational& lambda,
                   mpfr_prec_t prec) {
  StageConsts<Real> k = make_consts_real(stage, prec);
  return correction_term(Real::of(lambda, prec), k);
}

Real diagonal_base(const ExponentStage& stage, mpfr_prec_t prec) {
  Real einv = exp(Real::of(-1, prec));
  Real expo = Real::of(stage.beta - make_rational(17, 100), prec) * einv;
  return Real::of(4, prec) * exp(expo);
}

}  // namespace ramsey
