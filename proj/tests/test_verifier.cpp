#include <doctest.h>

#include <cmath>

#include "ramsey/errors.hpp"
#include "ramsey/region.hpp"
#include "ramsey/stage.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

ExponentStage stage_at(int i) { return paper_chain().at(i); }

Interval psi_point(const ExponentStage& s, const Rational& lam,
                   mpfr_prec_t prec = 128) {
  return enclose_psi(s, Interval::of(lam, prec), prec);
}

bool brackets(const Interval& iv, double v, double slack = 0.0) {
  return iv.lo().to_double() - slack <= v && v <= iv.hi().to_double() + slack;
}

}  // namespace

TEST_CASE("published chain has the expected shape") {
  std::vector<ExponentStage> chain = paper_chain();
  REQUIRE(chain.size() == 4);
  CHECK(chain[0].alpha.is_zero());
  CHECK(chain[0].beta == Rational(2, 25));
  CHECK(chain[1].alpha == Alpha::einv_multiple(Rational(9, 100)));
  CHECK(chain[1].beta == Rational(9, 200));
  CHECK(chain[2].alpha == Alpha::einv_multiple(Rational(1, 8)));
  CHECK(chain[2].beta == Rational(33, 1000));
  CHECK(chain[3].alpha == Alpha::einv_multiple(Rational(137, 1000)));
  CHECK(chain[3].beta == Rational(3, 100));
  // Each offset is (17/100 - previous beta) / e.
  for (size_t i = 1; i < chain.size(); ++i) {
    CHECK(chain[i].alpha.einv_coeff == Rational(17, 100) - chain[i - 1].beta);
  }
}

TEST_CASE("psi enclosures bracket frozen point values") {
  // Stage 0 exponent margin at both ends of the main interval.
  CHECK(brackets(psi_point(stage_at(0), Rational(1, 20)), 8.268803e-4, 1e-9));
  CHECK(brackets(psi_point(stage_at(0), Rational(1)), 2.489061e-3, 1e-8));
  // Later stages pinch near lambda = 1.
  CHECK(brackets(psi_point(stage_at(1), Rational(1)), 1.844423e-4, 1e-9));
  CHECK(brackets(psi_point(stage_at(2), Rational(1)), 1.086519e-4, 1e-9));
  CHECK(brackets(psi_point(stage_at(3), Rational(1)), 6.836362e-4, 1e-9));
}

TEST_CASE("psi stays positive down to tiny lambda") {
  for (Rational lam :
       {Rational(1, 10000), Rational(1, 100000), Rational(1, 1000000)}) {
    Interval v = psi_point(stage_at(0), lam);
    CHECK(v.definitely_positive());
  }
  CHECK(brackets(psi_point(stage_at(0), Rational(1, 1000000)), 2.096e-8,
                 1e-12));
  CHECK(brackets(psi_point(stage_at(0), Rational(2, 1000000)), 4.191e-8,
                 1e-11));
}

TEST_CASE("psi derivative enclosures match frozen minima at 1/20") {
  const double frozen[] = {1.240821e-2, 1.516430e-2, 2.125282e-2,
                           2.386287e-2};
  for (int i = 0; i < 4; ++i) {
    Interval d = enclose_psi_prime(stage_at(i),
                                   Interval::of(Rational(1, 20), 128), 128);
    CHECK(brackets(d, frozen[i], 1e-8));
  }
}

TEST_CASE("psi derivative near zero approaches the analytic limit") {
  // At alpha = 0 the one-sided limit is
  // 3/4 - (e^{1/4}+1)/2 + log(e^{1/4}+1)/2 = 0.0209570...
  Interval d = enclose_psi_prime(stage_at(0),
                                 Interval::of(Rational(1, 1000000), 128), 128);
  CHECK(brackets(d, 0.0209570, 1e-4));
}

TEST_CASE("dual derivative agrees with a central difference") {
  ExponentStage s = stage_at(3);
  Rational lam(3, 10), h(1, 1 << 20);
  Interval d = enclose_psi_prime(s, Interval::of(lam, 192), 192);
  Interval hi = psi_point(s, lam + h, 192);
  Interval lo = psi_point(s, lam - h, 192);
  double fd = (hi.mid().to_double() - lo.mid().to_double()) / (2.0 * to_double(h));
  CHECK(d.lo().to_double() - 1e-6 <= fd);
  CHECK(d.hi().to_double() + 1e-6 >= fd);
}

TEST_CASE("value enclosures hull across the branch seam, derivatives refuse") {
  // Stage 0 crosses X = 1/2 near lambda = 0.33893.
  Interval tight =
      Interval::of(Rational(3389, 10000), Rational(3390, 10000), 128);
  Interval hulled = enclose_psi(stage_at(0), tight, 128, StraddleMode::Hull);
  CHECK(hulled.definitely_positive());
  Interval wide = Interval::of(Rational(338, 1000), Rational(340, 1000), 128);
  CHECK_THROWS_AS(enclose_psi_prime(stage_at(0), wide, 128),
                  BranchBoundaryError);
  // Away from the seam the derivative enclosure is fine.
  Interval off = Interval::of(Rational(1, 100), Rational(2, 100), 128);
  CHECK(enclose_psi_prime(stage_at(0), off, 128).definitely_positive());
}

TEST_CASE("enclosures narrow as precision rises") {
  ExponentStage s = stage_at(0);
  Interval coarse = psi_point(s, Rational(1, 2), 64);
  Interval fine = psi_point(s, Rational(1, 2), 256);
  CHECK(coarse.contains(fine));
  CHECK(fine.width().to_double() < coarse.width().to_double());
}

TEST_CASE("bisection certifies a simple floor") {
  EncloseFn f = [](const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    Interval x = Interval::of(lo, hi, prec);
    return x * x + Interval::of(Rational(1), prec);
  };
  BisectionSettings settings;
  settings.lo = Rational(0);
  settings.hi = Rational(1);
  settings.floor_value = Rational(1, 2);
  ConditionReport rep = certify_lower_bound(f, settings);
  CHECK(rep.status == Status::Pass);
  CHECK(rep.leaves >= 1);
  REQUIRE(rep.certified_min.has_value());
  CHECK(rep.certified_min->cmp(Rational(1, 2)) > 0);
}

TEST_CASE("bisection finds a certified violation with a witness") {
  EncloseFn f = [](const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    Interval x = Interval::of(lo, hi, prec);
    return x - Interval::of(Rational(1, 2), prec);
  };
  BisectionSettings settings;
  settings.lo = Rational(0);
  settings.hi = Rational(1);
  settings.floor_value = Rational(0);
  ConditionReport rep = certify_lower_bound(f, settings);
  CHECK(rep.status == Status::Fail);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->hi <= Rational(1, 2));
}

TEST_CASE("bisection reports inconclusive when the budget runs out") {
  // Positive but grazing zero at the left end; a tiny budget cannot resolve.
  EncloseFn f = [](const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    Interval x = Interval::of(lo, hi, prec);
    return x * x;
  };
  BisectionSettings settings;
  settings.lo = Rational(0);
  settings.hi = Rational(1);
  settings.floor_value = Rational(0);
  settings.eval_budget = 8;
  settings.max_depth = 4;
  ConditionReport rep = certify_lower_bound(f, settings);
  CHECK(rep.status == Status::Inconclusive);
}

TEST_CASE("single stage verification passes and reports all conditions") {
  VerificationReport rep = verify_stage(stage_at(0), ProvenAlphaSet{});
  CHECK(rep.status == Status::Pass);
  REQUIRE(rep.conditions.size() == 4);
  CHECK(rep.conditions[0].name == "fprime_positive");
  CHECK(rep.conditions[1].name == "condition1_membership");
  CHECK(rep.conditions[2].name == "condition2_psi");
  CHECK(rep.conditions[3].name == "near_zero_derivative");
  for (const ConditionReport& c : rep.conditions) {
    CHECK(c.status == Status::Pass);
  }
  // Certified floors honour the policy margins.
  CHECK(rep.conditions[2].certified_min->cmp(Rational(1, 10000)) > 0);
  CHECK(rep.conditions[3].certified_min->cmp(Rational(1, 100)) > 0);
  CHECK(!rep.near_zero_note.empty());
}

TEST_CASE("a stage with no correction fails with a certified witness") {
  ExponentStage bare{Alpha::zero(), Rational(0)};
  VerificationReport rep = verify_stage(bare, ProvenAlphaSet{});
  CHECK(rep.status == Status::Fail);
  const ConditionReport& psi = rep.conditions[2];
  CHECK(psi.status == Status::Fail);
  REQUIRE(psi.witness.has_value());
  // The violation lives well inside the main interval; psi(1) = -0.0409.
  CHECK(psi.witness->lo >= Rational(1, 20));
  REQUIRE(psi.witness->enclosure.has_value());
  CHECK(psi.witness->enclosure->hi().cmp(Rational(1, 10000)) <= 0);
}

TEST_CASE("an unproven positive offset fails the membership condition") {
  ExponentStage lifted{Alpha::einv_multiple(Rational(9, 100)),
                       Rational(9, 200)};
  VerificationReport with_axioms_only =
      verify_stage(lifted, ProvenAlphaSet{});
  CHECK(with_axioms_only.conditions[1].status == Status::Fail);

  ProvenAlphaSet proven;
  proven.add(ProvenAlpha{Alpha::einv_multiple(Rational(9, 100)), 0});
  VerificationReport with_license = verify_stage(lifted, proven);
  CHECK(with_license.status == Status::Pass);
}

TEST_CASE("linear domination certifies the published handoffs") {
  for (Rational beta : {Rational(2, 25), Rational(9, 200), Rational(33, 1000)}) {
    DominationReport rep = verify_linear_domination(beta);
    CHECK(rep.status == Status::Pass);
    CHECK(rep.alpha_next ==
          Alpha::einv_multiple(Rational(17, 100) - beta));
    bool zone_known = rep.zone == Rational(1, 16) ||
                      rep.zone == Rational(1, 32) ||
                      rep.zone == Rational(1, 64);
    CHECK(zone_known);
  }
}

TEST_CASE("linear domination fails for a vanishing correction") {
  DominationReport rep = verify_linear_domination(Rational(0));
  CHECK(rep.status == Status::Fail);
}

TEST_CASE("chain verification demands exact offset linkage") {
  std::vector<ExponentStage> chain = paper_chain();
  chain[1].alpha = Alpha::einv_multiple(Rational(8, 100));
  CHECK_THROWS_AS(verify_chain(chain), PreconditionError);

  std::vector<ExponentStage> starts_lifted{paper_chain()[1]};
  CHECK_THROWS_AS(verify_chain(starts_lifted), PreconditionError);
}

TEST_CASE("one-stage chain verifies with the first published base") {
  ChainReport rep = verify_chain({stage_at(0)});
  CHECK(rep.status == Status::Pass);
  CHECK(rep.stages.size() == 1);
  CHECK(rep.handoffs.empty());
  CHECK(rep.final_base.to_double() == doctest::Approx(3.869732).epsilon(1e-5));
  CHECK(rep.final_base.to_double() < 3.87);
}

TEST_CASE("report json carries statuses and the policy") {
  VerificationReport rep = verify_stage(stage_at(0), ProvenAlphaSet{});
  nlohmann::json j = to_json(rep);
  CHECK(j["status"] == "pass");
  CHECK(j["conditions"].size() == 4);
  CHECK(j["policy"]["precision"] == 128);
  nlohmann::json jp = to_json(VerificationPolicy{});
  CHECK(jp["psi_floor_main"] == "1/10000");
  CHECK(jp["lambda_min"] == "1/1000000");
}

TEST_CASE("tightened floors beyond the certified margins fail honestly") {
  VerificationPolicy strict;
  strict.psi_floor_main = Rational(1, 100);  // psi(1) = 0.0025 < 0.01
  VerificationReport rep = verify_stage(stage_at(0), ProvenAlphaSet{}, strict);
  CHECK(rep.conditions[2].status == Status::Fail);
}
