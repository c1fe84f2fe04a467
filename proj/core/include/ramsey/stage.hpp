#pragma once

#include <string>
#include <vector>

#include "ramsey/interval.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/real.hpp"

namespace ramsey {

/// Exact nonnegative offset of the form q0 + q1/e. Keeping the 1/e
/// coefficient symbolic lets consecutive stages hand the offset forward
/// without any rounding.
struct Alpha {
  Rational plain;
  Rational einv_coeff;

  static Alpha zero() { return Alpha{Rational(0), Rational(0)}; }
  static Alpha rational(Rational q) { return Alpha{std::move(q), Rational(0)}; }
  static Alpha einv_multiple(Rational q) {
    return Alpha{Rational(0), std::move(q)};
  }

  bool is_zero() const { return plain == 0 && einv_coeff == 0; }
  Real value(mpfr_prec_t prec = kDefaultPrec) const;
  Interval enclosure(mpfr_prec_t prec = kDefaultPrec) const;
  std::string to_string() const;
};

bool operator==(const Alpha& a, const Alpha& b);
bool operator!=(const Alpha& a, const Alpha& b);

/// Exact three-way comparison, deciding q0 + q1/e signs by interval
/// refinement when the rational parts alone are inconclusive.
int cmp(const Alpha& a, const Alpha& b);

/// One member of the exponent family: F(lambda) =
/// (lambda+1)log(lambda+1) - lambda log lambda
///   + (-lambda/4 + beta lambda^2 + (2/25) lambda^3) e^{-lambda},
/// paired with the offset alpha used by the two-branch Y formula.
struct ExponentStage {
  Alpha alpha;
  Rational beta;
};

/// Throws PreconditionError unless beta in [0, 1/10] and alpha >= 0.
void validate_stage(const ExponentStage& stage);

/// The four published (alpha, beta) pairs, in iteration order.
std::vector<ExponentStage> paper_chain();

struct StageProfile {
  Real F;
  Real Fprime;
  Real M;
  Real X;
  Real Y;
  Real psi;
  Real correction;
};

/// Point evaluation of every stage quantity at rational lambda > 0.
/// Recomputed at doubled precision; disagreement raises PrecisionError.
StageProfile stage_profile(const ExponentStage& stage, const Rational& lambda,
                           mpfr_prec_t prec = kDefaultPrec);

/// Value of the cubic correction term at lambda.
Real correction_at(const ExponentStage& stage, const Rational& lambda,
                   mpfr_prec_t prec = kDefaultPrec);

/// e^{F(1)} = 4 exp((beta - 17/100)/e), the diagonal growth base.
Real diagonal_base(const ExponentStage& stage, mpfr_prec_t prec = kDefaultPrec);

}  // namespace ramsey
