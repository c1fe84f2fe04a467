#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsey/interval.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/stage.hpp"

namespace ramsey {

/// A rational point (x, y) considered for membership in the region of pairs
/// with R(k,l) <= x^{-k} y^{-l} for all large k + l.
struct RPoint {
  Rational x;
  Rational y;
};

enum class CertRule {
  BaseES,           // y <= 1 - x, exact
  Dominated,        // (x, y) <= (x', y') componentwise, child certifies (x', y')
  LemmaY,           // y <= frontier(alpha, x), certified by enclosure
  AsymptoticBound,  // (x, y) below (X(lambda), Y(lambda)) of a verified stage
};

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

/// Immutable node in a certificate tree. Shared subtrees are deliberate:
/// replay never mutates.
struct Certificate {
  CertRule rule;
  RPoint point;
  Alpha alpha;          // LemmaY
  int branch = 0;       // LemmaY: 1 for x <= 1/2, else 2
  bool clamped = false;  // LemmaY branch 1 capped at 1
  ExponentStage stage;  // AsymptoticBound
  Rational lambda;      // AsymptoticBound
  CertPtr child;        // Dominated
};

/// An offset alpha together with the index of the stage whose verification
/// produced it; -1 marks the unconditional alpha = 0 axiom.
struct ProvenAlpha {
  Alpha alpha;
  int source_stage = -1;
};

/// The offsets available to membership certification. Always contains the
/// alpha = 0 axiom; best() is the largest, which always gives the highest
/// frontier.
class ProvenAlphaSet {
 public:
  ProvenAlphaSet();
  void add(ProvenAlpha pa);
  const ProvenAlpha& best() const;
  const std::vector<ProvenAlpha>& items() const { return items_; }
  bool contains(const Alpha& a) const;

 private:
  std::vector<ProvenAlpha> items_;
};

/// Frontier height above x for offset alpha:
/// min(e^alpha (1-x), 1) for x <= 1/2, else 1 - x e^{-alpha}.
Interval y_frontier(const Alpha& alpha, const Rational& x,
                    mpfr_prec_t prec = kDefaultPrec);

/// The alpha = 0 boundary point (x, 1-x), with its certificate.
std::pair<RPoint, CertPtr> base_point(const Rational& x);

/// Frontier point for offset alpha at abscissa x: y is a certified rational
/// lower bound on the frontier, within 2^-50 of it.
std::pair<RPoint, CertPtr> lemma_y_point(const Alpha& alpha, const Rational& x,
                                         mpfr_prec_t prec = kDefaultPrec);

/// Rational point just inside (X(lambda), Y(lambda)) for a stage, with an
/// AsymptoticBound certificate. Only meaningful once the stage has been
/// verified; this function does not re-verify.
std::pair<RPoint, CertPtr> asymptotic_point(const ExponentStage& stage,
                                            const Rational& lambda,
                                            mpfr_prec_t prec = kDefaultPrec);

struct MembershipResult {
  bool accepted = false;
  CertPtr certificate;   // on acceptance
  Alpha alpha_used;
  std::optional<Interval> gap;  // on refusal: y minus the frontier
};

/// Decide y <= frontier(best alpha, x) with escalating precision; exact
/// rational arithmetic when the best alpha is zero.
MembershipResult certify_membership(const RPoint& p, const ProvenAlphaSet& set,
                                    mpfr_prec_t prec = kDefaultPrec);

/// Recheck every rule application in a certificate tree.
bool replay(const CertPtr& cert, mpfr_prec_t prec = kDefaultPrec);

nlohmann::json to_json(const CertPtr& cert);
nlohmann::json to_json(const RPoint& p);

}  // namespace ramsey
