#include "ramsey/region.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/stage_math.hpp"

namespace ramsey {

namespace {

constexpr long kGridBits = 60;

// Largest multiple of 2^-kGridBits at or below v.
Rational grid_floor(const Real& v) {
  Real scaled(v.prec() + kGridBits + 4);
  mpfr_mul_2si(scaled.raw(), v.raw(), kGridBits, MPFR_RNDD);
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), scaled.raw(), MPFR_RNDD);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, kGridBits);
  Rational q(z, den);
  q.canonicalize();
  return q;
}

void require_unit_interval(const Rational& x, const char* name) {
  if (x <= 0 || x >= 1) {
    throw DomainError(std::string(name) + " must lie in (0,1)");
  }
}

// Three-way decision of q <= v for an interval-valued quantity, escalating
// precision until certain. eval(prec) must enclose the same exact value at
// every precision.
template <class Eval>
bool decide_at_most(const Rational& q, Eval eval, mpfr_prec_t prec,
                    Interval* last = nullptr) {
  for (mpfr_prec_t pr = prec; pr <= prec * 32; pr *= 2) {
    Interval v = eval(pr);
    if (last != nullptr) *last = v;
    if (v.lo().cmp(q) >= 0) return true;
    if (v.hi().cmp(q) < 0) return false;
  }
  throw PrecisionError("comparison against enclosure did not resolve");
}

}  // namespace

ProvenAlphaSet::ProvenAlphaSet() {
  items_.push_back(ProvenAlpha{Alpha::zero(), -1});
}

void ProvenAlphaSet::add(ProvenAlpha pa) {
  if (cmp(pa.alpha, Alpha::zero()) < 0) {
    throw DomainError("proven alpha must be nonnegative");
  }
  items_.push_back(std::move(pa));
}

const ProvenAlpha& ProvenAlphaSet::best() const {
  const ProvenAlpha* best = &items_.front();
  for (const ProvenAlpha& pa : items_) {
    if (cmp(pa.alpha, best->alpha) > 0) best = &pa;
  }
  return *best;
}

bool ProvenAlphaSet::contains(const Alpha& a) const {
  for (const ProvenAlpha& pa : items_) {
    if (pa.alpha == a) return true;
  }
  return false;
}

Interval y_frontier(const Alpha& alpha, const Rational& x, mpfr_prec_t prec) {
  require_unit_interval(x, "x");
  if (cmp(alpha, Alpha::zero()) < 0) {
    throw DomainError("alpha must be nonnegative");
  }
  Interval xi = Interval::of(x, prec);
  Interval one = Interval::of(1L, prec);
  if (x <= make_rational(1, 2)) {
    Interval b = exp(alpha.enclosure(prec)) * (one - xi);
    const Real& cap = one.lo();
    return Interval(min(b.lo(), cap), min(b.hi(), cap));
  }
  return one - xi * exp(-alpha.enclosure(prec));
}

std::pair<RPoint, CertPtr> base_point(const Rational& x) {
  require_unit_interval(x, "x");
  RPoint p{x, 1 - x};
  auto cert = std::make_shared<Certificate>();
  cert->rule = CertRule::BaseES;
  cert->point = p;
  return {p, cert};
}

std::pair<RPoint, CertPtr> lemma_y_point(const Alpha& alpha, const Rational& x,
                                         mpfr_prec_t prec) {
  Interval f = y_frontier(alpha, x, prec);
  Rational y = grid_floor(f.lo());
  if (y <= 0) throw DomainError("frontier too small to round down");
  auto cert = std::make_shared<Certificate>();
  cert->rule = CertRule::LemmaY;
  cert->point = RPoint{x, y};
  cert->alpha = alpha;
  cert->branch = x <= make_rational(1, 2) ? 1 : 2;
  if (cert->branch == 1) {
    Interval b = exp(alpha.enclosure(prec)) * (Interval::of(1L, prec) -
                                               Interval::of(x, prec));
    cert->clamped = b.lo().cmp(Rational(1)) >= 0;
  }
  return {cert->point, cert};
}

std::pair<RPoint, CertPtr> asymptotic_point(const ExponentStage& stage,
                                            const Rational& lambda,
                                            mpfr_prec_t prec) {
  validate_stage(stage);
  if (lambda <= 0 || lambda > 1) throw DomainError("lambda must be in (0,1]");
  StageConsts<Interval> k = make_consts_interval(stage, prec);
  StageValues<Interval> v =
      eval_stage(Interval::of(lambda, prec), k, StraddleMode::Hull);
  Rational x = grid_floor(v.X.lo());
  Rational y = grid_floor(v.Y.lo());
  if (x <= 0 || y <= 0) {
    throw DomainError("stage profile too small to round down");
  }
  auto cert = std::make_shared<Certificate>();
  cert->rule = CertRule::AsymptoticBound;
  cert->point = RPoint{x, y};
  cert->stage = stage;
  cert->lambda = lambda;
  return {cert->point, cert};
}

MembershipResult certify_membership(const RPoint& p, const ProvenAlphaSet& set,
                                    mpfr_prec_t prec) {
  require_unit_interval(p.x, "x");
  if (p.y <= 0) throw DomainError("y must be positive");
  const ProvenAlpha& best = set.best();
  MembershipResult res;
  res.alpha_used = best.alpha;

  if (best.alpha.is_zero()) {
    Rational frontier = 1 - p.x;
    if (p.y <= frontier) {
      auto cert = std::make_shared<Certificate>();
      cert->rule = CertRule::BaseES;
      cert->point = p;
      res.accepted = true;
      res.certificate = cert;
    } else {
      res.accepted = false;
      res.gap = Interval::of(p.y - frontier, prec);
    }
    return res;
  }

  Interval last = Interval::of(0L, prec);
  bool below = decide_at_most(
      p.y, [&](mpfr_prec_t pr) { return y_frontier(best.alpha, p.x, pr); },
      prec, &last);
  if (below) {
    auto cert = std::make_shared<Certificate>();
    cert->rule = CertRule::LemmaY;
    cert->point = p;
    cert->alpha = best.alpha;
    cert->branch = p.x <= make_rational(1, 2) ? 1 : 2;
    if (cert->branch == 1) {
      Interval b = exp(best.alpha.enclosure(prec)) *
                   (Interval::of(1L, prec) - Interval::of(p.x, prec));
      cert->clamped = b.lo().cmp(Rational(1)) >= 0;
    }
    res.accepted = true;
    res.certificate = cert;
  } else {
    res.accepted = false;
    res.gap = Interval::of(p.y, prec) - last;
  }
  return res;
}

bool replay(const CertPtr& cert, mpfr_prec_t prec) {
  if (!cert) return false;
  const Certificate& c = *cert;
  if (c.point.x <= 0 || c.point.x >= 1 || c.point.y <= 0) return false;
  switch (c.rule) {
    case CertRule::BaseES:
      return c.point.y <= 1 - c.point.x;
    case CertRule::Dominated:
      return c.child != nullptr && c.point.x <= c.child->point.x &&
             c.point.y <= c.child->point.y && replay(c.child, prec);
    case CertRule::LemmaY:
      return decide_at_most(
          c.point.y,
          [&](mpfr_prec_t pr) { return y_frontier(c.alpha, c.point.x, pr); },
          prec);
    case CertRule::AsymptoticBound: {
      validate_stage(c.stage);
      if (c.lambda <= 0 || c.lambda > 1) return false;
      bool x_ok = decide_at_most(
          c.point.x,
          [&](mpfr_prec_t pr) {
            StageConsts<Interval> k = make_consts_interval(c.stage, pr);
            return eval_stage(Interval::of(c.lambda, pr), k, StraddleMode::Hull)
                .X;
          },
          prec);
      bool y_ok = decide_at_most(
          c.point.y,
          [&](mpfr_prec_t pr) {
            StageConsts<Interval> k = make_consts_interval(c.stage, pr);
            return eval_stage(Interval::of(c.lambda, pr), k, StraddleMode::Hull)
                .Y;
          },
          prec);
      return x_ok && y_ok;
    }
  }
  return false;
}

nlohmann::json to_json(const RPoint& p) {
  return nlohmann::json{{"x", p.x.get_str()}, {"y", p.y.get_str()}};
}

nlohmann::json to_json(const CertPtr& cert) {
  if (!cert) return nullptr;
  const Certificate& c = *cert;
  nlohmann::json j;
  switch (c.rule) {
    case CertRule::BaseES:
      j["rule"] = "base_es";
      break;
    case CertRule::Dominated:
      j["rule"] = "dominated";
      break;
    case CertRule::LemmaY:
      j["rule"] = "lemma_y";
      break;
    case CertRule::AsymptoticBound:
      j["rule"] = "asymptotic_bound";
      break;
  }
  j["point"] = to_json(c.point);
  if (c.rule == CertRule::LemmaY) {
    j["alpha"] = c.alpha.to_string();
    j["branch"] = c.branch;
    j["clamped"] = c.clamped;
  }
  if (c.rule == CertRule::AsymptoticBound) {
    j["alpha"] = c.stage.alpha.to_string();
    j["beta"] = c.stage.beta.get_str();
    j["lambda"] = c.lambda.get_str();
  }
  if (c.child) j["child"] = to_json(c.child);
  return j;
}

}  // namespace ramsey
