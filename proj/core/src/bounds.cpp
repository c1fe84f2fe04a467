#include "ramsey/bounds.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/interval.hpp"
#include "ramsey/stage_math.hpp"

namespace ramsey {

namespace {

// Evaluate a log-scale bound at prec and 2*prec, insist they agree, and
// report the prec result.
template <class F>
BoundValue checked_bound(F f, mpfr_prec_t prec, const char* what) {
  Real a = f(prec);
  Real b = f(prec * 2);
  require_agreement(a, b, prec, what);
  return bound_from_log(std::move(a));
}

template <class F>
Real checked_value(F f, mpfr_prec_t prec, const char* what) {
  Real a = f(prec);
  Real b = f(prec * 2);
  require_agreement(a, b, prec, what);
  return a;
}

void require_targets(long k, const std::vector<long>& l) {
  if (k < 1) throw DomainError("clique target k must be at least 1");
  if (l.empty()) throw DomainError("at least one blue target required");
  for (long li : l) {
    if (li < 1) throw DomainError("clique targets must be at least 1");
  }
}

long sum_targets(const std::vector<long>& l) {
  long s = 0;
  for (long li : l) s += li;
  return s;
}

Real log_of_long(long v, mpfr_prec_t prec) {
  return log(Real::of(v, prec));
}

}  // namespace

BoundValue bound_from_log(Real log_value) {
  Real value = exp(log_value);
  bool overflow = log_value.cmp(709) > 0;
  return BoundValue{std::move(log_value), std::move(value), overflow};
}

BigInt es_bound(long k, long l) {
  require_targets(k, {l});
  return binomial(static_cast<unsigned long>(k + l - 2),
                  static_cast<unsigned long>(k - 1));
}

BoundValue es_product_bound(long k, long l, const Rational& x,
                            mpfr_prec_t prec) {
  require_targets(k, {l});
  if (x <= 0 || x >= 1) throw DomainError("x must lie in (0,1)");
  auto f = [&](mpfr_prec_t p) {
    Real lx = log(Real::of(x, p));
    Real l1x = log(Real::of(1 - x, p));
    return Real::of(-(k - 1), p) * lx + Real::of(-(l - 1), p) * l1x;
  };
  return checked_bound(f, prec, "es_product_bound");
}

BoundValue es_product_bound(long k, const std::vector<long>& l,
                            const Rational& x, const std::vector<Rational>& y,
                            mpfr_prec_t prec) {
  require_targets(k, l);
  if (y.size() != l.size()) {
    throw DomainError("one y per blue target required");
  }
  if (x <= 0) throw DomainError("x must be positive");
  Rational total = x;
  for (const Rational& yi : y) {
    if (yi <= 0) throw DomainError("every y_i must be positive");
    total += yi;
  }
  if (total > 1) throw DomainError("x + sum y_i must be at most 1");
  auto f = [&](mpfr_prec_t p) {
    Real acc = Real::of(-(k - 1), p) * log(Real::of(x, p));
    for (size_t i = 0; i < y.size(); ++i) {
      acc = acc + Real::of(-(l[i] - 1), p) * log(Real::of(y[i], p));
    }
    return acc;
  };
  return checked_bound(f, prec, "es_product_bound");
}

QuadraticSurd golden_x(const QuadraticSurd& p) {
  if (p >= QuadraticSurd(Rational(1))) throw DomainError("p must be below 1");
  QuadraticSurd phi = QuadraticSurd::golden_ratio();
  QuadraticSurd shift(make_rational(1, 2), make_rational(-1, 2));
  QuadraticSurd x = phi * p + shift;
  if (x.sign() <= 0) {
    throw DomainError("p must exceed (sqrt(5)-1)/(sqrt(5)+1)");
  }
  return x;
}

QuadraticSurd golden_identity_gap(const QuadraticSurd& p) {
  QuadraticSurd one{Rational(1)};
  QuadraticSurd x = golden_x(p);
  return (one - p) * (one - p) - (one - x) * (p - x);
}

BoundValue thm_easy_bound(long k, long l, const QuadraticSurd& p,
                          mpfr_prec_t prec) {
  require_targets(k, {l});
  QuadraticSurd x = golden_x(p);
  QuadraticSurd omp = QuadraticSurd(Rational(1)) - p;
  auto f = [&](mpfr_prec_t pr) {
    Real half_k = Real::of(k, pr) / Real::of(2, pr);
    return log_of_long(4 * (k + l), pr) - half_k * log(x.to_real(pr)) -
           Real::of(l, pr) * log(omp.to_real(pr));
  };
  return checked_bound(f, prec, "thm_easy_bound");
}

QuadraticSurd p_hat(long k, long l) {
  require_targets(k, {l});
  QuadraticSurd num(Rational(k - 2 * l), Rational(k + 2 * l));
  QuadraticSurd den(Rational(k + 2 * l), Rational(k + 2 * l));
  return num / den;
}

BoundValue cor_easy_bound(long k, long l, mpfr_prec_t prec) {
  require_targets(k, {l});
  if (k < l) throw DomainError("requires k >= l");
  auto f = [&](mpfr_prec_t pr) {
    Real s5p1 = QuadraticSurd(Rational(1), Rational(1)).to_real(pr);
    Real k2l = Real::of(k + 2 * l, pr);
    Real term_l = Real::of(l, pr) * log(s5p1 * k2l / Real::of(4 * l, pr));
    Real term_k = Real::of(k, pr) / Real::of(2, pr) * log(k2l / Real::of(k, pr));
    return log_of_long(4 * (k + l), pr) + term_l + term_k;
  };
  return checked_bound(f, prec, "cor_easy_bound");
}

Real log_ratio_to_es(const BoundValue& b, long k, long l, mpfr_prec_t prec) {
  Rational es(es_bound(k, l));
  return b.log_value - log(Real::of(es, prec));
}

Real ratio_exponent(const Rational& lam, mpfr_prec_t prec) {
  if (lam <= 0) throw DomainError("lambda must be positive");
  auto f = [&](mpfr_prec_t pr) {
    Real s5p1 = QuadraticSurd(Rational(1), Rational(1)).to_real(pr);
    Real lv = Real::of(lam, pr);
    Real one = Real::of(1, pr);
    Real lp1 = one + lv;
    Real l2p1 = one + lv + lv;
    Real term_l = lv * log(s5p1 * l2p1 / (Real::of(4, pr) * lp1));
    Real term_k = log(l2p1 / (lp1 * lp1)) / Real::of(2, pr);
    return term_l + term_k;
  };
  return checked_value(f, prec, "ratio_exponent");
}

namespace {

// Certified sign of ratio_exponent via interval arithmetic, escalating
// precision until decided.
int ratio_exponent_sign(const Rational& lam) {
  for (mpfr_prec_t pr = 128; pr <= 4096; pr *= 2) {
    Interval s5p1 = sqrt(Interval::of(5L, pr)) + Interval::of(1L, pr);
    Interval lv = Interval::of(lam, pr);
    Interval one = Interval::of(1L, pr);
    Interval lp1 = one + lv;
    Interval l2p1 = one + lv + lv;
    Interval term_l = lv * log(s5p1 * l2p1 / (Interval::of(4L, pr) * lp1));
    Interval term_k =
        log(l2p1 / (lp1 * lp1)) / Interval::of(2L, pr);
    Interval g = term_l + term_k;
    if (g.definitely_positive()) return 1;
    if (g.definitely_negative()) return -1;
  }
  throw PrecisionError("sign of ratio exponent did not resolve");
}

}  // namespace

Real crossover_root(mpfr_prec_t prec, const Rational& tol) {
  if (tol <= 0) throw DomainError("tolerance must be positive");
  Rational a = make_rational(1, 2);
  Rational b(1);
  if (ratio_exponent_sign(a) >= 0 || ratio_exponent_sign(b) <= 0) {
    throw InternalContradictionError("crossover bracket lost its signs");
  }
  while (b - a > tol) {
    Rational m = (a + b) / 2;
    if (ratio_exponent_sign(m) > 0) {
      b = m;
    } else {
      a = m;
    }
  }
  return Real::of((a + b) / 2, prec);
}

Rational theta_factor(const std::vector<long>& l) {
  require_targets(1, l);
  long total = sum_targets(l);
  BigInt num;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(total),
                static_cast<unsigned long>(total));
  BigInt den(1);
  for (long li : l) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(li),
                  static_cast<unsigned long>(li));
    den *= p;
  }
  Rational theta(num, den);
  theta.canonicalize();
  return theta;
}

BoundValue thm_easy2_bound(long k, const std::vector<long>& l,
                           const QuadraticSurd& p, mpfr_prec_t prec) {
  require_targets(k, l);
  long lt = sum_targets(l);
  QuadraticSurd x = golden_x(p);
  QuadraticSurd omp = QuadraticSurd(Rational(1)) - p;
  Rational theta = theta_factor(l);
  auto f = [&](mpfr_prec_t pr) {
    Real half_k = Real::of(k, pr) / Real::of(2, pr);
    return log_of_long(4 * (k + lt), pr) - half_k * log(x.to_real(pr)) -
           Real::of(lt, pr) * log(omp.to_real(pr)) +
           log(Real::of(theta, pr));
  };
  return checked_bound(f, prec, "thm_easy2_bound");
}

BoundValue cor_easy2_bound(long k, const std::vector<long>& l,
                           mpfr_prec_t prec) {
  require_targets(k, l);
  long lt = sum_targets(l);
  Rational theta = theta_factor(l);
  auto f = [&](mpfr_prec_t pr) {
    Real s5p1 = QuadraticSurd(Rational(1), Rational(1)).to_real(pr);
    Real k2l = Real::of(k + 2 * lt, pr);
    Real term_k =
        Real::of(k, pr) / Real::of(2, pr) * log(k2l / Real::of(k, pr));
    Real term_l = Real::of(lt, pr) * log(s5p1 * k2l / Real::of(4 * lt, pr));
    return log_of_long(2 * (k + lt), pr) + term_k + term_l +
           log(Real::of(theta, pr));
  };
  return checked_bound(f, prec, "cor_easy2_bound");
}

Real book_frontier(const Rational& p, const Rational& mu, mpfr_prec_t prec) {
  if (!(0 < mu && mu < p && p < 1)) {
    throw DomainError("requires 0 < mu < p < 1");
  }
  auto f = [&](mpfr_prec_t pr) {
    Real omu = Real::of(1 - mu, pr);
    return exp(log(Real::of(p, pr)) / omu + log(omu));
  };
  return checked_value(f, prec, "book_frontier");
}

Real book_frontier_finite(const Rational& p, const Rational& mu,
                          unsigned long r, mpfr_prec_t prec) {
  if (!(0 < mu && mu < p && p < 1)) {
    throw DomainError("requires 0 < mu < p < 1");
  }
  if (r == 0) throw DomainError("r must be positive");
  auto f = [&](mpfr_prec_t pr) {
    Real root = exp(log(Real::of(p, pr)) / Real::of(static_cast<long>(r), pr));
    Real base = root - Real::of(mu, pr);
    if (base.sgn() <= 0) throw DomainError("p^{1/r} must exceed mu");
    Real omu = Real::of(1 - mu, pr);
    return exp(Real::of(static_cast<long>(r), pr) * log(base) +
               (Real::of(1, pr) - Real::of(static_cast<long>(r), pr)) *
                   log(omu));
  };
  return checked_value(f, prec, "book_frontier_finite");
}

BoundValue bookcor_size_threshold(long k, long l, const Rational& x,
                                  const Rational& mu, const Rational& y,
                                  mpfr_prec_t prec) {
  require_targets(k, {l});
  if (x <= 0 || x >= 1 || mu <= 0 || mu >= 1 || y <= 0 || y >= 1) {
    throw DomainError("x, mu, y must lie in (0,1)");
  }
  auto f = [&](mpfr_prec_t pr) {
    Real half = Real::of(2, pr);
    return -(Real::of(k, pr) / half) * log(Real::of(x, pr)) -
           (Real::of(l, pr) / half) * log(Real::of(mu * y, pr));
  };
  return checked_bound(f, prec, "bookcor_size_threshold");
}

BoundValue main_exponent_bound(const ExponentStage& stage, long k, long l,
                               mpfr_prec_t prec) {
  require_targets(k, {l});
  if (l > k) throw DomainError("requires l <= k");
  validate_stage(stage);
  Rational lam = make_rational(l, k);
  auto f = [&](mpfr_prec_t pr) {
    StageConsts<Real> c = make_consts_real(stage, pr);
    return Real::of(k, pr) * stage_F(Real::of(lam, pr), c);
  };
  return checked_bound(f, prec, "main_exponent_bound");
}

}  // namespace ramsey
