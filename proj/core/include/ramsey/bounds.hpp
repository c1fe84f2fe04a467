#pragma once

#include <vector>

#include "ramsey/rational.hpp"
#include "ramsey/real.hpp"
#include "ramsey/stage.hpp"
#include "ramsey/surd.hpp"

namespace ramsey {

/// A bound reported both on the natural-log scale and linearly. The linear
/// value is always computed (MPFR holds it comfortably); overflow flags
/// bounds whose linear value exceeds the double range.
struct BoundValue {
  Real log_value;
  Real value;
  bool overflow;
};

BoundValue bound_from_log(Real log_value);

/// Erdos-Szekeres: R(k,l) <= C(k+l-2, k-1). Exact.
BigInt es_bound(long k, long l);

/// Product form of Erdos-Szekeres: R(k,l) <= x^{-k+1}(1-x)^{-l+1}, 0<x<1.
BoundValue es_product_bound(long k, long l, const Rational& x,
                            mpfr_prec_t prec = kDefaultPrec);

/// Multicolor product form: R(k,(l_i)) <= x^{-k+1} prod y_i^{-l_i+1},
/// requiring x + sum y_i <= 1 with x and every y_i positive.
BoundValue es_product_bound(long k, const std::vector<long>& l,
                            const Rational& x, const std::vector<Rational>& y,
                            mpfr_prec_t prec = kDefaultPrec);

/// x(p) = ((1+sqrt5)/2) p + (1-sqrt5)/2; positive iff p > (sqrt5-1)/(sqrt5+1).
QuadraticSurd golden_x(const QuadraticSurd& p);

/// Identity behind the golden choice of x: (1-p)^2 = (1-x)(p-x).
/// Exposed for property tests.
QuadraticSurd golden_identity_gap(const QuadraticSurd& p);

/// R(k,l) <= 4(k+l) x(p)^{-k/2} (1-p)^{-l} for (sqrt5-1)/(sqrt5+1) < p < 1.
BoundValue thm_easy_bound(long k, long l, const QuadraticSurd& p,
                          mpfr_prec_t prec = kDefaultPrec);

/// The p minimizing thm_easy_bound: ((sqrt5+1)k + (2 sqrt5-2)l) /
/// ((sqrt5+1)(k+2l)). At this p, x(p) = k/(k+2l).
QuadraticSurd p_hat(long k, long l);

/// R(k,l) <= 4(k+l) ((sqrt5+1)(k+2l)/(4l))^l ((k+2l)/k)^{k/2}, k >= l >= 1.
BoundValue cor_easy_bound(long k, long l, mpfr_prec_t prec = kDefaultPrec);

/// log(bound / es_bound(k, l)): how far a bound value sits above or below
/// the binomial baseline. Negative means an improvement.
Real log_ratio_to_es(const BoundValue& b, long k, long l,
                     mpfr_prec_t prec = kDefaultPrec);

/// Per-k exponent of cor_easy_bound relative to Erdos-Szekeres at l = lam k:
/// lam log((sqrt5+1)(1+2 lam)/(4(1+lam))) + (1/2) log((1+2 lam)/(1+lam)^2).
/// Negative means an exponential improvement.
Real ratio_exponent(const Rational& lam, mpfr_prec_t prec = kDefaultPrec);

/// Root of ratio_exponent in [1/2, 1], located to within tol by bisection
/// with certified signs.
Real crossover_root(mpfr_prec_t prec = kDefaultPrec,
                    const Rational& tol = make_rational(1, 1000000000));

/// Theta((l_i)) = l^l / prod l_i^{l_i}. Exact.
Rational theta_factor(const std::vector<long>& l);

/// Multicolor theorem: R(k,(l_i)) <= 4(k+l) x(p)^{-k/2} (1-p)^{-l} Theta.
BoundValue thm_easy2_bound(long k, const std::vector<long>& l,
                           const QuadraticSurd& p,
                           mpfr_prec_t prec = kDefaultPrec);

/// Multicolor corollary:
/// R(k,(l_i)) <= 2(k+l) ((k+2l)/k)^{k/2} ((sqrt5+1)(k+2l)/(4l))^l Theta.
BoundValue cor_easy2_bound(long k, const std::vector<long>& l,
                           mpfr_prec_t prec = kDefaultPrec);

/// Limit frontier of the book stage: p^{1/(1-mu)} (1-mu), for 0 < mu < p < 1.
Real book_frontier(const Rational& p, const Rational& mu,
                   mpfr_prec_t prec = kDefaultPrec);

/// Finite-r version (p^{1/r} - mu)^r (1-mu)^{1-r}; converges to
/// book_frontier as r grows. Requires p^{1/r} > mu.
Real book_frontier_finite(const Rational& p, const Rational& mu,
                          unsigned long r, mpfr_prec_t prec = kDefaultPrec);

/// Vertex count at which the book corollary applies: x^{-k/2} (mu y)^{-l/2}.
BoundValue bookcor_size_threshold(long k, long l, const Rational& x,
                                  const Rational& mu, const Rational& y,
                                  mpfr_prec_t prec = kDefaultPrec);

/// log R(k,l) <= k F(l/k) + o(k) for a verified stage; this computes k F(l/k).
BoundValue main_exponent_bound(const ExponentStage& stage, long k, long l,
                               mpfr_prec_t prec = kDefaultPrec);

}  // namespace ramsey
