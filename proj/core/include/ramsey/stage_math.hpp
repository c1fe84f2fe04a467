#pragma once

#include "ramsey/dual.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/interval.hpp"
#include "ramsey/stage.hpp"

// Generic evaluation core for the stage functions. The same expressions are
// instantiated at T = Real (point values), T = Interval (enclosures) and
// T = Dual<Interval> (enclosures of value and derivative together).

namespace ramsey {

enum class Trilean { True, False, Both };

/// What to do when an enclosure straddles the X = 1/2 branch point or the
/// min(.., 1) clamp of Y: hull both branches (sound for values), or refuse
/// (required for derivatives, which jump across the seam).
enum class StraddleMode { Hull, Error };

inline Trilean le_threshold(const Real& x, const Rational& t) {
  return x.cmp(t) <= 0 ? Trilean::True : Trilean::False;
}
inline Trilean le_threshold(const Interval& x, const Rational& t) {
  if (x.hi().cmp(t) <= 0) return Trilean::True;
  if (x.lo().cmp(t) > 0) return Trilean::False;
  return Trilean::Both;
}
template <class T>
Trilean le_threshold(const Dual<T>& x, const Rational& t) {
  return le_threshold(x.val, t);
}

inline Trilean ge_threshold(const Real& x, const Rational& t) {
  return x.cmp(t) >= 0 ? Trilean::True : Trilean::False;
}
inline Trilean ge_threshold(const Interval& x, const Rational& t) {
  if (x.lo().cmp(t) >= 0) return Trilean::True;
  if (x.hi().cmp(t) < 0) return Trilean::False;
  return Trilean::Both;
}
template <class T>
Trilean ge_threshold(const Dual<T>& x, const Rational& t) {
  return ge_threshold(x.val, t);
}

inline bool certainly_positive(const Real& x) { return x.sgn() > 0; }
inline bool certainly_positive(const Interval& x) {
  return x.definitely_positive();
}
template <class T>
bool certainly_positive(const Dual<T>& x) {
  return certainly_positive(x.val);
}

inline Real hull_of(const Real&, const Real&) {
  throw InternalContradictionError("point evaluation reached a straddle");
}
inline Interval hull_of(const Interval& a, const Interval& b) {
  return Interval::hull(a, b);
}
inline Dual<Interval> hull_of(const Dual<Interval>& a, const Dual<Interval>& b) {
  return Dual<Interval>{Interval::hull(a.val, b.val),
                        Interval::hull(a.der, b.der)};
}

/// Constants of one stage, materialized once per scalar type.
template <class T>
struct StageConsts {
  T one, half, quarter, c2_25, c6_25, beta, two_beta;
  T e_alpha, e_neg_alpha;
  T zero;
};

StageConsts<Real> make_consts_real(const ExponentStage& stage,
                                   mpfr_prec_t prec);
StageConsts<Interval> make_consts_interval(const ExponentStage& stage,
                                           mpfr_prec_t prec);
StageConsts<Dual<Interval>> make_consts_dual(const ExponentStage& stage,
                                             mpfr_prec_t prec);

template <class T>
T correction_term(const T& lam, const StageConsts<T>& k) {
  return lam * (k.beta * lam + k.c2_25 * (lam * lam) - k.quarter) * exp(-lam);
}

template <class T>
T correction_term_deriv(const T& lam, const StageConsts<T>& k) {
  T head = (k.two_beta * lam + k.c6_25 * (lam * lam) - k.quarter) * exp(-lam);
  return head - correction_term(lam, k);
}

template <class T>
T entropy_term(const T& lam, const StageConsts<T>& k) {
  T lp1 = lam + k.one;
  return lp1 * log(lp1) - lam * log(lam);
}

template <class T>
T stage_F(const T& lam, const StageConsts<T>& k) {
  return entropy_term(lam, k) + correction_term(lam, k);
}

template <class T>
T stage_Fp(const T& lam, const StageConsts<T>& k) {
  return log(lam + k.one) - log(lam) + correction_term_deriv(lam, k);
}

template <class T>
T stage_M(const T& lam) {
  return lam * exp(-lam);
}

/// X = u^{1/(1-M)} (1-M) with u = 1 - e^{-F'}; requires F' > 0 certainly.
template <class T>
T stage_X(const T& fp, const T& m, const StageConsts<T>& k) {
  T u = k.one - exp(-fp);
  if (!certainly_positive(u)) {
    throw XUndefinedError("1 - e^{-F'} not certainly positive");
  }
  T om = k.one - m;
  if (!certainly_positive(om)) {
    throw DomainError("1 - M not certainly positive");
  }
  return exp(log(u) / om) * om;
}

inline Real clamp_to_one(const Real& v, const StageConsts<Real>&,
                         StraddleMode) {
  return min(v, Real::of(1, v.prec()));
}
inline Interval clamp_to_one(const Interval& v, const StageConsts<Interval>& k,
                             StraddleMode mode) {
  Trilean t = le_threshold(v, Rational(1));
  if (t == Trilean::True) return v;
  if (t == Trilean::Both && mode == StraddleMode::Error) {
    throw BranchBoundaryError("Y clamp boundary straddled");
  }
  const Real& one = k.one.lo();
  return Interval(min(v.lo(), one), min(v.hi(), one));
}
inline Dual<Interval> clamp_to_one(const Dual<Interval>& v,
                                   const StageConsts<Dual<Interval>>& k,
                                   StraddleMode mode) {
  Trilean t = le_threshold(v.val, Rational(1));
  if (t == Trilean::True) return v;
  if (t == Trilean::False) return Dual<Interval>{k.one.val, k.zero.val};
  if (mode == StraddleMode::Error) {
    throw BranchBoundaryError("Y clamp boundary straddled");
  }
  const Real& one = k.one.val.lo();
  Interval val(min(v.val.lo(), one), min(v.val.hi(), one));
  return Dual<Interval>{std::move(val), Interval::hull(v.der, k.zero.val)};
}

/// Two-branch Y: e^alpha (1-X) capped at 1 while X <= 1/2, else 1 - X e^{-alpha}.
template <class T>
T stage_Y(const T& x, const StageConsts<T>& k, StraddleMode mode) {
  Trilean t = le_threshold(x, make_rational(1, 2));
  if (t == Trilean::True) {
    return clamp_to_one(k.e_alpha * (k.one - x), k, mode);
  }
  if (t == Trilean::False) {
    return k.one - x * k.e_neg_alpha;
  }
  if (mode == StraddleMode::Error) {
    throw BranchBoundaryError("Y branch boundary X = 1/2 straddled");
  }
  return hull_of(clamp_to_one(k.e_alpha * (k.one - x), k, mode),
                 k.one - x * k.e_neg_alpha);
}

template <class T>
T stage_psi(const T& lam, const T& f, const T& x, const T& m, const T& y,
            const StageConsts<T>& k) {
  return f + k.half * (log(x) + lam * (log(m) + log(y)));
}

template <class T>
struct StageValues {
  T F, Fp, M, X, Y, psi;
};

template <class T>
StageValues<T> eval_stage(const T& lam, const StageConsts<T>& k,
                          StraddleMode mode) {
  T f = stage_F(lam, k);
  T fp = stage_Fp(lam, k);
  T m = stage_M(lam);
  T x = stage_X(fp, m, k);
  T y = stage_Y(x, k, mode);
  T psi = stage_psi(lam, f, x, m, y, k);
  return StageValues<T>{std::move(f), std::move(fp), std::move(m),
                        std::move(x), std::move(y), std::move(psi)};
}

}  // namespace ramsey
