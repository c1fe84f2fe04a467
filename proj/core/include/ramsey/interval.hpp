#pragma once

#include <string>

#include "ramsey/real.hpp"

namespace ramsey {

/// Closed interval [lo, hi] with outward-rounded arithmetic: every operation
/// returns an interval guaranteed to contain the exact image of its inputs.
class Interval {
 public:
  Interval(Real lo, Real hi);

  static Interval point(Real v);
  static Interval of(long v, mpfr_prec_t prec = kDefaultPrec);
  static Interval of(const Rational& q, mpfr_prec_t prec = kDefaultPrec);
  static Interval of(const Rational& lo, const Rational& hi,
                     mpfr_prec_t prec = kDefaultPrec);
  static Interval hull(const Interval& a, const Interval& b);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  mpfr_prec_t prec() const;

  bool contains(const Rational& q) const;
  bool contains(const Interval& inner) const;
  bool definitely_gt(const Rational& q) const;  // lo > q
  bool definitely_lt(const Rational& q) const;  // hi < q
  bool definitely_positive() const { return lo_.sgn() > 0; }
  bool definitely_negative() const { return hi_.sgn() < 0; }

  Real width() const;  // hi - lo, rounded up
  Real mid() const;
  std::string to_string() const;

 private:
  Real lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

Interval exp(const Interval& a);
Interval log(const Interval& a);
Interval sqrt(const Interval& a);
/// base^e for base.lo > 0, via exp(e * log(base)).
Interval pow(const Interval& base, const Interval& e);

}  // namespace ramsey
