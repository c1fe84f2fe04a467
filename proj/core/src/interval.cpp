#include "ramsey/interval.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"

namespace ramsey {

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.is_nan() || hi_.is_nan() || lo_.cmp(hi_) > 0) {
    throw DomainError("invalid interval endpoints");
  }
}

Interval Interval::point(Real v) {
  Real hi = v;
  return Interval(std::move(v), std::move(hi));
}

Interval Interval::of(long v, mpfr_prec_t prec) {
  return point(Real::of(v, prec));
}

Interval Interval::of(const Rational& q, mpfr_prec_t prec) {
  return Interval(Real::of(q, prec, Round::Down), Real::of(q, prec, Round::Up));
}

Interval Interval::of(const Rational& lo, const Rational& hi,
                      mpfr_prec_t prec) {
  return Interval(Real::of(lo, prec, Round::Down),
                  Real::of(hi, prec, Round::Up));
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  return Interval(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
}

mpfr_prec_t Interval::prec() const { return std::max(lo_.prec(), hi_.prec()); }

bool Interval::contains(const Rational& q) const {
  return lo_.cmp(q) <= 0 && hi_.cmp(q) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return lo_.cmp(inner.lo_) <= 0 && hi_.cmp(inner.hi_) >= 0;
}

bool Interval::definitely_gt(const Rational& q) const { return lo_.cmp(q) > 0; }
bool Interval::definitely_lt(const Rational& q) const { return hi_.cmp(q) < 0; }

Real Interval::width() const { return sub(hi_, lo_, Round::Up); }

Real Interval::mid() const {
  return mul(lo_ + hi_, Real::of_double(0.5, lo_.prec()), Round::Nearest);
}

std::string Interval::to_string() const {
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(add(a.lo(), b.lo(), Round::Down),
                  add(a.hi(), b.hi(), Round::Up));
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(sub(a.lo(), b.hi(), Round::Down),
                  sub(a.hi(), b.lo(), Round::Up));
}

Interval operator-(const Interval& a) {
  return Interval(neg(a.hi()), neg(a.lo()));
}

Interval operator*(const Interval& a, const Interval& b) {
  // Sign fast paths cover nearly every multiply in this library.
  if (a.lo().sgn() >= 0 && b.lo().sgn() >= 0) {
    return Interval(mul(a.lo(), b.lo(), Round::Down),
                    mul(a.hi(), b.hi(), Round::Up));
  }
  if (a.hi().sgn() <= 0 && b.hi().sgn() <= 0) {
    return Interval(mul(a.hi(), b.hi(), Round::Down),
                    mul(a.lo(), b.lo(), Round::Up));
  }
  Real lo = mul(a.lo(), b.lo(), Round::Down);
  lo = min(lo, mul(a.lo(), b.hi(), Round::Down));
  lo = min(lo, mul(a.hi(), b.lo(), Round::Down));
  lo = min(lo, mul(a.hi(), b.hi(), Round::Down));
  Real hi = mul(a.lo(), b.lo(), Round::Up);
  hi = max(hi, mul(a.lo(), b.hi(), Round::Up));
  hi = max(hi, mul(a.hi(), b.lo(), Round::Up));
  hi = max(hi, mul(a.hi(), b.hi(), Round::Up));
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo().sgn() <= 0 && b.hi().sgn() >= 0) {
    throw DomainError("division by an interval containing zero");
  }
  Real lo = div(a.lo(), b.lo(), Round::Down);
  lo = min(lo, div(a.lo(), b.hi(), Round::Down));
  lo = min(lo, div(a.hi(), b.lo(), Round::Down));
  lo = min(lo, div(a.hi(), b.hi(), Round::Down));
  Real hi = div(a.lo(), b.lo(), Round::Up);
  hi = max(hi, div(a.lo(), b.hi(), Round::Up));
  hi = max(hi, div(a.hi(), b.lo(), Round::Up));
  hi = max(hi, div(a.hi(), b.hi(), Round::Up));
  return Interval(std::move(lo), std::move(hi));
}

Interval exp(const Interval& a) {
  return Interval(exp(a.lo(), Round::Down), exp(a.hi(), Round::Up));
}

Interval log(const Interval& a) {
  if (a.lo().sgn() <= 0) {
    throw DomainError("log of an interval reaching zero or below");
  }
  return Interval(log(a.lo(), Round::Down), log(a.hi(), Round::Up));
}

Interval sqrt(const Interval& a) {
  if (a.lo().sgn() < 0) throw DomainError("sqrt of a negative interval");
  return Interval(sqrt(a.lo(), Round::Down), sqrt(a.hi(), Round::Up));
}

Interval pow(const Interval& base, const Interval& e) {
  return exp(e * log(base));
}

}  // namespace ramsey
