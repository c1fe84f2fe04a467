#pragma once

#include <string>

#include "ramsey/interval.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/real.hpp"

namespace ramsey {

/// Element a + b*sqrt(5) of the real quadratic field Q(sqrt(5)), with exact
/// field arithmetic and exact sign decisions.
class QuadraticSurd {
 public:
  QuadraticSurd() : a_(0), b_(0) {}
  QuadraticSurd(Rational a, Rational b);
  explicit QuadraticSurd(const Rational& a) : QuadraticSurd(a, Rational(0)) {}

  static QuadraticSurd sqrt5() { return QuadraticSurd(Rational(0), Rational(1)); }
  /// (1 + sqrt(5)) / 2
  static QuadraticSurd golden_ratio();

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;

  QuadraticSurd operator-() const;
  QuadraticSurd& operator+=(const QuadraticSurd& o);
  QuadraticSurd& operator-=(const QuadraticSurd& o);
  QuadraticSurd& operator*=(const QuadraticSurd& o);
  QuadraticSurd& operator/=(const QuadraticSurd& o);

  std::string to_string() const;

  Real to_real(mpfr_prec_t prec = kDefaultPrec,
               Round r = Round::Nearest) const;
  Interval enclosure(mpfr_prec_t prec = kDefaultPrec) const;

 private:
  Rational a_, b_;
};

QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b);
QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b);
QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b);
QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b);

bool operator==(const QuadraticSurd& a, const QuadraticSurd& b);
bool operator!=(const QuadraticSurd& a, const QuadraticSurd& b);
bool operator<(const QuadraticSurd& a, const QuadraticSurd& b);
bool operator<=(const QuadraticSurd& a, const QuadraticSurd& b);
bool operator>(const QuadraticSurd& a, const QuadraticSurd& b);
bool operator>=(const QuadraticSurd& a, const QuadraticSurd& b);

}  // namespace ramsey
