#include "ramsey/surd.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

QuadraticSurd::QuadraticSurd(Rational a, Rational b)
    : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

QuadraticSurd QuadraticSurd::golden_ratio() {
  return QuadraticSurd(make_rational(1, 2), make_rational(1, 2));
}

int QuadraticSurd::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 5 b^2; the larger magnitude wins.
  Rational d = a_ * a_ - 5 * b_ * b_;
  int sd = sgn(d);
  if (sd == 0) {
    throw InternalContradictionError("a + b*sqrt(5) = 0 with a, b nonzero");
  }
  return sd > 0 ? sa : sb;
}

QuadraticSurd QuadraticSurd::operator-() const {
  return QuadraticSurd(-a_, -b_);
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  a_.canonicalize();
  b_.canonicalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& o) {
  Rational norm = o.a_ * o.a_ - 5 * o.b_ * o.b_;
  if (norm == 0) {
    if (o.a_ == 0 && o.b_ == 0) throw DomainError("division by zero");
    throw InternalContradictionError("zero norm for nonzero surd");
  }
  // Multiply by the conjugate (a - b*sqrt(5)) / norm.
  QuadraticSurd conj(o.a_ / norm, -o.b_ / norm);
  return *this *= conj;
}

QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) {
  return a += b;
}
QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) {
  return a -= b;
}
QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) {
  return a *= b;
}
QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) {
  return a /= b;
}

bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
  return a.a() == b.a() && a.b() == b.b();
}
bool operator!=(const QuadraticSurd& a, const QuadraticSurd& b) {
  return !(a == b);
}
bool operator<(const QuadraticSurd& a, const QuadraticSurd& b) {
  return (a - b).sign() < 0;
}
bool operator<=(const QuadraticSurd& a, const QuadraticSurd& b) {
  return (a - b).sign() <= 0;
}
bool operator>(const QuadraticSurd& a, const QuadraticSurd& b) {
  return (a - b).sign() > 0;
}
bool operator>=(const QuadraticSurd& a, const QuadraticSurd& b) {
  return (a - b).sign() >= 0;
}

std::string QuadraticSurd::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string out = a_ == 0 ? "" : a_.get_str();
  if (sgn(b_) >= 0 && !out.empty()) out += " + ";
  if (sgn(b_) < 0) out += out.empty() ? "-" : " - ";
  Rational mag = abs(b_);
  if (mag != 1) out += mag.get_str() + "*";
  out += "sqrt(5)";
  return out;
}

Real QuadraticSurd::to_real(mpfr_prec_t prec, Round r) const {
  if (b_ == 0) return Real::of(a_, prec, r);
  // Directed rounding must follow the sign of the sqrt(5) coefficient.
  Round rb = r;
  if (sgn(b_) < 0 && r != Round::Nearest) {
    rb = r == Round::Down ? Round::Up : Round::Down;
  }
  Real root = sqrt(Real::of(5, prec), rb, prec);
  return add(Real::of(a_, prec, r), mul(Real::of(b_, prec, r), root, r), r);
}

Interval QuadraticSurd::enclosure(mpfr_prec_t prec) const {
  return Interval(to_real(prec, Round::Down), to_real(prec, Round::Up));
}

}  // namespace ramsey
