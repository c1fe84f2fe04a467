#pragma once

#include <mpfr.h>

#include <string>

#include "ramsey/rational.hpp"

namespace ramsey {

inline constexpr mpfr_prec_t kDefaultPrec = 128;

enum class Round { Nearest, Down, Up };

mpfr_rnd_t to_mpfr_rnd(Round r);

/// Arbitrary-precision float. Every value carries its own precision;
/// arithmetic defaults to round-to-nearest at the widest operand precision,
/// with directed-rounding variants for enclosure work.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = kDefaultPrec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real of(long v, mpfr_prec_t prec = kDefaultPrec);
  static Real of(const Rational& q, mpfr_prec_t prec = kDefaultPrec,
                 Round r = Round::Nearest);
  static Real of_double(double v, mpfr_prec_t prec = kDefaultPrec);
  static Real parse(const std::string& text, mpfr_prec_t prec = kDefaultPrec,
                    Round r = Round::Nearest);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Scientific notation; digits == 0 means enough digits to round-trip.
  std::string to_string(int digits = 0) const;

  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  int cmp(long o) const { return mpfr_cmp_si(v_, o); }
  int cmp(const Rational& o) const { return mpfr_cmp_q(v_, o.get_mpq_t()); }

 private:
  mpfr_t v_;
};

inline bool operator<(const Real& a, const Real& b) { return a.cmp(b) < 0; }
inline bool operator<=(const Real& a, const Real& b) { return a.cmp(b) <= 0; }
inline bool operator>(const Real& a, const Real& b) { return a.cmp(b) > 0; }
inline bool operator>=(const Real& a, const Real& b) { return a.cmp(b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return a.cmp(b) == 0; }
inline bool operator!=(const Real& a, const Real& b) { return a.cmp(b) != 0; }

/// Throws PrecisionError unless a and b agree to roughly prec-16 bits
/// (relative to max(1, |b|)). Used by checked point evaluations that
/// recompute at doubled precision.
void require_agreement(const Real& a, const Real& b, mpfr_prec_t prec,
                       const char* what);

// Directed arithmetic. prec == 0 selects the widest operand precision.
Real add(const Real& a, const Real& b, Round r, mpfr_prec_t prec = 0);
Real sub(const Real& a, const Real& b, Round r, mpfr_prec_t prec = 0);
Real mul(const Real& a, const Real& b, Round r, mpfr_prec_t prec = 0);
Real div(const Real& a, const Real& b, Round r, mpfr_prec_t prec = 0);
Real neg(const Real& a);
Real abs(const Real& a);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

Real exp(const Real& a, Round r = Round::Nearest, mpfr_prec_t prec = 0);
Real log(const Real& a, Round r = Round::Nearest, mpfr_prec_t prec = 0);
Real sqrt(const Real& a, Round r = Round::Nearest, mpfr_prec_t prec = 0);
Real pow(const Real& base, const Real& e, Round r = Round::Nearest,
         mpfr_prec_t prec = 0);
Real pow_si(const Real& base, long e, Round r = Round::Nearest,
            mpfr_prec_t prec = 0);

// Round-to-nearest operators at the widest operand precision.
inline Real operator+(const Real& a, const Real& b) {
  return add(a, b, Round::Nearest);
}
inline Real operator-(const Real& a, const Real& b) {
  return sub(a, b, Round::Nearest);
}
inline Real operator*(const Real& a, const Real& b) {
  return mul(a, b, Round::Nearest);
}
inline Real operator/(const Real& a, const Real& b) {
  return div(a, b, Round::Nearest);
}
inline Real operator-(const Real& a) { return neg(a); }

}  // namespace ramsey
