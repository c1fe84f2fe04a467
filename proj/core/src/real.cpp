#include "ramsey/real.hpp"

#include <algorithm>
#include <cstdlib>

#include "ramsey/errors.hpp"

namespace ramsey {

mpfr_rnd_t to_mpfr_rnd(Round r) {
  switch (r) {
    case Round::Down:
      return MPFR_RNDD;
    case Round::Up:
      return MPFR_RNDU;
    default:
      return MPFR_RNDN;
  }
}

Real::Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const Rational& q, mpfr_prec_t prec, Round r) {
  Real out(prec);
  mpfr_set_q(out.v_, q.get_mpq_t(), to_mpfr_rnd(r));
  return out;
}

Real Real::of_double(double v, mpfr_prec_t prec) {
  Real out(prec);
  mpfr_set_d(out.v_, v, MPFR_RNDN);
  return out;
}

Real Real::parse(const std::string& text, mpfr_prec_t prec, Round r) {
  Real out(prec);
  if (mpfr_set_str(out.v_, text.c_str(), 10, to_mpfr_rnd(r)) != 0) {
    throw ParseError("malformed numeric literal: " + text);
  }
  return out;
}

std::string Real::to_string(int digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sgn() < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";

  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_,
                         MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);

  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  while (m.size() > 1 && m.back() == '0') m.pop_back();
  std::string out = sign + m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(static_cast<long>(e - 1));
  return out;
}

namespace {

mpfr_prec_t pick_prec(const Real& a, const Real& b, mpfr_prec_t prec) {
  return prec != 0 ? prec : std::max(a.prec(), b.prec());
}

mpfr_prec_t pick_prec(const Real& a, mpfr_prec_t prec) {
  return prec != 0 ? prec : a.prec();
}

}  // namespace

void require_agreement(const Real& a, const Real& b, mpfr_prec_t prec,
                       const char* what) {
  Real diff = abs(a - b);
  Real scale = max(Real::of(1, prec), abs(b));
  Real tol(prec);
  mpfr_set_ui_2exp(tol.raw(), 1, -(prec - 16), MPFR_RNDU);
  if (diff > mul(scale, tol, Round::Up)) {
    throw PrecisionError(std::string("doubled-precision recheck failed for ") +
                         what);
  }
}

Real add(const Real& a, const Real& b, Round r, mpfr_prec_t prec) {
  Real out(pick_prec(a, b, prec));
  mpfr_add(out.raw(), a.raw(), b.raw(), to_mpfr_rnd(r));
  return out;
}

Real sub(const Real& a, const Real& b, Round r, mpfr_prec_t prec) {
  Real out(pick_prec(a, b, prec));
  mpfr_sub(out.raw(), a.raw(), b.raw(), to_mpfr_rnd(r));
  return out;
}

Real mul(const Real& a, const Real& b, Round r, mpfr_prec_t prec) {
  Real out(pick_prec(a, b, prec));
  mpfr_mul(out.raw(), a.raw(), b.raw(), to_mpfr_rnd(r));
  return out;
}

Real div(const Real& a, const Real& b, Round r, mpfr_prec_t prec) {
  Real out(pick_prec(a, b, prec));
  mpfr_div(out.raw(), a.raw(), b.raw(), to_mpfr_rnd(r));
  return out;
}

Real neg(const Real& a) {
  Real out(a.prec());
  mpfr_neg(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

Real abs(const Real& a) {
  Real out(a.prec());
  mpfr_abs(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

Real min(const Real& a, const Real& b) { return a.cmp(b) <= 0 ? a : b; }
Real max(const Real& a, const Real& b) { return a.cmp(b) >= 0 ? a : b; }

Real exp(const Real& a, Round r, mpfr_prec_t prec) {
  Real out(pick_prec(a, prec));
  mpfr_exp(out.raw(), a.raw(), to_mpfr_rnd(r));
  return out;
}

Real log(const Real& a, Round r, mpfr_prec_t prec) {
  if (a.sgn() <= 0) throw DomainError("log of a nonpositive value");
  Real out(pick_prec(a, prec));
  mpfr_log(out.raw(), a.raw(), to_mpfr_rnd(r));
  return out;
}

Real sqrt(const Real& a, Round r, mpfr_prec_t prec) {
  if (a.sgn() < 0) throw DomainError("sqrt of a negative value");
  Real out(pick_prec(a, prec));
  mpfr_sqrt(out.raw(), a.raw(), to_mpfr_rnd(r));
  return out;
}

Real pow(const Real& base, const Real& e, Round r, mpfr_prec_t prec) {
  Real out(pick_prec(base, e, prec));
  mpfr_pow(out.raw(), base.raw(), e.raw(), to_mpfr_rnd(r));
  return out;
}

Real pow_si(const Real& base, long e, Round r, mpfr_prec_t prec) {
  Real out(pick_prec(base, prec));
  mpfr_pow_si(out.raw(), base.raw(), e, to_mpfr_rnd(r));
  return out;
}

}  // namespace ramsey
