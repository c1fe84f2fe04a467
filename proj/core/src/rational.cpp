#include "ramsey/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "ramsey/errors.hpp"

namespace ramsey {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow_int(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw DomainError("0 raised to a negative power");
  unsigned long mag = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), mag);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), mag);
  if (e < 0) {
    mpz_swap(r.get_num_mpz_t(), r.get_den_mpz_t());
  }
  r.canonicalize();
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return BigInt(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw ParseError("empty rational literal");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) throw ParseError("bare sign in rational literal: " + text);

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed fraction: " + text);
    }
    Rational q{BigInt(num), BigInt(den)};
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string etail = s.substr(epos + 1);
    s.erase(epos);
    if (etail.empty()) throw ParseError("malformed exponent: " + text);
    char* end = nullptr;
    exp10 = std::strtol(etail.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') {
      throw ParseError("malformed exponent: " + text);
    }
  }

  std::string digits = s;
  auto dot = digits.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(digits.size() - dot - 1);
    digits.erase(dot, 1);
  }
  if (!all_digits(digits)) throw ParseError("malformed rational literal: " + text);

  Rational q{BigInt(digits)};
  if (exp10 > 0) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10));
    q *= Rational(scale);
  } else if (exp10 < 0) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(-exp10));
    q /= Rational(scale);
  }
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

BigInt ceil_rational(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace ramsey
