#include "omega/scalar.hpp"

namespace omega {

Scalar Scalar::pow2(int e) {
  mpz_class num = 1;
  mpz_class den = 1;
  if (e >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return Scalar(mpq_class(num, den));
}

Scalar min(const Scalar& a, const Scalar& b) { return a <= b ? a : b; }
Scalar max(const Scalar& a, const Scalar& b) { return a >= b ? a : b; }

Scalar abs_diff(const mpq_class& a, const mpq_class& b) {
  mpq_class d = a - b;
  return Scalar(mpq_class(abs(d)));
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : text) {
    if (c != '-' && c != '+' && c != '/' && (c < '0' || c > '9')) {
      throw std::invalid_argument("bad rational literal: " + text);
    }
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + text);
  }
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace omega
