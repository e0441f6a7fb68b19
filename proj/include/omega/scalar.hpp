#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace omega {

/// Exact nonnegative rational. Every norm, radius, bound and tolerance in
/// the library is a Scalar; all arithmetic on it is exact.
class Scalar {
 public:
  Scalar() : v_(0) {}

  explicit Scalar(mpq_class v) : v_(std::move(v)) {
    v_.canonicalize();
    if (sgn(v_) < 0) {
      throw std::invalid_argument("Scalar: negative value " + v_.get_str());
    }
  }

  Scalar(unsigned long n) : v_(static_cast<long>(n)) {}  // NOLINT: small counts read naturally

  // Bypasses the sign check. Exists so deliberately broken norms can be
  // expressed in tests and reported by the axiom checker instead of
  // throwing at construction time.
  static Scalar unchecked(mpq_class v) {
    Scalar s;
    s.v_ = std::move(v);
    s.v_.canonicalize();
    return s;
  }

  /// 2^e, e of either sign.
  static Scalar pow2(int e);

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_negative() const { return sgn(v_) < 0; }  // only via unchecked()

  Scalar operator+(const Scalar& o) const { return unchecked(v_ + o.v_); }
  Scalar operator*(const Scalar& o) const { return unchecked(v_ * o.v_); }
  Scalar operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    return unchecked(v_ / o.v_);
  }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return v_ != o.v_; }
  bool operator<(const Scalar& o) const { return v_ < o.v_; }
  bool operator<=(const Scalar& o) const { return v_ <= o.v_; }
  bool operator>(const Scalar& o) const { return v_ > o.v_; }
  bool operator>=(const Scalar& o) const { return v_ >= o.v_; }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

/// |a - b| over signed rationals, as a Scalar.
Scalar abs_diff(const mpq_class& a, const mpq_class& b);

/// Parses "n" or "n/d" (optionally signed, base 10). Throws std::invalid_argument.
mpq_class parse_rational(const std::string& text);

std::string rational_str(const mpq_class& q);

}  // namespace omega
