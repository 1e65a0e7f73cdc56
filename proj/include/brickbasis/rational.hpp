#ifndef BRICKBASIS_RATIONAL_HPP
#define BRICKBASIS_RATIONAL_HPP

#include <brickbasis/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace brickbasis {

using bigint = boost::multiprecision::cpp_int;

// Exact fraction over arbitrary-precision integers. Always kept canonical:
// denominator > 0, gcd(|num|, den) = 1. No floating point is involved in
// any arithmetic or comparison.
class rational {
public:
  rational() : num_(0), den_(1) {}
  rational(long long value) : num_(value), den_(1) {}
  rational(bigint value) : num_(std::move(value)), den_(1) {}

  rational(bigint num, bigint den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0)
      throw invalid_input("rational: zero denominator");
    normalize();
  }

  const bigint &num() const { return num_; }
  const bigint &den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  rational operator-() const { return raw(-num_, den_); }

  friend rational operator+(const rational &a, const rational &b) {
    return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend rational operator-(const rational &a, const rational &b) {
    return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend rational operator*(const rational &a, const rational &b) {
    return rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend rational operator/(const rational &a, const rational &b) {
    if (b.num_ == 0)
      throw invalid_input("rational: division by zero");
    return rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  rational &operator+=(const rational &b) { return *this = *this + b; }
  rational &operator-=(const rational &b) { return *this = *this - b; }
  rational &operator*=(const rational &b) { return *this = *this * b; }
  rational &operator/=(const rational &b) { return *this = *this / b; }

  // Denominators are positive, so cross-multiplication preserves order.
  friend bool operator==(const rational &a, const rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const rational &a, const rational &b) { return !(a == b); }
  friend bool operator<(const rational &a, const rational &b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const rational &a, const rational &b) { return b < a; }
  friend bool operator<=(const rational &a, const rational &b) { return !(b < a); }
  friend bool operator>=(const rational &a, const rational &b) { return !(a < b); }

  // Canonical machine form, always "p/q" ("3/1", "-1/3").
  std::string str() const { return num_.str() + "/" + den_.str(); }

  // Human form: integers drop the "/1".
  std::string display_str() const {
    return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
  }

  // Parses "p" or "p/q". Rejects anything else.
  static rational parse(const std::string &text);

  // Parses "p/q" only, and insists the text already is in canonical form
  // (q > 0, lowest terms). Used by file readers that require byte-stable
  // round trips.
  static rational parse_canonical(const std::string &text);

private:
  static rational raw(bigint num, bigint den) {
    rational r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    bigint g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  bigint num_;
  bigint den_;
};

// Spec-level constructor: canonical lowest-terms value of num/den.
inline rational rational_normalize(bigint num, bigint den) {
  return rational(std::move(num), std::move(den));
}

inline rational abs(const rational &a) { return a.sign() < 0 ? -a : a; }

} // namespace brickbasis

#endif // BRICKBASIS_RATIONAL_HPP
