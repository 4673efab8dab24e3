#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace gmf {

using Rational = mpq_class;

/// Parses "a" or "a/b" into a canonical rational; throws InputError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// Gaussian rational re + im*i with exact field arithmetic.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(Rational re, Rational im = 0);

  static ExactComplex i() { return ExactComplex(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactComplex conj() const { return {re_, -im_}; }

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);
  /// Throws std::domain_error on division by zero.
  ExactComplex& operator/=(const ExactComplex& o);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  ExactComplex operator-() const { return {-re_, -im_}; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "a/b" when real, otherwise "a/b+c/d i" (integers print without "/1").
  std::string to_string() const;

  /// Accepts the to_string form plus looser spellings: "i", "-3i", "1/2 - i",
  /// "2+3/4 i". Throws InputError on anything else.
  static ExactComplex parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

/// i^k for any integer k.
ExactComplex i_power(long long k);

}  // namespace gmf
