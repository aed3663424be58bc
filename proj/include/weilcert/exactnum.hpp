#pragma once

// Exact arithmetic over Q and Q(i).
//
// Rational wraps a GMP mpq_class and is kept canonical at all times
// (positive denominator, coprime numerator), so structural equality of two
// values is numeric equality. GaussianRational is the pair re + im*i.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "weilcert/error.hpp"

namespace weilcert {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const { return Rational(::abs(value_)); }
  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(1 / value_);
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_{0};
};

/// Element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero();
    const Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "p/q", "r/s*i" or "p/q+r/s*i" (the imaginary sign is folded into the operator).
  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag = im_.abs().is_one() ? "i" : im_.abs().to_string() + "*i";
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
    return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
  }

 private:
  Rational re_;
  Rational im_;
};

inline GaussianRational gr_add(const GaussianRational& a, const GaussianRational& b) { return a + b; }
inline GaussianRational gr_mul(const GaussianRational& a, const GaussianRational& b) { return a * b; }
inline GaussianRational gr_inv(const GaussianRational& a) { return a.inverse(); }

inline GaussianRational pow(const GaussianRational& base, unsigned exp) {
  GaussianRational result(1);
  GaussianRational b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

}  // namespace weilcert
