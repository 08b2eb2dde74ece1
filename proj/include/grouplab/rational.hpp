#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "grouplab/errors.hpp"

namespace grouplab {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction p/q, stored reduced with q >= 1. Every probability, rho
// value and bound comparison in this project goes through this type; no
// verdict anywhere is allowed to touch floating point. Arbitrary-precision
// integers keep values like (999/1000)^-10 exact.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : value_(n) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
      throw GroupError(ErrorCode::InvalidParameters, "rational with zero denominator");
    }
    value_ = Impl(num, den);
  }

  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

  Rational operator-() const { return Rational(Impl(-value_)); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Impl(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Impl(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Impl(a.value_ * b.value_)); }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) {
      throw GroupError(ErrorCode::InvalidParameters, "rational division by zero");
    }
    return Rational(Impl(a.value_ / b.value_));
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  // x^e with negative exponents through the reciprocal; 0^e for e <= 0 is an error.
  Rational pow(long long e) const {
    if (e == 0) return Rational(1);
    if (value_ == 0 && e < 0) {
      throw GroupError(ErrorCode::InvalidParameters, "zero raised to a nonpositive power");
    }
    const auto a = static_cast<unsigned>(e < 0 ? -e : e);
    BigInt num = boost::multiprecision::pow(numerator(), a);
    BigInt den = boost::multiprecision::pow(denominator(), a);
    return e < 0 ? Rational(den, num) : Rational(num, den);
  }

  BigInt floor() const {
    BigInt q = numerator() / denominator();  // truncates toward zero
    if (numerator() < 0 && q * denominator() != numerator()) q -= 1;
    return q;
  }

  BigInt ceil() const { return -(-(*this)).floor(); }

  // Canonical form: "p" for integers, "p/q" otherwise. Never a decimal.
  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

  // Accepts "p" or "p/q" with optional leading '-' on p.
  static Rational parse(std::string_view text) {
    const auto bad = [&] {
      return GroupError(ErrorCode::SyntaxError,
                        "malformed rational '" + std::string(text) + "' (want p or p/q)");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    if (!is_integer_token(num_part)) throw bad();
    BigInt num(std::string(num_part));
    if (slash == std::string_view::npos) return Rational(num);
    const std::string_view den_part = text.substr(slash + 1);
    if (den_part.empty() || den_part[0] == '-' || !is_integer_token(den_part)) throw bad();
    BigInt den = BigInt(std::string(den_part));
    if (den == 0) throw bad();
    return Rational(num, den);
  }

 private:
  using Impl = boost::multiprecision::cpp_rational;

  explicit Rational(Impl v) : value_(std::move(v)) {}

  static bool is_integer_token(std::string_view s) {
    if (!s.empty() && s[0] == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  }

  Impl value_;  // cpp_rational keeps the reduced-form invariant for us
};

}  // namespace grouplab
