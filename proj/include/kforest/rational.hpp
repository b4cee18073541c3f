#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kforest {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact fraction. Always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = BigRat(num);
    v_ /= BigRat(den);
  }

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_integer() const { return den() == 1; }

  // Largest integer <= *this.
  BigInt floor() const {
    BigInt n = num(), d = den();
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // Serialized as "num/den", denominator always present ("2/1").
  std::string to_string() const {
    return num().str() + "/" + den().str();
  }

  // Accepts "a/b" or a bare integer "a".
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    std::string ns = slash == std::string::npos ? text : text.substr(0, slash);
    std::string ds = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
    if (ns.empty() || ds.empty())
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    try {
      return Rational(BigInt(ns), BigInt(ds));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
  }

  double to_double() const { return static_cast<double>(v_); }

 private:
  BigRat v_;
};

}  // namespace kforest
