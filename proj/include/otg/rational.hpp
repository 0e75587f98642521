#ifndef OTG_RATIONAL_HPP
#define OTG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace otg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always normalized: den > 0, gcd(|num|, den) == 1.
/// All geometric computation in this library runs on these; there is no
/// floating point on any predicate path.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}                // NOLINT(google-explicit-constructor)
  Rational(long v) : num_(v), den_(1) {}               // NOLINT(google-explicit-constructor)
  Rational(long long v) : num_(v), den_(1) {}          // NOLINT(google-explicit-constructor)
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const { return raw(-num_, den_); }

  Rational operator+(const Rational& o) const {
    if (den_ == 1 && o.den_ == 1) return raw(num_ + o.num_, 1);
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    if (den_ == 1 && o.den_ == 1) return raw(num_ - o.num_, 1);
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    if (den_ == 1 && o.den_ == 1) return raw(num_ * o.num_, 1);
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return compare(o) < 0; }
  bool operator<=(const Rational& o) const { return compare(o) <= 0; }
  bool operator>(const Rational& o) const { return compare(o) > 0; }
  bool operator>=(const Rational& o) const { return compare(o) >= 0; }

  /// Three-way comparison; exact (cross-multiplied).
  int compare(const Rational& o) const {
    if (den_ == o.den_) return cmp_big(num_, o.num_);
    return cmp_big(num_ * o.den_, o.num_ * den_);
  }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

 private:
  struct RawTag {};
  Rational(RawTag, BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}
  static Rational raw(BigInt num, BigInt den) { return Rational(RawTag{}, std::move(num), std::move(den)); }

  static int cmp_big(const BigInt& a, const BigInt& b) { return a < b ? -1 : (a == b ? 0 : 1); }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;  // > 0
};

}  // namespace otg

#endif  // OTG_RATIONAL_HPP
