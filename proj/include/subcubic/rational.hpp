#pragma once

#include <compare>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>

namespace subcubic {

// Exact rational arithmetic on 64-bit integers, always kept reduced with a
// positive denominator.  Every quantity in this project is a sum of a few
// ninths or fifths, so overflow is not a concern.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}
  constexpr Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

  constexpr long long num() const { return num_; }
  constexpr long long den() const { return den_; }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend constexpr Rational operator/(Rational a, Rational b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  constexpr Rational operator-() const { return {-num_, den_}; }
  Rational& operator+=(Rational o) { return *this = *this + o; }
  Rational& operator-=(Rational o) { return *this = *this - o; }

  friend constexpr bool operator==(Rational a, Rational b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  // Reduced "p/q" form, e.g. "2/9", "-1/5", "3/1".
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend std::ostream& operator<<(std::ostream& os, Rational r) { return os << r.str(); }

 private:
  constexpr void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rational max(Rational a, Rational b) { return a < b ? b : a; }

}  // namespace subcubic
