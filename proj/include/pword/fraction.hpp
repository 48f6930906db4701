#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pword/checked.hpp"

namespace pword {

// Non-negative rational kept in lowest terms. The improper value 1/0 is a
// first-class member and compares greater than every finite fraction; 0/0 is
// rejected. Ordering is exact (128-bit cross multiplication).
class Fraction {
 public:
  constexpr Fraction() : num_(0), den_(1) {}

  Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (num_ < 0 || den_ < 0) throw std::domain_error("fraction: negative component");
    if (num_ == 0 && den_ == 0) throw std::domain_error("fraction: 0/0");
    const std::int64_t g = std::gcd(num_, den_);  // gcd(x, 0) == x, so n/0 -> 1/0
    num_ /= g;
    den_ /= g;
  }

  static Fraction infinity() {
    Fraction f;
    f.num_ = 1;
    f.den_ = 0;
    return f;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_finite() const { return den_ != 0; }
  bool is_zero() const { return num_ == 0; }

  // Stern-Brocot weight num+den; membership in the set of fractions of
  // bounded weight is decided with this.
  std::int64_t weight() const { return checked_add(num_, den_); }

  friend bool operator==(const Fraction&, const Fraction&) = default;

  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "5/7"; integers render bare ("0", "3"); the improper value renders "1/0".
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Fraction parse(std::string_view text) {
    const auto slash = text.find('/');
    auto to_int = [](std::string_view s) {
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("fraction: cannot parse '" + std::string(s) + "'");
      return v;
    };
    if (slash == std::string_view::npos) return Fraction(to_int(text), 1);
    return Fraction(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// (a+c)/(b+d). Already in lowest terms whenever the inputs are Stern-Brocot
// neighbours; reduced otherwise.
inline Fraction mediant(const Fraction& a, const Fraction& b) {
  return Fraction(checked_add(a.num(), b.num()), checked_add(a.den(), b.den()));
}

}  // namespace pword
