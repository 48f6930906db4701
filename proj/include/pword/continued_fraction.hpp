#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pword/checked.hpp"
#include "pword/fraction.hpp"

namespace pword {

enum class Parity { even, odd };

inline Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

// Finite continued fraction [g0; g1, ..., gm] with g0 >= 0 and gi >= 1 for
// i >= 1. Its parity is the parity of the last index m. The empty sequence is
// admitted as the improper fraction 1/0 and counts as odd.
//
// Every positive rational has exactly two representations, one of each
// parity; they differ only in the tail ([..., g] vs [..., g-1, 1]).
class ContinuedFraction {
 public:
  ContinuedFraction() = default;  // [;] == 1/0

  explicit ContinuedFraction(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const std::int64_t lo = (i == 0) ? 0 : 1;
      if (coeffs_[i] < lo) throw std::domain_error("continued fraction: coefficient out of range");
    }
  }

  // Expansion of a finite positive rational with the requested parity.
  static ContinuedFraction expand(const Fraction& x, Parity parity) {
    if (!x.is_finite() || x.is_zero())
      throw std::domain_error("continued fraction: expansion needs a finite positive rational");
    std::vector<std::int64_t> cs;
    std::int64_t n = x.num(), d = x.den();
    while (d != 0) {  // canonical Euclidean expansion; final coefficient >= 2 unless m == 0
      cs.push_back(n / d);
      const std::int64_t r = n % d;
      n = d;
      d = r;
    }
    ContinuedFraction cf{std::move(cs)};
    if (cf.parity() != parity) cf.flip_tail();
    return cf;
  }

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  Parity parity() const {
    if (coeffs_.empty()) return Parity::odd;  // convention for [;]
    return (coeffs_.size() - 1) % 2 == 0 ? Parity::even : Parity::odd;
  }

  Fraction value() const {
    if (coeffs_.empty()) return Fraction::infinity();
    std::int64_t num = coeffs_.back(), den = 1;
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
      const std::int64_t next = checked_add(checked_mul(coeffs_[i], num), den);
      den = num;
      num = next;
    }
    return Fraction(num, den);
  }

  std::string str() const {
    if (coeffs_.empty()) return "[;]";
    std::string out = "[" + std::to_string(coeffs_[0]) + ";";
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (i > 1) out += ",";
      out += std::to_string(coeffs_[i]);
    }
    return out + "]";
  }

 private:
  // [..., g] <-> [..., g-1, 1]; switches parity, preserves the value.
  void flip_tail() {
    if (coeffs_.empty()) throw std::domain_error("continued fraction: [;] has a single parity");
    if (coeffs_.size() >= 2 && coeffs_.back() == 1) {
      coeffs_.pop_back();
      ++coeffs_.back();
    } else {
      --coeffs_.back();
      coeffs_.push_back(1);
    }
  }

  std::vector<std::int64_t> coeffs_;
};

}  // namespace pword
