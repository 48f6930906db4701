#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pword/continued_fraction.hpp"
#include "pword/farey.hpp"
#include "pword/fraction.hpp"

namespace pword {

// Positive-integer exponent sequence (gamma_1, ..., gamma_m) driving the
// standard Sturmian recursion X_{-1} = q, X_0 = p, X_i = X_{i-1}^{gamma_i} X_{i-2}.
using DirectiveSequence = std::vector<std::int64_t>;

// A standard Sturmian word over the two-letter alphabet {'p','q'} together
// with the directive sequence it was built from. Parity is the parity of the
// directive length m; odd words of length >= 2 end "pq", even ones end "qp".
struct SturmianWord {
  std::string text;
  DirectiveSequence directive;

  Parity parity() const { return directive.size() % 2 == 0 ? Parity::even : Parity::odd; }

  friend bool operator==(const SturmianWord&, const SturmianWord&) = default;
};

// [0; gamma_1, ..., gamma_m]. The word for this directive has value.num()
// letters 'q' and value.den() letters 'p'.
inline Fraction directive_value(const DirectiveSequence& gamma) {
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(gamma.size() + 1);
  coeffs.push_back(0);
  coeffs.insert(coeffs.end(), gamma.begin(), gamma.end());
  return ContinuedFraction(std::move(coeffs)).value();
}

inline SturmianWord sturmian_word(const DirectiveSequence& gamma) {
  for (const std::int64_t g : gamma)
    if (g < 1) throw std::domain_error("sturmian_word: directive entries must be positive");
  const Fraction value = directive_value(gamma);  // also bounds the output length
  constexpr std::int64_t kMaxLength = std::int64_t{1} << 26;
  if (value.weight() > kMaxLength)
    throw std::length_error("sturmian_word: output longer than the supported bound");

  std::string prev = "q";
  std::string cur = "p";
  for (const std::int64_t g : gamma) {
    std::string next;
    next.reserve(cur.size() * static_cast<std::size_t>(g) + prev.size());
    for (std::int64_t rep = 0; rep < g; ++rep) next += cur;
    next += prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {std::move(cur), gamma};
}

// The standard Sturmian word associated with p/q (coprime 1 < p < q): the
// directive of the requested parity with value p/q, so the word has p letters
// 'q' and q letters 'p'. The even and odd variants agree except at the last
// two positions.
inline SturmianWord sturmian_for_ratio(std::int64_t p, std::int64_t q, Parity parity) {
  if (p <= 1 || p >= q || std::gcd(p, q) != 1)
    throw std::domain_error("sturmian_for_ratio: requires coprime 1 < p < q");
  const ContinuedFraction cf = ContinuedFraction::expand(Fraction(p, q), parity);
  const auto& coeffs = cf.coefficients();  // [0; g1, ..., gm] since p < q
  return sturmian_word(DirectiveSequence(coeffs.begin() + 1, coeffs.end()));
}

// Reconstructs the (i+1)-th positive integer divisible by exactly one of p, q
// by walking the Sturmian word: letter 'p' at position j consumes the next
// multiple of p, letter 'q' the next multiple of q. Valid for i <= p+q-3 (the
// region where the two word variants agree and no common multiple interferes).
inline std::int64_t sturmian_exclusive_multiple(std::int64_t p, std::int64_t q, std::int64_t i) {
  if (i < 0 || i > p + q - 3)
    throw std::domain_error("sturmian_exclusive_multiple: index out of range");
  const SturmianWord word = sturmian_for_ratio(p, q, Parity::even);
  std::int64_t next_p = p, next_q = q, value = 0;
  for (std::int64_t j = 0; j <= i; ++j) {
    if (word.text[static_cast<std::size_t>(j)] == 'p') {
      value = next_p;
      next_p += p;
    } else {
      value = next_q;
      next_q += q;
    }
  }
  return value;
}

struct SturmianPrefixLength {
  std::int64_t length;
  Parity parity;

  friend bool operator==(const SturmianPrefixLength&, const SturmianPrefixLength&) = default;
};

// The semiconvergent weights a+b of p/q (improper 1/0 skipped) with their
// parities, up to the given bound <= p+q; the full word appears in both
// parities when the bound allows it. Sorted by length, even entries first.
//
// For q < 2p these are exactly the lengths of the prefixes of the word for
// p/q that are themselves standard words. For q > 2p the weights 2..floor(q/p)
// (the best right approximations 1/t above the first convergent) do not
// correspond to literal prefixes, but they are the lengths the threshold
// reformulation below needs; see the prefix-length tests for the literal
// characterization.
inline std::vector<SturmianPrefixLength> sturmian_prefix_lengths(std::int64_t p, std::int64_t q,
                                                                 std::int64_t bound) {
  if (p <= 1 || p >= q || std::gcd(p, q) != 1)
    throw std::domain_error("sturmian_prefix_lengths: requires coprime 1 < p < q");
  if (bound < 0 || bound > p + q)
    throw std::domain_error("sturmian_prefix_lengths: bound must be in [0, p+q]");

  std::vector<SturmianPrefixLength> out;
  for (const auto& [frac, parity] : semiconvergents_with_parity(Fraction(p, q))) {
    if (!frac.is_finite()) continue;
    const std::int64_t len = frac.weight();
    if (len <= bound) out.push_back({len, parity});
  }
  if (p + q <= bound) {
    out.push_back({p + q, Parity::even});
    out.push_back({p + q, Parity::odd});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.parity == Parity::even && b.parity == Parity::odd;
  });
  return out;
}

// The special-family threshold recomputed entirely from the Sturmian word,
// as an independent route: if the prefix of length h+4 is itself a Sturmian
// word, the answer splits over the longest proper Sturmian prefixes of the
// two parities (lengths l, r), giving multiple(l-2) + multiple(r-2) with the
// multiples read off the word; otherwise it is the single multiple at h+2.
// Requires coprime 1 < p < q and 0 <= h < p+q-3.
inline std::int64_t special_threshold_sturmian(std::int64_t h, std::int64_t p, std::int64_t q) {
  if (p <= 1 || p >= q || std::gcd(p, q) != 1)
    throw std::domain_error("special_threshold_sturmian: requires coprime 1 < p < q");
  if (h < 0 || h >= p + q - 3)
    throw std::domain_error("special_threshold_sturmian: requires 0 <= h < p+q-3");

  const auto lengths = sturmian_prefix_lengths(p, q, h + 4);
  const auto multiple_at = [p, q](std::int64_t idx) {
    return idx < 0 ? 0 : sturmian_exclusive_multiple(p, q, idx);
  };

  bool prefix_is_sturmian = false;
  std::int64_t longest_even = -1, longest_odd = -1;
  for (const auto& entry : lengths) {
    if (entry.length == h + 4) prefix_is_sturmian = true;
    if (entry.length <= h + 3) {
      auto& slot = entry.parity == Parity::even ? longest_even : longest_odd;
      slot = std::max(slot, entry.length);
    }
  }
  if (!prefix_is_sturmian) return multiple_at(h + 2);
  return multiple_at(longest_even - 2) + multiple_at(longest_odd - 2);
}

}  // namespace pword
