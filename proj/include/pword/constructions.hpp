#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pword/partial_word.hpp"

namespace pword {

namespace detail {

inline void require_coprime(std::int64_t p, std::int64_t q, const char* who) {
  if (std::gcd(p, q) != 1) throw std::domain_error(std::string(who) + ": p and q must be coprime");
}

}  // namespace detail

// The classical extremal solid word of length p+q-2 with periods p and q and
// without period 1, for coprime 1 < p < q. Built by 2-colouring the connected
// components of the graph on positions {0,...,p+q-3} whose edges join
// positions p or q apart; that graph has exactly two components, and colouring
// them 'a'/'b' yields a binary witness. For (5,7) this gives "ababaababa".
inline PartialWord fine_wilf_word(std::int64_t p, std::int64_t q) {
  detail::require_coprime(p, q, "fine_wilf_word");
  if (!(1 < p && p < q)) throw std::domain_error("fine_wilf_word: requires 1 < p < q");
  const std::size_t n = static_cast<std::size_t>(p + q - 2);

  std::vector<int> comp(n, -1);
  int comps = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    const int id = comps++;
    std::vector<std::size_t> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (const std::int64_t step : {p, q}) {
        for (const std::int64_t u : {static_cast<std::int64_t>(v) - step,
                                     static_cast<std::int64_t>(v) + step}) {
          if (u < 0 || u >= static_cast<std::int64_t>(n)) continue;
          if (comp[static_cast<std::size_t>(u)] != -1) continue;
          comp[static_cast<std::size_t>(u)] = id;
          stack.push_back(static_cast<std::size_t>(u));
        }
      }
    }
  }
  if (comps != 2) throw std::logic_error("fine_wilf_word: expected exactly two components");

  std::vector<Symbol> syms;
  syms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) syms.push_back(Symbol::letter(comp[i]));
  return PartialWord(std::move(syms)).canonical();
}

namespace detail {

// Repeating block layout around the extremal solid word S = fine_wilf_word:
// prefix block  (S[0..p-3] **) and suffix block (** S[q..q+p-3]), each used
// floor(q/p) times.
struct BorderedParts {
  std::vector<Symbol> core;          // S itself, length p+q-2
  std::vector<Symbol> prefix;        // k leading blocks, length p*k
  std::vector<Symbol> suffix_holed;  // k trailing blocks plus final **, length p*k+2
};

inline BorderedParts bordered_parts(std::int64_t p, std::int64_t q) {
  require_coprime(p, q, "bordered word");
  if (!(2 < p && p < q)) throw std::domain_error("bordered word: requires 2 < p < q");
  const PartialWord s = fine_wilf_word(p, q);
  const std::int64_t k = q / p;

  BorderedParts parts;
  parts.core = s.symbols();

  std::vector<Symbol> pre_block;  // S[0..p-3] then two holes
  for (std::int64_t i = 0; i + 2 < p; ++i) pre_block.push_back(s[static_cast<std::size_t>(i)]);
  pre_block.push_back(Symbol::hole());
  pre_block.push_back(Symbol::hole());

  std::vector<Symbol> suf_block;  // two holes then S[q..q+p-3]
  suf_block.push_back(Symbol::hole());
  suf_block.push_back(Symbol::hole());
  for (std::int64_t i = q; i + 2 < p + q; ++i) suf_block.push_back(s[static_cast<std::size_t>(i)]);

  for (std::int64_t rep = 0; rep < k; ++rep)
    parts.prefix.insert(parts.prefix.end(), pre_block.begin(), pre_block.end());
  for (std::int64_t rep = 0; rep < k; ++rep)
    parts.suffix_holed.insert(parts.suffix_holed.end(), suf_block.begin(), suf_block.end());
  parts.suffix_holed.push_back(Symbol::hole());
  parts.suffix_holed.push_back(Symbol::hole());
  return parts;
}

}  // namespace detail

// The hole-bordered extension of the extremal word: k = floor(q/p) prefix
// blocks, the extremal word, k suffix blocks. Length p+q+2pk-2, exactly 4k
// holes, and both p and q remain strong periods. Requires coprime 2 < p < q
// (the prefix block S[0..p-3] degenerates at p = 2; that regime is handled by
// the closed form for p = 2 in thresholds.hpp).
inline PartialWord bordered_word(std::int64_t p, std::int64_t q) {
  const auto parts = detail::bordered_parts(p, q);
  std::vector<Symbol> syms = parts.prefix;
  syms.insert(syms.end(), parts.core.begin(), parts.core.end());
  syms.insert(syms.end(), parts.suffix_holed.begin(),
              parts.suffix_holed.end() - 2);  // without the final two holes
  return PartialWord(std::move(syms));
}

// Intermediate lengths of the same family: extend the extremal word symbol by
// symbol, first prepending the characters before it, then appending the
// characters after it (up to and including the final two holes). Every
// intermediate word is a factor of the fully extended word, so it keeps both
// periods; its hole count equals bordered_min_holes(n, p, q).
inline PartialWord bordered_word_of_length(std::int64_t n, std::int64_t p, std::int64_t q) {
  const auto parts = detail::bordered_parts(p, q);
  const std::int64_t base = p + q - 2;
  const std::int64_t pk = static_cast<std::int64_t>(parts.prefix.size());
  if (n < base || n > base + 2 * pk + 2)
    throw std::domain_error("bordered_word_of_length: length out of range");
  const std::int64_t extra = n - base;
  const std::int64_t take_pre = std::min(extra, pk);
  const std::int64_t take_suf = extra - take_pre;

  std::vector<Symbol> syms(parts.prefix.end() - take_pre, parts.prefix.end());
  syms.insert(syms.end(), parts.core.begin(), parts.core.end());
  syms.insert(syms.end(), parts.suffix_holed.begin(), parts.suffix_holed.begin() + take_suf);
  return PartialWord(std::move(syms));
}

// The pinned rigid word: position l carries 'b' where both p and q divide
// (l-i) (i.e. at i = l and its pq-translates), 'a' where neither divides, and
// a hole where exactly one does. It always has strong periods p and q and,
// since p,q > 1, never period 1. Hole count is the number of multiples of
// exactly one of p,q within distance l to the left plus n-1-l to the right.
inline PartialWord special_word(std::int64_t n, std::int64_t p, std::int64_t q, std::int64_t l) {
  detail::require_coprime(p, q, "special_word");
  if (p <= 1 || q <= 1) throw std::domain_error("special_word: requires p, q > 1");
  if (n < std::max(p, q)) throw std::domain_error("special_word: length below max(p, q)");
  if (l < 0 || l >= n) throw std::domain_error("special_word: pin position out of range");

  std::vector<Symbol> syms;
  syms.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t d = l >= i ? l - i : i - l;
    const bool div_p = d % p == 0;
    const bool div_q = d % q == 0;
    if (div_p && div_q)
      syms.push_back(Symbol::letter(1));
    else if (!div_p && !div_q)
      syms.push_back(Symbol::letter(0));
    else
      syms.push_back(Symbol::hole());
  }
  return PartialWord(std::move(syms));
}

}  // namespace pword
