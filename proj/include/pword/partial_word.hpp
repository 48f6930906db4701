#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pword {

// One position of a partial word: a concrete letter (small id) or the hole,
// the don't-care symbol that matches everything.
class Symbol {
 public:
  static constexpr Symbol hole() { return Symbol(kHole); }

  static Symbol letter(int id) {
    if (id < 0) throw std::domain_error("symbol: letter id must be non-negative");
    return Symbol(id);
  }

  bool is_hole() const { return id_ == kHole; }

  int letter_id() const {
    if (is_hole()) throw std::logic_error("symbol: hole has no letter id");
    return id_;
  }

  friend bool operator==(Symbol, Symbol) = default;

 private:
  static constexpr int kHole = -1;
  constexpr explicit Symbol(int id) : id_(id) {}
  int id_;
};

// The matching relation: equal letters match, and the hole matches everything.
inline bool matches(Symbol a, Symbol b) {
  return a.is_hole() || b.is_hole() || a == b;
}

// A word over letters plus holes. Text form uses 'a','b',... for letters and
// '*' for the hole; parse/str round-trip exactly.
class PartialWord {
 public:
  PartialWord() = default;
  explicit PartialWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  static PartialWord parse(std::string_view text) {
    std::vector<Symbol> syms;
    syms.reserve(text.size());
    for (const char ch : text) {
      if (ch == '*')
        syms.push_back(Symbol::hole());
      else if (ch >= 'a' && ch <= 'z')
        syms.push_back(Symbol::letter(ch - 'a'));
      else
        throw std::invalid_argument(std::string("partial word: bad character '") + ch + "'");
    }
    return PartialWord(std::move(syms));
  }

  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  std::int64_t hole_count() const {
    std::int64_t holes = 0;
    for (const Symbol s : symbols_)
      if (s.is_hole()) ++holes;
    return holes;
  }

  std::vector<std::size_t> hole_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i].is_hole()) out.push_back(i);
    return out;
  }

  // At least two distinct letters occur.
  bool non_unary() const {
    int first = -1;
    for (const Symbol s : symbols_) {
      if (s.is_hole()) continue;
      if (first == -1)
        first = s.letter_id();
      else if (s.letter_id() != first)
        return true;
    }
    return false;
  }

  std::string str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (const Symbol s : symbols_) {
      if (s.is_hole()) {
        out += '*';
      } else {
        if (s.letter_id() > 25) throw std::domain_error("partial word: letter id beyond 'z'");
        out += static_cast<char>('a' + s.letter_id());
      }
    }
    return out;
  }

  // Letters relabelled in first-occurrence order; holes untouched. Two words
  // built from the same structure but with different letter names canonicalize
  // to the same value.
  PartialWord canonical() const {
    std::vector<int> rename;
    std::vector<Symbol> out;
    out.reserve(symbols_.size());
    for (const Symbol s : symbols_) {
      if (s.is_hole()) {
        out.push_back(s);
        continue;
      }
      int next = -1;
      for (std::size_t j = 0; j < rename.size(); ++j) {
        if (rename[j] == s.letter_id()) {
          next = static_cast<int>(j);
          break;
        }
      }
      if (next == -1) {
        next = static_cast<int>(rename.size());
        rename.push_back(s.letter_id());
      }
      out.push_back(Symbol::letter(next));
    }
    return PartialWord(std::move(out));
  }

  friend bool operator==(const PartialWord&, const PartialWord&) = default;

 private:
  std::vector<Symbol> symbols_;
};

// Strong period check: p is a period iff some solid word P of length p has
// w[i] matching P[i mod p] everywhere, i.e. iff within every residue class
// mod p all non-hole symbols agree.
inline bool has_strong_period(const PartialWord& w, std::int64_t p) {
  if (p < 1) throw std::domain_error("strong period: p must be positive");
  const std::size_t period = static_cast<std::size_t>(p);
  for (std::size_t r = 0; r < period && r < w.size(); ++r) {
    int seen = -2;
    for (std::size_t i = r; i < w.size(); i += period) {
      if (w[i].is_hole()) continue;
      if (seen == -2)
        seen = w[i].letter_id();
      else if (w[i].letter_id() != seen)
        return false;
    }
  }
  return true;
}

}  // namespace pword
