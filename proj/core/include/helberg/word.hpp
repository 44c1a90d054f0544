#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace helberg {

using Symbol = std::int32_t;

/// Immutable-by-convention sequence of alphabet symbols {0,...,q-1}.
///
/// All public contracts in this library index words from 1, matching the
/// usual coding-theory convention. slice(j1, j2) is the inclusive range
/// [j1, j2] and yields the empty word whenever j1 > j2, so expressions like
/// w.slice(j + 1, k) degrade gracefully at range ends.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : syms_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : syms_(symbols) {}

  static Word repeated(Symbol s, std::size_t count) {
    return Word(std::vector<Symbol>(count, s));
  }

  std::size_t len() const noexcept { return syms_.size(); }
  bool empty() const noexcept { return syms_.empty(); }

  /// Symbol at 1-based position i.
  Symbol symbol(std::size_t i) const;

  std::span<const Symbol> symbols() const noexcept { return syms_; }

  /// Inclusive 1-based range [j1, j2]; empty when j1 > j2. Bounds are
  /// clamped to the word.
  Word slice(std::int64_t j1, std::int64_t j2) const;

  /// First `count` symbols (clamped).
  Word prefix(std::int64_t count) const { return slice(1, count); }

  /// Last `count` symbols (clamped).
  Word suffix(std::int64_t count) const {
    return slice(static_cast<std::int64_t>(len()) - count + 1,
                 static_cast<std::int64_t>(len()));
  }

  void append(Symbol s) { syms_.push_back(s); }

  friend Word operator+(const Word& a, const Word& b);
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Symbol> syms_;
};

/// Parses the CLI word format: a contiguous digit string when q <= 10,
/// otherwise comma-separated decimal symbols. The empty string is the empty
/// word. Throws InvalidParameter on malformed text or symbols outside
/// [0, q-1].
Word parse_word(const std::string& text, int q);

/// Inverse of parse_word for the same q.
std::string format_word(const Word& w, int q);

}  // namespace helberg
