#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace griesmer {

using Symbol = std::uint8_t;

/// Largest supported alphabet; symbols are stored in one byte.
inline constexpr int kMaxAlphabet = 256;

/// An immutable word over the residues {0, ..., q-1}.
///
/// For a systematic code of dimension k the first k symbols are the
/// systematic part (the message) and the remaining symbols are the tail.
class Word {
 public:
  /// Throws std::invalid_argument on an empty word, q outside [2, 256], or a
  /// symbol >= q.
  Word(int q, std::vector<Symbol> symbols);

  static Word zero(int q, std::size_t length);

  int q() const noexcept { return q_; }
  std::size_t length() const noexcept { return symbols_.size(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  bool is_zero() const noexcept;

  /// First k symbols. Requires 1 <= k <= length().
  Word prefix(std::size_t k) const;
  /// Symbols after the first k. Empty when k == length().
  std::span<const Symbol> tail(std::size_t k) const;

  /// This word followed by `tail` (same alphabet).
  Word append(std::span<const Symbol> tail) const;

  /// Text form: decimal digits for q <= 10, space-separated integers above.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.symbols_ <=> b.symbols_;
  }

 private:
  int q_;
  std::vector<Symbol> symbols_;
};

/// Parse the text form produced by Word::str(). Throws ParseError.
Word parse_word(std::string_view text, int q);

/// Number of nonzero symbols.
int weight(const Word& w) noexcept;

/// Hamming distance. Throws IncomparableWordsError on length or q mismatch.
int distance(const Word& a, const Word& b);

/// Positions where two equal-length symbol sequences differ (no checks).
int hamming(std::span<const Symbol> a, std::span<const Symbol> b) noexcept;

/// Component-wise (a - b) mod q.
Word subtract(const Word& a, const Word& b);

}  // namespace griesmer
