#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "griesmer/word.hpp"

namespace griesmer {

/// Parameters (q, n, k, d) of a target systematic code.
struct CodeParams {
  int q = 2;
  int n = 1;
  int k = 1;
  int d = 1;

  /// Throws std::invalid_argument unless q >= 2, 1 <= k <= n, 1 <= d <= n.
  void validate() const;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// A finite set of distinct words sharing length and alphabet. Words are kept
/// in lexicographic order so iteration and output are deterministic.
class Code {
 public:
  using const_iterator = std::vector<Word>::const_iterator;

  /// Throws IncomparableWordsError if any word has a different q or length,
  /// std::invalid_argument on duplicates.
  Code(int q, std::size_t length, std::vector<Word> words);

  /// Convenience: q and length taken from the first word (must be non-empty).
  explicit Code(std::vector<Word> words);

  int q() const noexcept { return q_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::vector<Word>& words() const noexcept { return words_; }
  const_iterator begin() const noexcept { return words_.begin(); }
  const_iterator end() const noexcept { return words_.end(); }

  bool contains(const Word& w) const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  int q_;
  std::size_t length_;
  std::vector<Word> words_;
};

/// Smallest pairwise distance. Throws UndefinedDistanceError when |C| < 2.
int min_distance(const Code& code);

/// All pairwise distances in ascending order (the distance multiset).
std::vector<int> pairwise_distances(const Code& code);

/// True iff |C| = q^k and the length-k prefixes are pairwise distinct.
/// Throws std::invalid_argument unless 1 <= k <= length.
bool is_systematic(const Code& code, std::size_t k);

/// { c - t : c in C } with component-wise subtraction mod q.
Code translate(const Code& code, const Word& t);

/// Append `extra` zero symbols to every word.
Code pad(const Code& code, std::size_t extra);

}  // namespace griesmer
