#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "griesmer/code.hpp"
#include "griesmer/word.hpp"

namespace griesmer {

/// Distinct systematic prefixes whose tails are searched for jointly. The
/// first prefix is always the zero word.
class WitnessSet {
 public:
  /// Throws std::invalid_argument if the list is empty, the first prefix is
  /// not zero, prefixes repeat, or any prefix has the wrong length or q.
  WitnessSet(int q, int k, std::vector<Word> prefixes);

  /// Parses each string with parse_word(s, q); k is taken from the first.
  static WitnessSet from_strings(int q, const std::vector<std::string>& prefixes);

  /// All q^k prefixes in lexicographic order.
  static WitnessSet all_prefixes(int q, int k);

  int q() const noexcept { return q_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return prefixes_.size(); }
  const std::vector<Word>& prefixes() const noexcept { return prefixes_; }

  /// The same prefixes left-padded with zeros to length k2 >= k.
  WitnessSet embed(int k2) const;

  friend bool operator==(const WitnessSet&, const WitnessSet&) = default;

 private:
  int q_;
  int k_;
  std::vector<Word> prefixes_;
};

/// Individually switchable symmetry reductions. All act on tail columns only.
struct SymmetryRules {
  /// The zero prefix takes the zero tail (translation by a codeword).
  bool zero_tail = true;
  /// Tail columns are nonincreasing as column vectors read in word order
  /// (column permutation). In particular the first nonzero word's tail is a
  /// nonincreasing symbol sequence.
  bool column_order = true;
  /// Within each column a nonzero symbol s may appear only after s - 1 has
  /// appeared above it (per-column relabeling of the nonzero symbols). In
  /// particular the first nonzero symbol in every column is 1.
  bool value_order = true;
};

struct SearchOptions {
  /// Maximum number of symbol placements before giving up.
  std::optional<std::uint64_t> node_limit;
  /// Master switch for `rules`.
  bool symmetry = true;
  SymmetryRules rules;
  /// Sequential exploration; makes witness and node counts reproducible.
  bool deterministic = true;
  /// Worker count for non-deterministic runs; 0 selects hardware concurrency.
  unsigned threads = 0;
};

struct SearchOutcome {
  bool feasible = false;
  /// Present iff feasible: the full words prefix || tail.
  std::optional<Code> witness;
  std::uint64_t nodes_explored = 0;
  /// False only when the node limit cut the search short.
  bool exhausted = true;

  /// Infeasible and exhausted: no assignment exists.
  bool refuted() const noexcept { return !feasible && exhausted; }

  friend bool operator==(const SearchOutcome&, const SearchOutcome&) = default;
};

/// Decide whether tails of length m exist such that all words prefix || tail
/// are pairwise at distance >= d. Throws std::invalid_argument on m < 0 or
/// d < 1.
SearchOutcome tail_search(const WitnessSet& ws, int m, int d, const SearchOptions& opts = {});

/// Largest q^k accepted by full_search.
inline constexpr std::int64_t kFullSearchGuard = 4096;

/// Decide whether a (q, n, k) systematic code of minimum distance >= d exists.
/// Throws GuardExceededError when q^k > kFullSearchGuard.
SearchOutcome full_search(const CodeParams& params, const SearchOptions& opts = {});

/// Largest number of tail assignments naive_oracle will enumerate.
inline constexpr std::int64_t kNaiveOracleGuard = std::int64_t{1} << 24;

/// Brute-force reference for tail_search: the zero prefix takes the zero tail
/// and every assignment of the other tails is tried, with no pruning. Throws
/// GuardExceededError when q^(m * (|ws| - 1)) > kNaiveOracleGuard.
bool naive_oracle(const WitnessSet& ws, int m, int d);

/// Re-derive the outcome invariant from scratch: a feasible outcome must carry
/// a witness whose prefixes are exactly `ws` and whose pairwise distances are
/// all >= d. Throws std::logic_error on violation.
void check_witness(const SearchOutcome& outcome, const WitnessSet& ws, int m, int d);

}  // namespace griesmer
