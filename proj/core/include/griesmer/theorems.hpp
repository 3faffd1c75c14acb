#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "griesmer/search.hpp"

namespace griesmer {

/// Nonexistence results for systematic codes below the Griesmer bound.
enum class TheoremId {
  q_ge_d,  ///< q >= d, any k >= 2
  d12,     ///< d in {1, 2}
  d34,     ///< d in {3, 4}
  d56_k2,  ///< binary, d in {5, 6}, k = 2
  d56_k3,  ///< binary, d in {5, 6}, k >= 3
};

std::string_view to_string(TheoremId id) noexcept;
/// Throws std::invalid_argument on an unknown name.
TheoremId parse_theorem_id(std::string_view name);

enum class SearchMode { tail, full };

std::string_view to_string(SearchMode mode) noexcept;

/// One instantiation of a theorem at fixed (q, k, d), refuted at the critical
/// length n = griesmer_sum(q, k, d) - 1.
struct TheoremCase {
  TheoremId id;
  int q;
  int k;
  int d;
  SearchMode mode;
  /// Tail-mode prefixes, or every q^k prefix in full mode.
  WitnessSet witness;
  /// Further prefix families that must also be refuted for the case to hold.
  std::vector<WitnessSet> extra_witnesses;
  std::int64_t griesmer;
  int critical_m;

  int critical_n() const noexcept { return k + critical_m; }
};

/// Build the witness prefixes for a theorem, embedded in k message symbols
/// with leading zeros. Throws InadmissibleCaseError naming the violated
/// constraint.
TheoremCase witness_set_for(TheoremId id, int q, int d, int k);

struct Verdict {
  TheoremCase theorem;
  /// outcome.refuted(): the critical length is exhaustively infeasible.
  bool confirmed = false;
  SearchOutcome outcome;
  std::int64_t griesmer = 0;
};

/// Search the case at its critical length. A node-limited run is never
/// confirmed.
Verdict verify(const TheoremCase& theorem, const SearchOptions& opts = {});

/// Every in-scope case with 2 <= k <= kmax, in a fixed order: by theorem id,
/// then k, q, d. Full-mode cases beyond the full-search guard are skipped.
std::vector<TheoremCase> all_cases(int kmax);

std::vector<Verdict> verify_all(int kmax, const SearchOptions& opts = {});

}  // namespace griesmer
