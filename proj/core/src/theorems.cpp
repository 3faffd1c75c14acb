#include "griesmer/theorems.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "griesmer/bounds.hpp"
#include "griesmer/errors.hpp"

namespace griesmer {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 5> kIds{{
    {TheoremId::q_ge_d, "q_ge_d"},
    {TheoremId::d12, "d12"},
    {TheoremId::d34, "d34"},
    {TheoremId::d56_k2, "d56_k2"},
    {TheoremId::d56_k3, "d56_k3"},
}};

[[noreturn]] void inadmissible(TheoremId id, const std::string& why) {
  throw InadmissibleCaseError(std::string(to_string(id)) + ": " + why);
}

WitnessSet prefixes(int q, std::initializer_list<const char*> words, int k) {
  std::vector<std::string> list(words.begin(), words.end());
  return WitnessSet::from_strings(q, list).embed(k);
}

/// Zero plus the two weight-one prefixes ending in 1 and 10.
WitnessSet unit_pair(int q, int k) { return prefixes(q, {"00", "01", "10"}, k); }

TheoremCase make_case(TheoremId id, int q, int k, int d, SearchMode mode, WitnessSet witness,
                      std::vector<WitnessSet> extra = {}) {
  const std::int64_t g = griesmer_sum(q, k, d);
  const std::int64_t m = g - 1 - k;
  if (m < 0) {
    inadmissible(id, "critical length " + std::to_string(g - 1) + " is below k = " + std::to_string(k) +
                         "; nonexistence is vacuous");
  }
  return TheoremCase{id, q, k, d, mode, std::move(witness), std::move(extra), g, static_cast<int>(m)};
}

TheoremCase full_case(TheoremId id, int q, int k, int d) {
  std::int64_t count = 1;
  for (int i = 0; i < k && count <= kFullSearchGuard; ++i) count *= q;
  if (count > kFullSearchGuard) {
    inadmissible(id, "q^k exceeds the full-search guard of " + std::to_string(kFullSearchGuard));
  }
  return make_case(id, q, k, d, SearchMode::full, WitnessSet::all_prefixes(q, k));
}

}  // namespace

std::string_view to_string(TheoremId id) noexcept {
  for (const auto& [value, name] : kIds) {
    if (value == id) return name;
  }
  return "unknown";
}

TheoremId parse_theorem_id(std::string_view name) {
  for (const auto& [value, text] : kIds) {
    if (text == name) return value;
  }
  throw std::invalid_argument("unknown theorem id '" + std::string(name) +
                              "' (expected q_ge_d, d12, d34, d56_k2 or d56_k3)");
}

std::string_view to_string(SearchMode mode) noexcept { return mode == SearchMode::tail ? "tail" : "full"; }

TheoremCase witness_set_for(TheoremId id, int q, int d, int k) {
  if (q < 2 || q > kMaxAlphabet) inadmissible(id, "q must lie in [2, 256]");
  if (d < 1) inadmissible(id, "d must be >= 1");
  if (k < 2) inadmissible(id, "k must be >= 2");

  switch (id) {
    case TheoremId::q_ge_d:
      if (q < d) inadmissible(id, "requires q >= d");
      return full_case(id, q, k, d);

    case TheoremId::d12:
      if (d > 2) inadmissible(id, "requires d in {1, 2}");
      return full_case(id, q, k, d);

    case TheoremId::d34:
      if (d < 3 || d > 4) inadmissible(id, "requires d in {3, 4}");
      if (q >= d) return full_case(id, q, k, d);
      if (q == 2) return make_case(id, q, k, d, SearchMode::tail, unit_pair(q, k));
      // q = 3, d = 4
      return make_case(id, q, k, d, SearchMode::tail, prefixes(q, {"00", "01", "02", "10"}, k));

    case TheoremId::d56_k2:
      if (q != 2) inadmissible(id, "requires q = 2");
      if (d < 5 || d > 6) inadmissible(id, "requires d in {5, 6}");
      if (k != 2) inadmissible(id, "requires k = 2");
      return make_case(id, q, k, d, SearchMode::tail, unit_pair(q, k));

    case TheoremId::d56_k3: {
      if (q != 2) inadmissible(id, "requires q = 2");
      if (d < 5 || d > 6) inadmissible(id, "requires d in {5, 6}");
      if (k < 3) inadmissible(id, "requires k >= 3");
      std::vector<WitnessSet> extra;
      extra.push_back(prefixes(q, {"000", "001", "010", "100", "011"}, k));
      return make_case(id, q, k, d, SearchMode::tail, prefixes(q, {"000", "001", "010", "011", "101"}, k),
                       std::move(extra));
    }
  }
  inadmissible(id, "unknown theorem");
}

Verdict verify(const TheoremCase& theorem, const SearchOptions& opts) {
  Verdict v{theorem, false, {}, theorem.griesmer};
  if (theorem.mode == SearchMode::full) {
    v.outcome = full_search(CodeParams{theorem.q, theorem.critical_n(), theorem.k, theorem.d}, opts);
  } else {
    v.outcome = tail_search(theorem.witness, theorem.critical_m, theorem.d, opts);
    for (const WitnessSet& ws : theorem.extra_witnesses) {
      if (!v.outcome.refuted()) break;
      SearchOutcome more = tail_search(ws, theorem.critical_m, theorem.d, opts);
      more.nodes_explored += v.outcome.nodes_explored;
      v.outcome = std::move(more);
    }
  }
  v.confirmed = v.outcome.refuted();
  return v;
}

std::vector<TheoremCase> all_cases(int kmax) {
  if (kmax < 2) throw std::invalid_argument("kmax must be >= 2");
  std::vector<TheoremCase> out;
  auto add = [&](TheoremId id, int q, int d, int k) {
    try {
      out.push_back(witness_set_for(id, q, d, k));
    } catch (const InadmissibleCaseError&) {
      // Guard-limited full cases drop out of the grid.
    }
  };
  for (int k = 2; k <= std::min(kmax, 3); ++k) {
    for (int q = 2; q <= 5; ++q) {
      for (int d = 2; d <= q; ++d) add(TheoremId::q_ge_d, q, d, k);
    }
  }
  for (int k = 2; k <= kmax; ++k) {
    for (int q = 2; q <= 3; ++q) add(TheoremId::d12, q, 2, k);
  }
  for (int k = 2; k <= kmax; ++k) {
    for (int q = 2; q <= 3; ++q) {
      for (int d = 3; d <= 4; ++d) add(TheoremId::d34, q, d, k);
    }
  }
  for (int d = 5; d <= 6; ++d) add(TheoremId::d56_k2, 2, d, 2);
  for (int k = 3; k <= kmax; ++k) {
    for (int d = 5; d <= 6; ++d) add(TheoremId::d56_k3, 2, d, k);
  }
  return out;
}

std::vector<Verdict> verify_all(int kmax, const SearchOptions& opts) {
  std::vector<Verdict> out;
  for (const TheoremCase& c : all_cases(kmax)) out.push_back(verify(c, opts));
  return out;
}

}  // namespace griesmer
