#include <doctest.h>

#include <random>
#include <set>

#include "griesmer/bounds.hpp"
#include "griesmer/errors.hpp"
#include "griesmer/search.hpp"
#include "support.hpp"

using namespace griesmer;
using testing::brute_force_tails;

namespace {

WitnessSet ws(int q, std::vector<std::string> prefixes) { return WitnessSet::from_strings(q, prefixes); }

SearchOptions no_symmetry() {
  SearchOptions o;
  o.symmetry = false;
  return o;
}

/// Weight <= 1 prefixes of length k (zero first).
std::vector<std::string> unit_prefixes(int q, int k) {
  std::vector<std::string> out;
  for (int pos = 0; pos < k; ++pos) {
    for (int s = 1; s < q; ++s) {
      std::string p(static_cast<std::size_t>(k), '0');
      p[static_cast<std::size_t>(pos)] = static_cast<char>('0' + s);
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("witness set validation") {
  CHECK_THROWS_AS(ws(2, {"01", "00"}), std::invalid_argument);
  CHECK_THROWS_AS(ws(2, {"00", "01", "01"}), std::invalid_argument);
  CHECK_THROWS_AS(ws(2, {"00", "011"}), IncomparableWordsError);
  CHECK_THROWS_AS(WitnessSet(2, 2, {}), std::invalid_argument);
  CHECK(ws(2, {"00", "01"}).embed(4).prefixes()[1].str() == "0001");
  CHECK(WitnessSet::all_prefixes(3, 2).size() == 9);
  CHECK(WitnessSet::all_prefixes(2, 12).size() == 4096);
  CHECK_THROWS_AS(WitnessSet::all_prefixes(2, 13), GuardExceededError);
}

TEST_CASE("tail_search examples") {
  const WitnessSet unit = ws(2, {"00", "01", "10"});
  REQUIRE(brute_force_tails({"00", "01", "10"}, 2, 2, 3).empty());
  const auto infeasible = tail_search(unit, 2, 3);
  CHECK_FALSE(infeasible.feasible);
  CHECK(infeasible.exhausted);
  CHECK_FALSE(infeasible.witness);

  REQUIRE_FALSE(brute_force_tails({"00", "01", "10"}, 2, 3, 3).empty());
  const auto feasible = tail_search(unit, 3, 3);
  REQUIRE(feasible.feasible);
  REQUIRE(feasible.witness);
  CHECK(min_distance(*feasible.witness) >= 3);
  CHECK(feasible.witness->length() == 5);
  CHECK_NOTHROW(check_witness(feasible, unit, 3, 3));
}

TEST_CASE("binary d = 5, 6 five-prefix sets are refuted") {
  for (int d : {5, 6}) {
    const auto a = tail_search(ws(2, {"000", "001", "010", "011", "101"}), d + 1, d);
    CHECK(a.refuted());
    const auto b = tail_search(ws(2, {"000", "001", "010", "100", "011"}), d + 1, d);
    CHECK(b.refuted());
  }
}

TEST_CASE("ternary d = 4 four-prefix set is refuted") {
  const auto o = tail_search(ws(3, {"00", "01", "02", "10"}), 3, 4);
  CHECK(o.refuted());
  REQUIRE(brute_force_tails({"00", "01", "02", "10"}, 3, 3, 4).empty());
}

TEST_CASE("degenerate inputs") {
  // m = 0: only prefix distances count.
  CHECK(tail_search(ws(2, {"00", "01"}), 0, 1).feasible);
  CHECK_FALSE(tail_search(ws(2, {"00", "01"}), 0, 2).feasible);
  CHECK(tail_search(ws(2, {"00", "01"}), 0, 2).exhausted);
  // single prefix: always feasible.
  const auto single = tail_search(ws(3, {"00"}), 4, 9);
  CHECK(single.feasible);
  CHECK(single.witness->size() == 1);
  CHECK(tail_search(ws(3, {"00"}), 4, 9, no_symmetry()).feasible);
  CHECK_THROWS_AS(tail_search(ws(2, {"00"}), -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(tail_search(ws(2, {"00"}), 1, 0), std::invalid_argument);
}

TEST_CASE("node limit aborts without refuting") {
  SearchOptions o;
  o.node_limit = 5;
  const auto r = tail_search(ws(2, {"000", "001", "010", "011", "101"}), 6, 5, o);
  CHECK_FALSE(r.feasible);
  CHECK_FALSE(r.exhausted);
  CHECK_FALSE(r.refuted());
  CHECK(r.nodes_explored == 5);
  o.node_limit = 0;
  CHECK_THROWS_AS(tail_search(ws(2, {"00"}), 1, 1, o), std::invalid_argument);
}

TEST_CASE("full_search examples") {
  const auto rep = full_search({2, 3, 1, 3});
  REQUIRE(rep.feasible);
  CHECK(*rep.witness == Code(std::vector<Word>{parse_word("000", 2), parse_word("111", 2)}));

  REQUIRE(brute_force_tails({"00", "01", "10", "11"}, 2, 2, 3).empty());
  CHECK(full_search({2, 4, 2, 3}).refuted());

  const auto five = full_search({2, 5, 2, 3});
  REQUIRE(five.feasible);
  CHECK(is_systematic(*five.witness, 2));
  CHECK(min_distance(*five.witness) >= 3);

  CHECK_THROWS_AS(full_search({2, 20, 13, 3}), GuardExceededError);
  CHECK_THROWS_AS(full_search({2, 3, 4, 3}), std::invalid_argument);
}

TEST_CASE("naive_oracle") {
  CHECK_FALSE(naive_oracle(ws(2, {"00", "01", "10"}), 2, 3));
  CHECK(naive_oracle(ws(2, {"0", "1"}), 2, 3));
  CHECK(naive_oracle(ws(2, {"00", "01"}), 0, 1));
  CHECK_THROWS_AS(naive_oracle(ws(2, {"000", "001", "010", "011", "101"}), 7, 6), GuardExceededError);
}

TEST_CASE("engine agrees with naive enumeration under every symmetry rule") {
  // Every combination of the three rules, plus the pruning-only engine.
  std::vector<SearchOptions> variants;
  for (int mask = 0; mask < 8; ++mask) {
    SearchOptions o;
    o.rules = {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
    variants.push_back(o);
  }
  variants.push_back(no_symmetry());

  int instances = 0;
  for (int q : {2, 3}) {
    for (int k = 1; k <= 3; ++k) {
      const auto units = unit_prefixes(q, k);
      const std::string zero(static_cast<std::size_t>(k), '0');
      std::vector<std::vector<std::string>> sets{{zero}};
      for (std::size_t i = 0; i < units.size(); ++i) {
        sets.push_back({zero, units[i]});
        for (std::size_t j = i + 1; j < units.size(); ++j) sets.push_back({zero, units[i], units[j]});
      }
      for (const auto& s : sets) {
        const WitnessSet w = ws(q, s);
        for (int m = 0; m <= 3; ++m) {
          for (int d = 1; d <= 4; ++d) {
            const bool expect = !brute_force_tails(s, q, m, d).empty();
            REQUIRE(naive_oracle(w, m, d) == expect);
            for (const auto& o : variants) {
              const auto r = tail_search(w, m, d, o);
              REQUIRE(r.exhausted);
              REQUIRE(r.feasible == expect);
            }
            ++instances;
          }
        }
      }
    }
  }
  CHECK(instances > 500);
}

TEST_CASE("randomized symmetry soundness and monotonicity") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 200) {
    const int q = 2 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % 3);
    const int m = static_cast<int>(rng() % 5);
    const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(k + m));
    std::set<std::string> chosen;
    const auto all = testing::all_strings(q, k);
    const std::size_t want = std::min<std::size_t>(all.size(), 2 + rng() % 4);
    std::vector<std::string> prefixes{all.front()};
    chosen.insert(all.front());
    while (prefixes.size() < want) {
      const auto& p = all[rng() % all.size()];
      if (chosen.insert(p).second) prefixes.push_back(p);
    }
    // Keep the symmetry-free search small.
    double space = 1;
    for (std::size_t i = 0; i < prefixes.size() * static_cast<std::size_t>(m); ++i) space *= q;
    if (space > 1 << 20) continue;

    const WitnessSet w = ws(q, prefixes);
    const auto on = tail_search(w, m, d);
    const auto off = tail_search(w, m, d, no_symmetry());
    REQUIRE(on.feasible == off.feasible);
    if (on.feasible) REQUIRE(tail_search(w, m + 1, d).feasible);
    if (!on.feasible) REQUIRE_FALSE(tail_search(w, m, d + 1).feasible);
    ++checked;
  }
}

TEST_CASE("deterministic runs are reproducible") {
  const WitnessSet w = WitnessSet::all_prefixes(2, 3);
  const auto a = tail_search(w, 4, 3);
  const auto b = tail_search(w, 4, 3);
  CHECK(a == b);
  REQUIRE(a.feasible);
  CHECK(is_systematic(*a.witness, 3));
}

TEST_CASE("parallel exploration preserves feasibility") {
  SearchOptions par;
  par.deterministic = false;
  par.threads = 4;
  const std::vector<std::pair<CodeParams, bool>> cases{
      {{2, 5, 2, 3}, true}, {{2, 4, 2, 3}, false}, {{2, 6, 3, 3}, true},
      {{2, 5, 3, 3}, false}, {{3, 5, 2, 4}, false}, {{3, 6, 2, 4}, true},
  };
  for (const auto& [params, expect] : cases) {
    const auto seq = full_search(params);
    const auto par_out = full_search(params, par);
    CHECK(seq.feasible == expect);
    CHECK(par_out.feasible == expect);
    CHECK(par_out.exhausted);
  }
  for (int d : {5, 6}) {
    const auto r = tail_search(ws(2, {"000", "001", "010", "011", "101"}), d + 1, d, par);
    CHECK(r.refuted());
  }
  // Node limits force sequential exploration, so the count is exact.
  par.node_limit = 7;
  const auto limited = tail_search(ws(2, {"000", "001", "010", "011", "101"}), 6, 5, par);
  CHECK(limited.nodes_explored == 7);
  CHECK_FALSE(limited.exhausted);
}

TEST_CASE("check_witness rejects corrupted outcomes") {
  const WitnessSet unit = ws(2, {"00", "01", "10"});
  auto good = tail_search(unit, 3, 3);
  REQUIRE(good.feasible);

  SearchOutcome bad = good;
  bad.witness = Code(std::vector<Word>{parse_word("00000", 2), parse_word("01000", 2), parse_word("10111", 2)});
  CHECK_THROWS_AS(check_witness(bad, unit, 3, 3), std::logic_error);

  bad.witness = Code(std::vector<Word>{parse_word("00000", 2), parse_word("01111", 2), parse_word("11100", 2)});
  CHECK_THROWS_AS(check_witness(bad, unit, 3, 3), std::logic_error);

  bad.witness.reset();
  CHECK_THROWS_AS(check_witness(bad, unit, 3, 3), std::logic_error);
}

TEST_CASE("random witness sets against the naive oracle") {
  std::mt19937_64 rng(77);
  int checked = 0;
  int feasible = 0;
  while (checked < 300) {
    const int q = 2 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 6);
    const auto all = testing::all_strings(q, k);
    const std::size_t want = std::min<std::size_t>(all.size(), 2 + rng() % 5);
    std::vector<std::string> prefixes{all.front()};
    std::set<std::string> chosen{all.front()};
    while (prefixes.size() < want) {
      const auto& p = all[rng() % all.size()];
      if (chosen.insert(p).second) prefixes.push_back(p);
    }
    double space = 1;
    for (std::size_t i = 0; i < (prefixes.size() - 1) * static_cast<std::size_t>(m); ++i) space *= q;
    if (space > 1 << 18) continue;
    const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(k + m));

    const WitnessSet w = ws(q, prefixes);
    const bool expect = naive_oracle(w, m, d);
    SearchOptions o;
    o.rules = {rng() % 2 == 0, rng() % 2 == 0, rng() % 2 == 0};
    REQUIRE(tail_search(w, m, d, o).feasible == expect);
    REQUIRE(tail_search(w, m, d).feasible == expect);
    feasible += expect;
    ++checked;
  }
  // Both answers must be well represented for the comparison to mean much.
  CHECK(feasible > 30);
  CHECK(feasible < 270);
}

TEST_CASE("full search with and without symmetry") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k <= std::min(3, n); ++k) {
      for (int d = 1; d <= std::min(4, n); ++d) {
        const CodeParams p{2, n, k, d};
        const auto on = full_search(p);
        const auto off = full_search(p, no_symmetry());
        REQUIRE(on.feasible == off.feasible);
        // A binary code with 2^k words and distance d exists in length n exactly
        // when n reaches the bound for these small parameters.
        if (k <= 3 && d <= 4) CHECK(on.feasible == (n >= griesmer_sum(2, k, d)));
      }
    }
  }
}
