#pragma once

// Test-only oracles and generators. Nothing here calls into the search engine:
// words are plain strings and every check is by exhaustive enumeration.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "griesmer/code.hpp"
#include "griesmer/word.hpp"

namespace griesmer::testing {

inline int string_distance(const std::string& a, const std::string& b) {
  int diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += a[i] != b[i];
  return diff;
}

inline int string_min_distance(const std::vector<std::string>& words) {
  int best = 1 << 30;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, string_distance(words[i], words[j]));
  }
  return best;
}

/// Every tail assignment (zero prefix keeps the zero tail), digits as chars.
/// Returns the first feasible list of full words, or an empty vector.
inline std::vector<std::string> brute_force_tails(const std::vector<std::string>& prefixes, int q, int m, int d) {
  const std::size_t free = static_cast<std::size_t>(m) * (prefixes.size() - 1);
  std::vector<int> digits(free, 0);
  for (;;) {
    std::vector<std::string> words;
    for (std::size_t w = 0; w < prefixes.size(); ++w) {
      std::string s = prefixes[w];
      for (int t = 0; t < m; ++t) {
        s.push_back(w == 0 ? '0' : static_cast<char>('0' + digits[(w - 1) * static_cast<std::size_t>(m) + static_cast<std::size_t>(t)]));
      }
      words.push_back(std::move(s));
    }
    if (words.size() < 2 || string_min_distance(words) >= d) return words;
    std::size_t pos = 0;
    while (pos < free && ++digits[pos] == q) digits[pos++] = 0;
    if (pos == free) return {};
  }
}

inline std::vector<std::string> all_strings(int q, int len) {
  std::vector<std::string> out{""};
  for (int i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (int c = 0; c < q; ++c) next.push_back(s + static_cast<char>('0' + c));
    }
    out = std::move(next);
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, int q, std::size_t len) {
  std::uniform_int_distribution<int> sym(0, q - 1);
  std::vector<Symbol> s(len);
  for (auto& x : s) x = static_cast<Symbol>(sym(rng));
  return Word(q, std::move(s));
}

/// A code of up to `max_size` distinct random words.
inline Code random_code(std::mt19937_64& rng, int q, std::size_t len, std::size_t max_size) {
  std::vector<Word> words;
  std::uniform_int_distribution<std::size_t> count(2, max_size);
  const std::size_t target = count(rng);
  for (std::size_t tries = 0; words.size() < target && tries < 50 * target; ++tries) {
    Word w = random_word(rng, q, len);
    if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(std::move(w));
  }
  if (words.size() < 2) {
    words.assign({Word::zero(q, len), Word(q, std::vector<Symbol>(len, 1))});
  }
  return Code(q, len, std::move(words));
}

/// Apply a bijection of the alphabet to one column of every word.
inline Code relabel_column(const Code& code, std::size_t column, const std::vector<Symbol>& perm) {
  std::vector<Word> out;
  for (const Word& w : code) {
    std::vector<Symbol> s(w.symbols().begin(), w.symbols().end());
    s[column] = perm[s[column]];
    out.emplace_back(code.q(), std::move(s));
  }
  return Code(code.q(), code.length(), std::move(out));
}

}  // namespace griesmer::testing
