#include "griesmer/code.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "griesmer/errors.hpp"

namespace griesmer {

void CodeParams::validate() const {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (k < 1 || k > n) throw std::invalid_argument("k must satisfy 1 <= k <= n");
  if (d < 1 || d > n) throw std::invalid_argument("d must satisfy 1 <= d <= n");
}

Code::Code(int q, std::size_t length, std::vector<Word> words)
    : q_(q), length_(length), words_(std::move(words)) {
  for (const Word& w : words_) {
    if (w.q() != q_ || w.length() != length_) {
      throw IncomparableWordsError("word " + w.str() + " does not match code (q=" + std::to_string(q_) +
                                   ", length=" + std::to_string(length_) + ")");
    }
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw std::invalid_argument("code words must be distinct");
  }
}

namespace {

const Word& first_word(const std::vector<Word>& words) {
  if (words.empty()) throw std::invalid_argument("code needs at least one word to infer q and length");
  return words.front();
}

}  // namespace

Code::Code(std::vector<Word> words) : q_(first_word(words).q()), length_(words.front().length()) {
  *this = Code(q_, length_, std::move(words));
}

bool Code::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

int min_distance(const Code& code) {
  if (code.size() < 2) throw UndefinedDistanceError("minimum distance needs at least two words");
  int best = std::numeric_limits<int>::max();
  const auto& ws = code.words();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      best = std::min(best, hamming(ws[i].symbols(), ws[j].symbols()));
    }
  }
  return best;
}

std::vector<int> pairwise_distances(const Code& code) {
  std::vector<int> out;
  const auto& ws = code.words();
  out.reserve(ws.size() * (ws.size() - (ws.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) out.push_back(hamming(ws[i].symbols(), ws[j].symbols()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_systematic(const Code& code, std::size_t k) {
  if (k < 1 || k > code.length()) throw std::invalid_argument("k must satisfy 1 <= k <= length");
  // |C| = q^k, checked without overflow.
  std::size_t expected = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (expected > code.size()) return false;
    expected *= static_cast<std::size_t>(code.q());
  }
  if (expected != code.size()) return false;
  // Words are sorted, so equal prefixes are adjacent.
  const auto& ws = code.words();
  for (std::size_t i = 1; i < ws.size(); ++i) {
    auto a = ws[i - 1].symbols().first(k);
    auto b = ws[i].symbols().first(k);
    if (std::equal(a.begin(), a.end(), b.begin())) return false;
  }
  return true;
}

Code translate(const Code& code, const Word& t) {
  if (t.q() != code.q() || t.length() != code.length()) {
    throw IncomparableWordsError("translation word " + t.str() + " does not match code");
  }
  std::vector<Word> out;
  out.reserve(code.size());
  for (const Word& c : code) out.push_back(subtract(c, t));
  return Code(code.q(), code.length(), std::move(out));
}

Code pad(const Code& code, std::size_t extra) {
  if (extra == 0) return code;
  std::vector<Symbol> zeros(extra, 0);
  std::vector<Word> out;
  out.reserve(code.size());
  for (const Word& c : code) out.push_back(c.append(zeros));
  return Code(code.q(), code.length() + extra, std::move(out));
}

}  // namespace griesmer
