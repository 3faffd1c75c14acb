#include "griesmer/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "griesmer/errors.hpp"

namespace griesmer {

namespace {

void check_alphabet(int q) {
  if (q < 2 || q > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must lie in [2, 256], got " + std::to_string(q));
  }
}

void require_comparable(const Word& a, const Word& b) {
  if (a.q() != b.q() || a.length() != b.length()) {
    throw IncomparableWordsError("incomparable words: " + a.str() + " (q=" + std::to_string(a.q()) +
                                 ") vs " + b.str() + " (q=" + std::to_string(b.q()) + ")");
  }
}

}  // namespace

Word::Word(int q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
  check_alphabet(q_);
  if (symbols_.empty()) throw std::invalid_argument("word must have at least one symbol");
  for (Symbol s : symbols_) {
    if (s >= q_) {
      throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet of size " +
                                  std::to_string(q_));
    }
  }
}

Word Word::zero(int q, std::size_t length) { return Word(q, std::vector<Symbol>(length, 0)); }

bool Word::is_zero() const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(), [](Symbol s) { return s == 0; });
}

Word Word::prefix(std::size_t k) const {
  if (k < 1 || k > symbols_.size()) throw std::invalid_argument("prefix length out of range");
  return Word(q_, std::vector<Symbol>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(k)));
}

std::span<const Symbol> Word::tail(std::size_t k) const {
  if (k > symbols_.size()) throw std::invalid_argument("tail offset out of range");
  return std::span<const Symbol>(symbols_).subspan(k);
}

Word Word::append(std::span<const Symbol> tail) const {
  std::vector<Symbol> out(symbols_);
  out.insert(out.end(), tail.begin(), tail.end());
  return Word(q_, std::move(out));
}

std::string Word::str() const {
  std::string out;
  if (q_ <= 10) {
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(symbols_[i]);
  }
  return out;
}

Word parse_word(std::string_view text, int q) {
  check_alphabet(q);
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty word");

  std::vector<Symbol> symbols;
  if (q <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("invalid symbol '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
      int s = c - '0';
      if (s >= q) throw ParseError("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
      symbols.push_back(static_cast<Symbol>(s));
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      if (is_space(text[i])) {
        ++i;
        continue;
      }
      int s = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), s);
      std::size_t used = static_cast<std::size_t>(ptr - (text.data() + i));
      if (ec != std::errc() || used == 0 || (i + used < text.size() && !is_space(text[i + used]))) {
        throw ParseError("invalid symbol list '" + std::string(text) + "'");
      }
      if (s < 0 || s >= q) throw ParseError("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
      symbols.push_back(static_cast<Symbol>(s));
      i += used;
    }
  }
  return Word(q, std::move(symbols));
}

int weight(const Word& w) noexcept {
  auto syms = w.symbols();
  return static_cast<int>(std::count_if(syms.begin(), syms.end(), [](Symbol s) { return s != 0; }));
}

int hamming(std::span<const Symbol> a, std::span<const Symbol> b) noexcept {
  int diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += a[i] != b[i];
  return diff;
}

int distance(const Word& a, const Word& b) {
  require_comparable(a, b);
  return hamming(a.symbols(), b.symbols());
}

Word subtract(const Word& a, const Word& b) {
  require_comparable(a, b);
  std::vector<Symbol> out(a.length());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<Symbol>((a[i] + a.q() - b[i]) % a.q());
  }
  return Word(a.q(), std::move(out));
}

}  // namespace griesmer
