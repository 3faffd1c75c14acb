#include "griesmer/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "griesmer/errors.hpp"

namespace griesmer {

// ---------------------------------------------------------------------------
// WitnessSet

WitnessSet::WitnessSet(int q, int k, std::vector<Word> prefixes) : q_(q), k_(k), prefixes_(std::move(prefixes)) {
  if (k_ < 1) throw std::invalid_argument("witness prefix length must be >= 1");
  if (prefixes_.empty()) throw std::invalid_argument("witness set must contain the zero prefix");
  for (const Word& p : prefixes_) {
    if (p.q() != q_ || p.length() != static_cast<std::size_t>(k_)) {
      throw IncomparableWordsError("prefix " + p.str() + " does not match witness set (q=" + std::to_string(q_) +
                                   ", k=" + std::to_string(k_) + ")");
    }
  }
  if (!prefixes_.front().is_zero()) throw std::invalid_argument("first witness prefix must be the zero word");
  std::vector<Word> sorted(prefixes_);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("witness prefixes must be distinct");
  }
}

WitnessSet WitnessSet::from_strings(int q, const std::vector<std::string>& prefixes) {
  std::vector<Word> words;
  words.reserve(prefixes.size());
  for (const auto& s : prefixes) words.push_back(parse_word(s, q));
  if (words.empty()) throw std::invalid_argument("witness set must contain the zero prefix");
  int k = static_cast<int>(words.front().length());
  return WitnessSet(q, k, std::move(words));
}

WitnessSet WitnessSet::all_prefixes(int q, int k) {
  if (k < 1) throw std::invalid_argument("prefix length must be >= 1");
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) {
    if (count > kFullSearchGuard) {
      throw GuardExceededError("q^k exceeds " + std::to_string(kFullSearchGuard) + "; use a witness-set search instead");
    }
    count *= q;
  }
  if (count > kFullSearchGuard) {
    throw GuardExceededError("q^k = " + std::to_string(count) + " exceeds " + std::to_string(kFullSearchGuard) +
                             "; use a witness-set search instead");
  }
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(count));
  std::vector<Symbol> digits(static_cast<std::size_t>(k), 0);
  for (std::int64_t i = 0; i < count; ++i) {
    words.emplace_back(q, digits);
    for (int pos = k - 1; pos >= 0; --pos) {
      if (++digits[static_cast<std::size_t>(pos)] < q) break;
      digits[static_cast<std::size_t>(pos)] = 0;
    }
  }
  return WitnessSet(q, k, std::move(words));
}

WitnessSet WitnessSet::embed(int k2) const {
  if (k2 < k_) throw std::invalid_argument("cannot embed prefixes into fewer message symbols");
  std::vector<Word> out;
  out.reserve(prefixes_.size());
  std::vector<Symbol> lead(static_cast<std::size_t>(k2 - k_), 0);
  for (const Word& p : prefixes_) {
    std::vector<Symbol> s(lead);
    s.insert(s.end(), p.symbols().begin(), p.symbols().end());
    out.emplace_back(q_, std::move(s));
  }
  return WitnessSet(q_, k2, std::move(out));
}

// ---------------------------------------------------------------------------
// Search engine

namespace {

/// Tail distance word `other` must reach against the word that owns the
/// constraint. Pairs whose prefixes already differ in >= d places carry none.
struct Constraint {
  std::uint32_t other;
  int need;
};

struct Problem {
  int q = 2;
  int m = 0;
  int words = 0;
  bool zero_tail = false;
  bool column_order = false;
  bool value_order = false;
  std::vector<std::vector<Constraint>> constraints;
  /// Some pair needs more tail distance than m columns can supply.
  bool hopeless = false;
};

Problem make_problem(const WitnessSet& ws, int m, int d, const SearchOptions& opts) {
  Problem p;
  p.q = ws.q();
  p.m = m;
  p.words = static_cast<int>(ws.size());
  p.zero_tail = opts.symmetry && opts.rules.zero_tail;
  p.column_order = opts.symmetry && opts.rules.column_order;
  p.value_order = opts.symmetry && opts.rules.value_order;
  p.constraints.resize(ws.size());
  const auto& pre = ws.prefixes();
  for (std::size_t w = 0; w < pre.size(); ++w) {
    for (std::size_t i = 0; i < w; ++i) {
      int need = d - hamming(pre[i].symbols(), pre[w].symbols());
      if (need <= 0) continue;
      if (need > m) p.hopeless = true;
      p.constraints[w].push_back({static_cast<std::uint32_t>(i), need});
    }
  }
  return p;
}

/// Depth-first assignment of tail symbols, word by word and column by column
/// in increasing symbol order. One position is (word, column).
class Engine {
 public:
  enum class Status { found, exhausted, aborted };

  explicit Engine(const Problem& p)
      : p_(p),
        size_(static_cast<std::size_t>(p.words) * static_cast<std::size_t>(p.m)),
        tails_(size_, 0),
        placed_(size_, 0),
        colmax_(size_, 0),
        tied_(size_, 0),
        acc_(static_cast<std::size_t>(p.words)) {
    for (std::size_t w = 0; w < acc_.size(); ++w) acc_[w].assign(p.constraints[w].size(), 0);
  }

  /// Fix word w's tail without counting nodes or checking constraints.
  void preassign(int w, std::span<const Symbol> tail) {
    for (int t = 0; t < p_.m; ++t) {
      place(w, t, tail[static_cast<std::size_t>(t)]);
      placed_[index(w, t)] = 1;
    }
  }

  /// Search words [first, last). Earlier words must already be assigned.
  void set_range(int first, int last) {
    begin_ = static_cast<std::size_t>(first) * static_cast<std::size_t>(p_.m);
    end_ = static_cast<std::size_t>(last) * static_cast<std::size_t>(p_.m);
    pos_ = begin_;
    for (std::size_t i = begin_; i < end_; ++i) placed_[i] = 0;
    empty_done_ = false;
  }

  /// Advance to the next complete assignment of the range. Calling again after
  /// `found` resumes from that assignment.
  Status next(std::uint64_t limit, const std::atomic<bool>* stop) {
    if (begin_ == end_) {
      if (empty_done_) return Status::exhausted;
      empty_done_ = true;
      return Status::found;
    }
    if (pos_ == end_) --pos_;
    const auto m = static_cast<std::size_t>(p_.m);
    for (;;) {
      const int w = static_cast<int>(pos_ / m);
      const int t = static_cast<int>(pos_ % m);
      int s = 0;
      if (placed_[pos_]) {
        s = tails_[pos_] + 1;
        unplace(w, t);
        placed_[pos_] = 0;
      }
      const int hi = upper(w, t);
      bool ok = false;
      for (; s <= hi; ++s) {
        if (nodes_ >= limit) return Status::aborted;
        ++nodes_;
        if (stop != nullptr && (nodes_ & 0x3ff) == 0 && stop->load(std::memory_order_relaxed)) {
          return Status::aborted;
        }
        if (fits(w, t, static_cast<Symbol>(s))) {
          ok = true;
          break;
        }
      }
      if (ok) {
        place(w, t, static_cast<Symbol>(s));
        placed_[pos_] = 1;
        if (++pos_ == end_) return Status::found;
        continue;
      }
      if (pos_ == begin_) return Status::exhausted;
      --pos_;
    }
  }

  std::span<const Symbol> tail(int w) const {
    return std::span<const Symbol>(tails_).subspan(static_cast<std::size_t>(w) * static_cast<std::size_t>(p_.m),
                                                   static_cast<std::size_t>(p_.m));
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t index(int w, int t) const noexcept {
    return static_cast<std::size_t>(w) * static_cast<std::size_t>(p_.m) + static_cast<std::size_t>(t);
  }

  int upper(int w, int t) const noexcept {
    int hi = p_.q - 1;
    if (p_.value_order) {
      const int seen = w == 0 ? -1 : colmax_[index(w - 1, t)];
      hi = std::min(hi, seen + 1);
    }
    if (p_.column_order && t > 0) {
      const bool tied = w == 0 || tied_[index(w - 1, t)] != 0;
      if (tied) hi = std::min<int>(hi, tails_[index(w, t - 1)]);
    }
    return hi;
  }

  bool fits(int w, int t, Symbol s) const noexcept {
    const int remaining = p_.m - t - 1;
    const auto& cons = p_.constraints[static_cast<std::size_t>(w)];
    const auto& acc = acc_[static_cast<std::size_t>(w)];
    for (std::size_t c = 0; c < cons.size(); ++c) {
      const int got = acc[c] + (tails_[index(static_cast<int>(cons[c].other), t)] != s);
      if (got + remaining < cons[c].need) return false;
    }
    return true;
  }

  void place(int w, int t, Symbol s) {
    const std::size_t at = index(w, t);
    tails_[at] = s;
    const auto& cons = p_.constraints[static_cast<std::size_t>(w)];
    auto& acc = acc_[static_cast<std::size_t>(w)];
    for (std::size_t c = 0; c < cons.size(); ++c) {
      acc[c] += tails_[index(static_cast<int>(cons[c].other), t)] != s;
    }
    const int seen = w == 0 ? -1 : colmax_[index(w - 1, t)];
    colmax_[at] = static_cast<std::int16_t>(std::max<int>(seen, s));
    const bool tied_above = w == 0 || tied_[index(w - 1, t)] != 0;
    tied_[at] = t > 0 && tied_above && tails_[index(w, t - 1)] == s;
  }

  void unplace(int w, int t) {
    const std::size_t at = index(w, t);
    const Symbol s = tails_[at];
    const auto& cons = p_.constraints[static_cast<std::size_t>(w)];
    auto& acc = acc_[static_cast<std::size_t>(w)];
    for (std::size_t c = 0; c < cons.size(); ++c) {
      acc[c] -= tails_[index(static_cast<int>(cons[c].other), t)] != s;
    }
  }

  const Problem& p_;
  std::size_t size_;
  std::vector<Symbol> tails_;
  std::vector<std::uint8_t> placed_;
  /// Largest symbol in the column among words up to and including this one.
  std::vector<std::int16_t> colmax_;
  /// Columns t-1 and t agree on every word up to and including this one.
  std::vector<std::uint8_t> tied_;
  /// Tail distance accumulated so far, per constraint of each word.
  std::vector<std::vector<int>> acc_;
  std::size_t begin_ = 0;
  std::size_t end_ = 0;
  std::size_t pos_ = 0;
  bool empty_done_ = false;
  std::uint64_t nodes_ = 0;
};

Code assemble(const WitnessSet& ws, int m, const std::vector<std::vector<Symbol>>& tails) {
  std::vector<Word> words;
  words.reserve(ws.size());
  for (std::size_t w = 0; w < ws.size(); ++w) {
    const Word& pre = ws.prefixes()[w];
    words.push_back(m == 0 ? pre : pre.append(tails[w]));
  }
  return Code(ws.q(), static_cast<std::size_t>(ws.k() + m), std::move(words));
}

std::vector<std::vector<Symbol>> collect_tails(const Engine& e, int words) {
  std::vector<std::vector<Symbol>> out;
  out.reserve(static_cast<std::size_t>(words));
  for (int w = 0; w < words; ++w) {
    auto t = e.tail(w);
    out.emplace_back(t.begin(), t.end());
  }
  return out;
}

SearchOutcome search_parallel(const WitnessSet& ws, const Problem& p, int first, unsigned threads) {
  // Split on every admissible tail of the first free word.
  std::vector<std::vector<Symbol>> tasks;
  Engine splitter(p);
  std::vector<Symbol> zeros(static_cast<std::size_t>(p.m), 0);
  if (first > 0) splitter.preassign(0, zeros);
  splitter.set_range(first, first + 1);
  const auto no_limit = std::numeric_limits<std::uint64_t>::max();
  while (splitter.next(no_limit, nullptr) == Engine::Status::found) {
    auto t = splitter.tail(first);
    tasks.emplace_back(t.begin(), t.end());
  }

  SearchOutcome out;
  std::atomic<std::uint64_t> nodes{splitter.nodes()};
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next_task{0};
  std::mutex mu;
  std::optional<std::vector<std::vector<Symbol>>> solution;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= tasks.size() || stop.load(std::memory_order_relaxed)) return;
      Engine e(p);
      if (first > 0) e.preassign(0, zeros);
      e.preassign(first, tasks[i]);
      e.set_range(first + 1, p.words);
      const auto status = e.next(no_limit, &stop);
      nodes.fetch_add(e.nodes());
      if (status == Engine::Status::found) {
        std::lock_guard lock(mu);
        if (!solution) solution = collect_tails(e, p.words);
        stop.store(true);
        return;
      }
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
  std::vector<std::jthread> pool;
  pool.reserve(n);
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  pool.clear();

  out.nodes_explored = nodes.load();
  out.exhausted = true;
  if (solution) {
    out.feasible = true;
    out.witness = assemble(ws, p.m, *solution);
  }
  return out;
}

}  // namespace

SearchOutcome tail_search(const WitnessSet& ws, int m, int d, const SearchOptions& opts) {
  if (m < 0) throw std::invalid_argument("tail length must be >= 0");
  if (d < 1) throw std::invalid_argument("distance must be >= 1");
  if (opts.node_limit && *opts.node_limit < 1) throw std::invalid_argument("node limit must be >= 1");

  const Problem p = make_problem(ws, m, d, opts);
  SearchOutcome out;
  if (p.hopeless) return out;
  if (m == 0) {
    out.feasible = true;
    out.witness = assemble(ws, 0, {});
    check_witness(out, ws, m, d);
    return out;
  }

  const int first = p.zero_tail ? 1 : 0;
  const unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  // A node budget makes the stopping point schedule dependent, so limited
  // runs stay sequential.
  if (!opts.deterministic && !opts.node_limit && p.words - first >= 2) {
    out = search_parallel(ws, p, first, threads);
    check_witness(out, ws, m, d);
    return out;
  }

  Engine e(p);
  if (first > 0) e.preassign(0, std::vector<Symbol>(static_cast<std::size_t>(m), 0));
  e.set_range(first, p.words);
  const auto status = e.next(opts.node_limit.value_or(std::numeric_limits<std::uint64_t>::max()), nullptr);
  out.nodes_explored = e.nodes();
  out.exhausted = status != Engine::Status::aborted;
  if (status == Engine::Status::found) {
    out.feasible = true;
    out.witness = assemble(ws, m, collect_tails(e, p.words));
  }
  check_witness(out, ws, m, d);
  return out;
}

SearchOutcome full_search(const CodeParams& params, const SearchOptions& opts) {
  params.validate();
  const WitnessSet all = WitnessSet::all_prefixes(params.q, params.k);
  return tail_search(all, params.n - params.k, params.d, opts);
}

bool naive_oracle(const WitnessSet& ws, int m, int d) {
  if (m < 0) throw std::invalid_argument("tail length must be >= 0");
  if (d < 1) throw std::invalid_argument("distance must be >= 1");
  const std::size_t words = ws.size();
  const std::size_t free_symbols = static_cast<std::size_t>(m) * (words - 1);
  std::int64_t total = 1;
  for (std::size_t i = 0; i < free_symbols; ++i) {
    total *= ws.q();
    if (total > kNaiveOracleGuard) {
      throw GuardExceededError("naive enumeration exceeds 2^24 tail assignments");
    }
  }

  std::vector<std::vector<int>> prefix_dist(words, std::vector<int>(words, 0));
  for (std::size_t i = 0; i < words; ++i) {
    for (std::size_t j = 0; j < words; ++j) prefix_dist[i][j] = distance(ws.prefixes()[i], ws.prefixes()[j]);
  }

  // tails[0] stays zero; the rest run through every value like an odometer.
  const auto mm = static_cast<std::size_t>(m);
  std::vector<Symbol> tails(words * mm, 0);
  for (std::int64_t n = 0; n < total; ++n) {
    bool ok = true;
    for (std::size_t i = 0; i < words && ok; ++i) {
      for (std::size_t j = i + 1; j < words && ok; ++j) {
        int dist = prefix_dist[i][j];
        for (std::size_t t = 0; t < mm; ++t) dist += tails[i * mm + t] != tails[j * mm + t];
        ok = dist >= d;
      }
    }
    if (ok) return true;
    for (std::size_t pos = tails.size(); pos-- > mm;) {
      if (++tails[pos] < ws.q()) break;
      tails[pos] = 0;
    }
  }
  return false;
}

void check_witness(const SearchOutcome& outcome, const WitnessSet& ws, int m, int d) {
  if (!outcome.feasible) {
    if (outcome.witness) throw std::logic_error("infeasible outcome carries a witness");
    return;
  }
  if (!outcome.witness) throw std::logic_error("feasible outcome without a witness");
  const Code& code = *outcome.witness;
  if (code.q() != ws.q() || code.length() != static_cast<std::size_t>(ws.k() + m) || code.size() != ws.size()) {
    throw std::logic_error("witness shape does not match the witness set");
  }
  std::vector<Word> want(ws.prefixes());
  std::sort(want.begin(), want.end());
  std::vector<Word> got;
  got.reserve(code.size());
  for (const Word& w : code) got.push_back(w.prefix(static_cast<std::size_t>(ws.k())));
  std::sort(got.begin(), got.end());
  if (got != want) throw std::logic_error("witness prefixes differ from the witness set");
  if (code.size() >= 2 && min_distance(code) < d) throw std::logic_error("witness violates the distance constraint");
}

}  // namespace griesmer
