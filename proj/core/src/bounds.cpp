#include "griesmer/bounds.hpp"

#include <stdexcept>

namespace griesmer {

namespace {

void check_args(std::int64_t q, std::int64_t d) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a / b + (a % b != 0); }

}  // namespace

std::int64_t griesmer_term(std::int64_t q, std::int64_t j, std::int64_t d) {
  check_args(q, d);
  if (j < 0) throw std::invalid_argument("j must be >= 0");
  std::int64_t power = 1;
  for (std::int64_t i = 0; i < j; ++i) {
    // power * q >= d: every further term is 1.
    if (power > (d - 1) / q) return 1;
    power *= q;
  }
  return ceil_div(d, power);
}

std::int64_t griesmer_sum(std::int64_t q, std::int64_t k, std::int64_t d) {
  check_args(q, d);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::int64_t sum = 0;
  std::int64_t power = 1;
  for (std::int64_t j = 0; j < k; ++j) {
    if (power >= d) return sum + (k - j);
    sum += ceil_div(d, power);
    power = power > (d - 1) / q ? d : power * q;
  }
  return sum;
}

std::int64_t singleton_bound(std::int64_t k, std::int64_t d) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  return d + k - 1;
}

BoundReport bound_report(std::int64_t q, std::int64_t k, std::int64_t d) {
  BoundReport r{q, k, d, griesmer_sum(q, k, d), singleton_bound(k, d), {}};
  r.terms.reserve(static_cast<std::size_t>(k));
  for (std::int64_t j = 0; j < k; ++j) r.terms.push_back(griesmer_term(q, j, d));
  return r;
}

std::vector<BoundReport> bound_table(std::int64_t q, std::int64_t kmax, std::int64_t dmax) {
  if (kmax < 1 || dmax < 1) throw std::invalid_argument("kmax and dmax must be >= 1");
  std::vector<BoundReport> out;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    for (std::int64_t d = 1; d <= dmax; ++d) out.push_back(bound_report(q, k, d));
  }
  return out;
}

}  // namespace griesmer
