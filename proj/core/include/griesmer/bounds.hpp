#pragma once

#include <cstdint>
#include <vector>

namespace griesmer {

/// ceil(d / q^j). The running power is never raised past d, so any j is safe.
/// Throws std::invalid_argument unless q >= 2, j >= 0, d >= 1.
std::int64_t griesmer_term(std::int64_t q, std::int64_t j, std::int64_t d);

/// Sum over j in [0, k) of ceil(d / q^j): the least admissible length of a
/// q-ary code with k message symbols and minimum distance d.
std::int64_t griesmer_sum(std::int64_t q, std::int64_t k, std::int64_t d);

/// d + k - 1.
std::int64_t singleton_bound(std::int64_t k, std::int64_t d);

struct BoundReport {
  std::int64_t q = 2;
  std::int64_t k = 1;
  std::int64_t d = 1;
  std::int64_t griesmer = 1;
  std::int64_t singleton = 1;
  std::vector<std::int64_t> terms;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport bound_report(std::int64_t q, std::int64_t k, std::int64_t d);

/// One report per (k, d), 1 <= k <= kmax, 1 <= d <= dmax, k-major.
std::vector<BoundReport> bound_table(std::int64_t q, std::int64_t kmax, std::int64_t dmax);

}  // namespace griesmer
