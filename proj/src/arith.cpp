#include "lme/arith.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "lme/errors.hpp"

namespace lme {

Wide delta(const DimVec& d) {
  Wide acc = checked_sub(d.product(), 1);
  for (std::int64_t di : d.dims()) {
    // di^2 always fits: (2^63)^2 < 2^127.
    acc = checked_sub(acc, Wide(di) * di - 1);
  }
  return acc;
}

Wide gk(const DimVec& d, int k) {
  const int n = static_cast<int>(d.size());
  if (k < 1 || k > n)
    raise(Errc::IndexOutOfRange,
          "subset size k = " + std::to_string(k) + " outside [1, " +
              std::to_string(n) + "]");
  Wide total = 0;
  // DFS over k-subsets carrying the running gcd (gcd(0, x) = x seeds it).
  auto rec = [&](auto&& self, int start, int left, std::int64_t g) -> void {
    if (left == 0) {
      total = checked_add(total, Wide(g) * g);
      return;
    }
    for (int i = start; i <= n - left; ++i)
      self(self, i + 1, left - 1, std::gcd(g, d[i]));
  };
  rec(rec, 0, k, 0);
  return total;
}

Wide r_invariant(const DimVec& d) {
  const int n = static_cast<int>(d.size());
  Wide acc = d.product();
  // Signed sum of squared gcds over every nonempty subset; `odd` tracks the
  // parity of the subset size.
  auto rec = [&](auto&& self, int i, std::int64_t g, bool odd) -> void {
    if (i == n) {
      if (g != 0) {
        const Wide sq = Wide(g) * g;
        acc = odd ? checked_sub(acc, sq) : checked_add(acc, sq);
      }
      return;
    }
    self(self, i + 1, g, odd);
    self(self, i + 1, std::gcd(g, d[i]), !odd);
  };
  rec(rec, 0, 0, false);
  return acc;
}

std::int64_t gmax(const DimVec& d) {
  const std::size_t n = d.size();
  std::int64_t best = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      best = std::max(best, std::gcd(d[i], d[j]));
  return best;
}

DimVec strip_ones(const DimVec& d) {
  std::vector<std::int64_t> kept;
  kept.reserve(d.size());
  for (std::int64_t di : d.dims())
    if (di != 1) kept.push_back(di);
  if (kept.size() < 2)
    raise(Errc::InsufficientNontrivial,
          "stripping 1s from " + d.str() + " leaves fewer than 2 entries");
  return DimVec::unchecked(std::move(kept));
}

InvariantBundle invariants(const DimVec& d) {
  return InvariantBundle{delta(d), r_invariant(d), gmax(d), d.product()};
}

}  // namespace lme
