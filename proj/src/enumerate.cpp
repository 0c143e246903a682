#include "lme/enumerate.hpp"

#include <algorithm>
#include <string>

namespace lme {

namespace {

void check_bounds(const EnumerationBounds& b) {
  if (b.n_min < 2 || b.n_max < b.n_min)
    raise(Errc::InvalidArgument, "need 2 <= n_min <= n_max");
  if (b.max_product < 4)
    raise(Errc::InvalidArgument, "max_product must be at least 4");
  if (b.max_entry < 0)
    raise(Errc::InvalidArgument, "max_entry must be nonnegative");
}

RecordRow make_row(DimVec dims) {
  const Classification cls = classify(dims);
  RecursionTrace trace = run_recursion(dims);
  return RecordRow{std::move(dims),
                   cls.invariants,
                   cls.dim,
                   trace.terminal_case,
                   trace.terminal(),
                   trace.steps(),
                   hyperdet_nonzero(trace.start()),
                   lcm_all(trace.start())};
}

}  // namespace

void enumerate_dims(const EnumerationBounds& bounds, const DimSink& on_dims,
                    const SkipSink& on_skip) {
  check_bounds(bounds);

  std::vector<std::int64_t> current;
  auto emit = [&](const std::vector<std::int64_t>& dims) {
    try {
      on_dims(DimVec::validate(dims));
    } catch (const Error& e) {
      if (on_skip) on_skip(dims, e);
    }
  };

  // Depth-first with ascending entries gives lexicographic order per n.
  auto rec = [&](auto&& self, int n, Wide prod) -> void {
    if (static_cast<int>(current.size()) == n) {
      if (bounds.require_nontrivial &&
          std::count_if(current.begin(), current.end(),
                        [](std::int64_t x) { return x >= 2; }) < 2)
        return;
      emit(current);
      return;
    }
    const std::int64_t lo = current.empty() ? 1 : current.back();
    for (std::int64_t d = lo;; ++d) {
      if (bounds.max_entry != 0 && d > bounds.max_entry) break;
      if (Wide(d) > bounds.max_product / prod) break;  // overflow-free product cap
      current.push_back(d);
      self(self, n, prod * d);
      current.pop_back();
    }
  };

  for (int n = bounds.n_min; n <= bounds.n_max; ++n) rec(rec, n, 1);
}

void enumerate(const EnumerationBounds& bounds, const RowSink& on_row,
               const SkipSink& on_skip) {
  enumerate_dims(
      bounds,
      [&](const DimVec& d) {
        try {
          on_row(make_row(d));
        } catch (const Error& e) {
          if (on_skip) on_skip(d.vec(), e);
        }
      },
      on_skip);
}

}  // namespace lme
