#include "lme/classify.hpp"

#include <algorithm>
#include <numeric>

#include "lme/errors.hpp"

namespace lme {

Classification classify(const DimVec& d) {
  Classification out;
  out.invariants = invariants(d);
  const Wide dl = out.invariants.delta;
  const Wide r = out.invariants.r;
  if (dl > -2) {
    out.rule = Branch::DeltaAbove;
    if (r <= 0 || dl < 2)
      raise(Errc::InternalInconsistency,
            "delta > -2 must force r > 0 and delta >= 2 at " + d.str());
    out.status = Status::PositiveDim;
    out.dim = dl;
  } else if (dl == -2) {
    out.rule = Branch::DeltaEquals;
    if (r <= 0)
      raise(Errc::InternalInconsistency,
            "delta = -2 must force r > 0 at " + d.str());
    out.dim = std::max<Wide>(out.invariants.gmax - 3, 0);
    out.status = out.dim == 0 ? Status::Point : Status::PositiveDim;
  } else {
    out.rule = Branch::DeltaBelow;
    if (r > 0)
      raise(Errc::InternalInconsistency,
            "delta < -2 must force r <= 0 at " + d.str());
    if (r == 0) {
      out.status = Status::Point;
      out.dim = 0;
    } else {
      out.status = Status::Empty;
      out.dim = -1;
    }
  }
  return out;
}

Classification classify_2bc(std::int64_t b, std::int64_t c) {
  if (b < 2 || c < b)
    raise(Errc::InvalidArgument,
          "classify_2bc needs 2 <= b <= c, got b=" + std::to_string(b) +
              " c=" + std::to_string(c));
  const DimVec d = DimVec::validate({2, b, c});
  const Classification full = classify(d);

  // Family decision on its own: equal entries give dimension max(b-3, 0);
  // c/b = (k+1)/k in lowest terms gives a point; anything else is empty.
  // (The side condition kb > 1 is b >= 2 here.)
  Wide expect;
  if (b == c) {
    expect = std::max<Wide>(b - 3, 0);
  } else {
    const std::int64_t g = std::gcd(b, c);
    expect = (c / g == b / g + 1) ? 0 : -1;
  }
  if (expect != full.dim)
    raise(Errc::InternalInconsistency,
          "(2," + std::to_string(b) + "," + std::to_string(c) +
              ") family rule disagrees with the general classification");
  return full;
}

bool hyperdet_nonzero(const DimVec& d) {
  const std::size_t n = d.size();
  Wide head_sum = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) head_sum += d[i];
  return Wide(d.back()) <= head_sum - Wide(n - 2);
}

namespace {

Wide wide_gcd(Wide a, Wide b) {
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace

Wide lcm_all(const DimVec& d) {
  Wide l = 1;
  for (std::int64_t di : d.dims()) {
    const Wide g = wide_gcd(l, di);
    l = checked_mul(l / g, di);
  }
  return l;
}

std::vector<Wide> invariant_degrees(const DimVec& d, Wide k_max) {
  const Wide l = lcm_all(d);
  std::vector<Wide> degrees;
  for (Wide m = l; m <= k_max; m = checked_add(m, l)) degrees.push_back(m);
  return degrees;
}

ConsistencyReport cross_check(const DimVec& d) {
  Classification closed = classify(d);
  RecursionTrace trace = run_recursion(d);
  const Wide recursive_dim = trace.d_value;
  const bool agree = closed.dim == recursive_dim;
  return ConsistencyReport{d, closed, recursive_dim, agree, std::move(trace)};
}

}  // namespace lme
