#include "lme/dims.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

#include "lme/errors.hpp"

namespace lme {

namespace {

Wide checked_product(const std::vector<std::int64_t>& dims) {
  Wide p = 1;
  for (std::int64_t d : dims) p = checked_mul(p, d);
  return p;
}

}  // namespace

DimVec::DimVec(std::vector<std::int64_t> dims, Wide product)
    : dims_(std::move(dims)), product_(product) {}

DimVec DimVec::validate(std::vector<std::int64_t> raw) {
  for (std::int64_t d : raw) {
    if (d <= 0)
      raise(Errc::NonPositiveEntry,
            "dimension entries must be positive, got " + std::to_string(d));
  }
  if (raw.size() < 2)
    raise(Errc::TooFewSubsystems,
          "need at least 2 subsystems, got " + std::to_string(raw.size()));
  std::sort(raw.begin(), raw.end());
  const auto nontrivial =
      std::count_if(raw.begin(), raw.end(), [](std::int64_t d) { return d >= 2; });
  if (nontrivial < 2)
    raise(Errc::InsufficientNontrivial,
          "need at least two subsystems of dimension >= 2");
  Wide p = checked_product(raw);
  return DimVec(std::move(raw), p);
}

DimVec DimVec::validate(std::initializer_list<std::int64_t> raw) {
  return validate(std::vector<std::int64_t>(raw));
}

DimVec DimVec::unchecked(std::vector<std::int64_t> sorted_dims) {
  assert(std::is_sorted(sorted_dims.begin(), sorted_dims.end()));
  assert(!sorted_dims.empty() && sorted_dims.front() >= 1);
  Wide p = checked_product(sorted_dims);
  return DimVec(std::move(sorted_dims), p);
}

std::string DimVec::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DimVec& d) {
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) os << ',';
    os << d[i];
  }
  return os << ')';
}

}  // namespace lme
