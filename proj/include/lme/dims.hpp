#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lme/wide.hpp"

namespace lme {

/// Weakly increasing tuple of local dimensions (d_1 <= ... <= d_n) with
/// n >= 2 and at least two entries >= 2. The full product is computed
/// (overflow-checked) once at construction.
class DimVec {
 public:
  /// Sorts `raw` and checks the invariants. Errors: TooFewSubsystems,
  /// NonPositiveEntry, InsufficientNontrivial, Overflow.
  static DimVec validate(std::vector<std::int64_t> raw);
  static DimVec validate(std::initializer_list<std::int64_t> raw);

  // Wraps entries already known to be sorted and positive (castling steps,
  // strip_ones, tests probing error paths). Skips the invariant checks but
  // still computes the checked product.
  static DimVec unchecked(std::vector<std::int64_t> sorted_dims);

  std::size_t size() const noexcept { return dims_.size(); }
  std::int64_t operator[](std::size_t i) const { return dims_[i]; }
  std::int64_t back() const { return dims_.back(); }
  std::span<const std::int64_t> dims() const noexcept { return dims_; }
  const std::vector<std::int64_t>& vec() const noexcept { return dims_; }

  Wide product() const noexcept { return product_; }
  /// Product of all entries except the last.
  Wide head_product() const { return product_ / dims_.back(); }

  friend bool operator==(const DimVec&, const DimVec&) = default;

  std::string str() const;  // "(2,3,4)"

 private:
  DimVec(std::vector<std::int64_t> dims, Wide product);

  std::vector<std::int64_t> dims_;
  Wide product_ = 0;
};

std::ostream& operator<<(std::ostream& os, const DimVec& d);

}  // namespace lme
