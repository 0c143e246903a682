#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lme/classify.hpp"
#include "lme/errors.hpp"

namespace lme {

struct EnumerationBounds {
  int n_min = 2;
  int n_max = 3;
  Wide max_product = 4096;
  std::int64_t max_entry = 0;      // 0 = no explicit cap beyond the product
  bool require_nontrivial = true;  // keep the two-entries->=2 rule
};

/// One fully classified vector of the sweep.
struct RecordRow {
  DimVec dims;
  InvariantBundle invariants;
  Wide status = 0;  // -1 / 0 / k, same encoding as the recursion value
  TerminalCase terminal_case;
  DimVec terminal;
  std::size_t trace_length = 0;
  bool hyperdet_nonzero = false;
  Wide lcm = 1;
};

using DimSink = std::function<void(const DimVec&)>;
using RowSink = std::function<void(const RecordRow&)>;
using SkipSink = std::function<void(const std::vector<std::int64_t>&, const Error&)>;

/// Streams every weakly increasing vector within bounds exactly once:
/// n ascending from n_min to n_max, lexicographic within each n. Vectors
/// that fail validation are reported to on_skip (when given) and otherwise
/// dropped; the sweep itself continues.
void enumerate_dims(const EnumerationBounds& bounds, const DimSink& on_dims,
                    const SkipSink& on_skip = nullptr);

/// enumerate_dims with each vector classified into a RecordRow. Overflow
/// while classifying also lands in on_skip.
void enumerate(const EnumerationBounds& bounds, const RowSink& on_row,
               const SkipSink& on_skip = nullptr);

}  // namespace lme
