#pragma once

#include <cstdint>
#include <vector>

#include "lme/recursion.hpp"

namespace lme {

enum class Status { Empty, Point, PositiveDim };

// Which branch of the closed form fired, by delta(d) against -2.
enum class Branch { DeltaAbove, DeltaEquals, DeltaBelow };

struct Classification {
  Status status = Status::Empty;
  Wide dim = -1;  // -1 / 0 / k >= 1, mirroring status
  Branch rule = Branch::DeltaBelow;
  InvariantBundle invariants;
};

/// Closed-form classification from the integer invariants alone:
///   delta > -2: dimension delta (then delta >= 2 and r > 0),
///   delta = -2: dimension max(gmax - 3, 0) (then r > 0),
///   delta < -2: point if r = 0, empty if r < 0.
/// Never runs the castling recursion; cross_check compares the two routes.
/// The branch sign conditions are asserted; a violation raises
/// InternalInconsistency (unreachable for a correct build).
Classification classify(const DimVec& d);

/// Closed form for the family (2, b, c), 2 <= b <= c: non-empty iff b = c
/// (dimension max(b-3, 0)) or c/b = (k+1)/k in lowest terms (a point).
/// Cross-asserted against classify() on the same vector.
Classification classify_2bc(std::int64_t b, std::int64_t c);

/// True iff d_n <= d_1 + ... + d_{n-1} - (n - 2), the format condition for a
/// nonvanishing hyperdeterminant. Strictly weaker than non-emptiness.
bool hyperdet_nonzero(const DimVec& d);

/// The degrees <= k_max in which invariant polynomials can exist: the
/// positive multiples of lcm(d_1, ..., d_n).
std::vector<Wide> invariant_degrees(const DimVec& d, Wide k_max);

/// lcm of entries (overflow-checked).
Wide lcm_all(const DimVec& d);

struct ConsistencyReport {
  DimVec dims;
  Classification closed_form;
  Wide recursive_dim = 0;
  bool agree = false;
  RecursionTrace trace;
};

/// Runs both routes (closed form and castling recursion) and compares the
/// dimension values (-1 empty, 0 point, k >= 1).
ConsistencyReport cross_check(const DimVec& d);

}  // namespace lme
