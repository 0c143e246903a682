#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lme/arith.hpp"

namespace lme {

// Terminal cases of the castling recursion, by the size of the top entry d_n
// against the head product P = d_1...d_{n-1}:
//   CaseA: d_n >  P   (quotient empty, D = -1)
//   CaseB: d_n == P   (single point, D = 0)
//   CaseD: 2 d_n <= P (non-empty; D depends on the terminal shape)
// Vectors with P/2 < d_n < P are non-terminal: one castling step applies.
enum class TerminalTag { CaseA, CaseB, CaseD };

// CaseD splits on the terminal shape: (1,...,1,2,2,2) and (1,...,1,2,d,d)
// with d >= 3 have smaller dimension than the generic value delta(e).
enum class CaseDForm { Generic, Special222, Special2dd };

struct TerminalCase {
  TerminalTag tag = TerminalTag::CaseA;
  CaseDForm form = CaseDForm::Generic;  // meaningful only for CaseD
  std::int64_t special_d = 0;           // the d of (1,...,1,2,d,d); else 0
};

struct RecursionTrace {
  // Full castling path; path.front() is the input, path.back() the terminal
  // vector. Consecutive entries are related by one castle() step.
  std::vector<DimVec> path;
  TerminalCase terminal_case;
  Wide d_value = 0;  // -1 empty, 0 point, k >= 1 positive dimension

  const DimVec& start() const { return path.front(); }
  const DimVec& terminal() const { return path.back(); }
  std::size_t steps() const { return path.size() - 1; }
};

/// One castling step: d -> sort(d_1, ..., d_{n-1}, P - d_n). Only defined
/// for P/2 < d_n < P (errors with NotCaseC otherwise). Strictly decreases
/// the entry sum and preserves delta, r_invariant and gmax.
DimVec castle(const DimVec& d);

/// Terminal case of `d`, or nullopt when a castling step applies.
/// The halving test is exact: 2*d_n <= P, never rational P/2.
std::optional<TerminalCase> classify_case(const DimVec& d);

/// Iterates castle() to the terminal vector and assigns the dimension value:
/// CaseA -> -1; CaseB -> 0; CaseD Special222 -> 0; Special2dd -> d - 3;
/// CaseD generic -> delta(terminal) (= delta(start)).
RecursionTrace run_recursion(const DimVec& d);

/// run_recursion(d).d_value.
Wide dimension(const DimVec& d);

}  // namespace lme
