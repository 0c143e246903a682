#pragma once

#include <string>

#include "json.hpp"
#include "lme/enumerate.hpp"
#include "lme/witness.hpp"

namespace lme {

using Json = nlohmann::ordered_json;

/// JSON number when the value fits in 64 bits, decimal string otherwise.
Json wide_json(Wide v);

Json dims_json(const DimVec& d);

/// CSV token for a vector: "2x3x4".
std::string dims_token(const DimVec& d);

/// Terminal-case token: "a", "b", "d", "d222", "d2dd".
std::string case_token(const TerminalCase& c);

/// Status token: "empty", "point", "dim".
std::string status_token(Status s);

Json classification_json(const DimVec& d, const Classification& c);
Json trace_json(const RecursionTrace& t);

/// Witness state export: dims, amplitudes as [re, im] pairs in row-major
/// order, residual, per-subsystem deviations.
Json state_json(const PureState& psi, double residual,
                const std::vector<double>& deviations);
Json witness_json(const WitnessReport& r);

inline constexpr const char* kRowCsvHeader =
    "dims,delta,r,gmax,product,status,terminal_case,terminal_vector,"
    "trace_length,hyperdet_nonzero,lcm";

Json row_json(const RecordRow& row);
std::string row_csv(const RecordRow& row);
std::string row_human(const RecordRow& row);

Json error_json(const Error& e);

}  // namespace lme
