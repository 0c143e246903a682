#include "lme/errors.hpp"

namespace lme {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::TooFewSubsystems: return "too_few_subsystems";
    case Errc::InsufficientNontrivial: return "insufficient_nontrivial";
    case Errc::NonPositiveEntry: return "non_positive_entry";
    case Errc::Overflow: return "overflow";
    case Errc::NotCaseC: return "not_case_c";
    case Errc::IndexOutOfRange: return "index_out_of_range";
    case Errc::InvalidArgument: return "invalid_argument";
    case Errc::InternalInconsistency: return "internal_inconsistency";
  }
  return "unknown";
}

void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lme
