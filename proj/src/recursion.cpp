#include "lme/recursion.hpp"

#include <algorithm>

#include "lme/errors.hpp"

namespace lme {

DimVec castle(const DimVec& d) {
  const Wide head = d.head_product();
  const Wide top = d.back();
  if (!(head < 2 * top && top < head))
    raise(Errc::NotCaseC, "no castling step applies to " + d.str());
  std::vector<std::int64_t> next(d.vec().begin(), d.vec().end() - 1);
  // 0 < head - top < top <= d_n, so the new entry fits in 64 bits.
  next.push_back(static_cast<std::int64_t>(head - top));
  std::sort(next.begin(), next.end());
  return DimVec::unchecked(std::move(next));
}

std::optional<TerminalCase> classify_case(const DimVec& d) {
  const Wide head = d.head_product();
  const Wide top = d.back();
  if (top > head) return TerminalCase{TerminalTag::CaseA};
  if (top == head) return TerminalCase{TerminalTag::CaseB};
  if (2 * top > head) return std::nullopt;  // castling step applies

  TerminalCase out{TerminalTag::CaseD, CaseDForm::Generic, 0};
  const auto& v = d.vec();
  const std::size_t n = v.size();
  if (n >= 3 && v[n - 3] == 2 && v[n - 2] == v[n - 1] &&
      std::all_of(v.begin(), v.end() - 3, [](std::int64_t x) { return x == 1; })) {
    if (v[n - 2] == 2) {
      out.form = CaseDForm::Special222;
    } else {
      out.form = CaseDForm::Special2dd;
      out.special_d = v[n - 2];
    }
  }
  return out;
}

RecursionTrace run_recursion(const DimVec& d) {
  RecursionTrace trace;
  trace.path.push_back(d);
  std::optional<TerminalCase> c = classify_case(d);
  while (!c) {
    trace.path.push_back(castle(trace.path.back()));
    c = classify_case(trace.path.back());
  }
  trace.terminal_case = *c;
  switch (c->tag) {
    case TerminalTag::CaseA:
      trace.d_value = -1;
      break;
    case TerminalTag::CaseB:
      trace.d_value = 0;
      break;
    case TerminalTag::CaseD:
      switch (c->form) {
        case CaseDForm::Special222:
          trace.d_value = 0;
          break;
        case CaseDForm::Special2dd:
          trace.d_value = c->special_d - 3;
          break;
        case CaseDForm::Generic:
          trace.d_value = delta(trace.terminal());
          break;
      }
      break;
  }
  return trace;
}

Wide dimension(const DimVec& d) { return run_recursion(d).d_value; }

}  // namespace lme
