#include "lme/format.hpp"

#include <limits>
#include <sstream>

namespace lme {

Json dims_json(const DimVec& d) {
  Json arr = Json::array();
  for (std::int64_t x : d.dims()) arr.push_back(x);
  return arr;
}

Json wide_json(Wide v) {
  if (v <= std::numeric_limits<std::int64_t>::max() &&
      v >= std::numeric_limits<std::int64_t>::min())
    return Json(static_cast<std::int64_t>(v));
  return Json(to_string(v));
}

std::string dims_token(const DimVec& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(d[i]);
  }
  return s;
}

std::string case_token(const TerminalCase& c) {
  switch (c.tag) {
    case TerminalTag::CaseA: return "a";
    case TerminalTag::CaseB: return "b";
    case TerminalTag::CaseD:
      switch (c.form) {
        case CaseDForm::Generic: return "d";
        case CaseDForm::Special222: return "d222";
        case CaseDForm::Special2dd: return "d2dd";
      }
  }
  return "?";
}

std::string status_token(Status s) {
  switch (s) {
    case Status::Empty: return "empty";
    case Status::Point: return "point";
    case Status::PositiveDim: return "dim";
  }
  return "?";
}

Json classification_json(const DimVec& d, const Classification& c) {
  Json j;
  j["dims"] = dims_json(d);
  j["status"] = status_token(c.status);
  j["value"] = wide_json(c.dim);
  j["delta"] = wide_json(c.invariants.delta);
  j["r"] = wide_json(c.invariants.r);
  j["gmax"] = c.invariants.gmax;
  j["product"] = wide_json(c.invariants.product);
  return j;
}

Json trace_json(const RecursionTrace& t) {
  Json j;
  j["start"] = dims_json(t.start());
  Json path = Json::array();
  for (const DimVec& v : t.path) path.push_back(dims_json(v));
  j["path"] = path;
  j["terminal"] = dims_json(t.terminal());
  j["case"] = case_token(t.terminal_case);
  if (t.terminal_case.form == CaseDForm::Special2dd)
    j["special_d"] = t.terminal_case.special_d;
  j["d"] = wide_json(t.d_value);
  return j;
}

Json state_json(const PureState& psi, double residual,
                const std::vector<double>& deviations) {
  Json j;
  j["dims"] = dims_json(psi.dims);
  Json amps = Json::array();
  for (const Complex& z : psi.amp) amps.push_back(Json::array({z.real(), z.imag()}));
  j["amplitudes"] = amps;
  j["residual"] = residual;
  j["per_subsystem_deviation"] = deviations;
  return j;
}

Json witness_json(const WitnessReport& r) {
  Json j;
  j["dims"] = dims_json(r.dims);
  j["predicted"] = {{"status", status_token(r.predicted.status)},
                    {"value", wide_json(r.predicted.dim)}};
  j["best_residual"] = r.best_residual;
  j["succeeded"] = r.succeeded;
  j["restarts_used"] = r.restarts_used;
  j["iterations_total"] = r.iterations_total;
  j["per_subsystem_deviation"] = r.per_subsystem_deviation;
  j["state"] = state_json(r.best_state, r.best_residual, r.per_subsystem_deviation);
  return j;
}

Json row_json(const RecordRow& row) {
  Json j;
  j["dims"] = dims_json(row.dims);
  j["delta"] = wide_json(row.invariants.delta);
  j["r"] = wide_json(row.invariants.r);
  j["gmax"] = row.invariants.gmax;
  j["product"] = wide_json(row.invariants.product);
  j["status"] = wide_json(row.status);
  j["terminal_case"] = case_token(row.terminal_case);
  j["terminal_vector"] = dims_json(row.terminal);
  j["trace_length"] = row.trace_length;
  j["hyperdet_nonzero"] = row.hyperdet_nonzero;
  j["lcm"] = wide_json(row.lcm);
  return j;
}

std::string row_csv(const RecordRow& row) {
  std::ostringstream os;
  os << dims_token(row.dims) << ',' << to_string(row.invariants.delta) << ','
     << to_string(row.invariants.r) << ',' << row.invariants.gmax << ','
     << to_string(row.invariants.product) << ',' << to_string(row.status) << ','
     << case_token(row.terminal_case) << ',' << dims_token(row.terminal) << ','
     << row.trace_length << ',' << (row.hyperdet_nonzero ? "true" : "false")
     << ',' << to_string(row.lcm);
  return os.str();
}

std::string row_human(const RecordRow& row) {
  std::ostringstream os;
  os << row.dims.str();
  os << "  delta=" << to_string(row.invariants.delta)
     << "  r=" << to_string(row.invariants.r) << "  gmax=" << row.invariants.gmax
     << "  status=" << to_string(row.status)
     << "  case=" << case_token(row.terminal_case)
     << "  terminal=" << row.terminal.str() << "  steps=" << row.trace_length;
  return os.str();
}

Json error_json(const Error& e) {
  return Json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
}

}  // namespace lme
