// Command-line front end: classification, castling traces, witness searches,
// exhaustive sweeps, and the two-route consistency check.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lme/format.hpp"

namespace {

using lme::Json;

// Exit codes: 0 ok, 1 check failure / internal error, 2 validation, 3 overflow.
constexpr int kExitCheckFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitOverflow = 3;

bool g_json_errors = false;  // set by handlers so the catch-all can match

int error_exit_code(const lme::Error& e) {
  switch (e.code()) {
    case lme::Errc::Overflow:
      return kExitOverflow;
    case lme::Errc::InternalInconsistency:
      return kExitCheckFailed;
    default:
      return kExitValidation;
  }
}

lme::DimVec parse_dims(const std::vector<std::int64_t>& raw) {
  return lme::DimVec::validate(raw);
}

std::string human_status(const lme::Classification& c) {
  switch (c.status) {
    case lme::Status::Empty: return "empty";
    case lme::Status::Point: return "single point";
    case lme::Status::PositiveDim:
      return "dimension " + lme::to_string(c.dim);
  }
  return "?";
}

void cmd_classify(const std::vector<std::int64_t>& raw, bool json) {
  const lme::DimVec d = parse_dims(raw);
  const lme::Classification c = lme::classify(d);
  if (json) {
    std::cout << classification_json(d, c).dump() << '\n';
  } else {
    std::cout << d.str() << ": " << human_status(c)
              << "  [delta=" << lme::to_string(c.invariants.delta)
              << " r=" << lme::to_string(c.invariants.r)
              << " gmax=" << c.invariants.gmax
              << " product=" << lme::to_string(c.invariants.product) << "]\n";
  }
}

void cmd_trace(const std::vector<std::int64_t>& raw, bool json) {
  const lme::DimVec d = parse_dims(raw);
  const lme::RecursionTrace t = lme::run_recursion(d);
  if (json) {
    std::cout << trace_json(t).dump() << '\n';
    return;
  }
  for (const lme::DimVec& v : t.path) std::cout << v.str() << '\n';
  std::cout << "terminal case " << case_token(t.terminal_case);
  if (t.terminal_case.form == lme::CaseDForm::Special2dd)
    std::cout << " (d=" << t.terminal_case.special_d << ")";
  std::cout << ", D = " << lme::to_string(t.d_value) << '\n';
}

void cmd_witness(const std::vector<std::int64_t>& raw, const lme::WitnessConfig& cfg,
                 bool json, const std::string& out_path) {
  const lme::DimVec d = parse_dims(raw);
  const lme::WitnessReport rep = lme::search_witness(d, cfg);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out)
      lme::raise(lme::Errc::InvalidArgument, "cannot open " + out_path);
    out << state_json(rep.best_state, rep.best_residual,
                      rep.per_subsystem_deviation)
               .dump(2)
        << '\n';
  }
  if (json) {
    std::cout << witness_json(rep).dump() << '\n';
    return;
  }
  std::cout << "dims: " << d.str() << '\n'
            << "predicted: " << human_status(rep.predicted) << '\n'
            << "best residual: " << rep.best_residual << " ("
            << rep.restarts_used << " restarts, " << rep.iterations_total
            << " iterations)\n"
            << "succeeded: " << (rep.succeeded ? "yes" : "no") << '\n';
  std::cout << "per-subsystem deviation:";
  for (double dev : rep.per_subsystem_deviation) std::cout << ' ' << dev;
  std::cout << '\n';
}

void print_skip(const std::vector<std::int64_t>& dims, const lme::Error& e,
                bool json) {
  if (json) {
    Json j;
    j["skipped"] = dims;
    j["error"] = {{"code", lme::errc_name(e.code())}, {"message", e.what()}};
    std::cout << j.dump() << '\n';
  } else {
    std::cerr << "skipped (";
    for (std::size_t i = 0; i < dims.size(); ++i)
      std::cerr << (i ? "," : "") << dims[i];
    std::cerr << "): " << e.what() << '\n';
  }
}

void cmd_enumerate(const lme::EnumerationBounds& bounds, bool json, bool csv) {
  if (csv) std::cout << lme::kRowCsvHeader << '\n';
  lme::enumerate(
      bounds,
      [&](const lme::RecordRow& row) {
        if (json)
          std::cout << row_json(row).dump() << '\n';
        else if (csv)
          std::cout << row_csv(row) << '\n';
        else
          std::cout << row_human(row) << '\n';
      },
      [&](const std::vector<std::int64_t>& dims, const lme::Error& e) {
        print_skip(dims, e, json);
      });
}

int cmd_check(const lme::EnumerationBounds& bounds, bool json) {
  std::uint64_t checked = 0;
  std::uint64_t disagreements = 0;
  lme::enumerate_dims(bounds, [&](const lme::DimVec& d) {
    const lme::ConsistencyReport rep = lme::cross_check(d);
    ++checked;
    if (!rep.agree) {
      ++disagreements;
      Json j;
      j["dims"] = dims_json(d);
      j["closed_form"] = lme::wide_json(rep.closed_form.dim);
      j["recursive"] = lme::wide_json(rep.recursive_dim);
      std::cerr << "disagreement: " << j.dump() << '\n';
    }
  });
  if (json) {
    Json j;
    j["checked"] = checked;
    j["disagreements"] = disagreements;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "checked " << checked << " vectors: " << disagreements
              << " disagreements\n";
  }
  return disagreements == 0 ? 0 : kExitCheckFailed;
}

void add_bounds_flags(CLI::App* cmd, lme::EnumerationBounds& bounds,
                      std::int64_t& max_product) {
  cmd->add_option("--n-min", bounds.n_min, "smallest tuple length")
      ->capture_default_str();
  cmd->add_option("--n-max", bounds.n_max, "largest tuple length")
      ->capture_default_str();
  cmd->add_option("--max-product", max_product, "cap on the entry product")
      ->capture_default_str();
  cmd->add_option("--max-entry", bounds.max_entry,
                  "cap on single entries (0 = product cap only)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "existence, moduli dimension, and numerical witnesses of locally "
      "maximally entangled states"};
  app.require_subcommand(1);

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "closed-form classification of a tuple");
  std::vector<std::int64_t> classify_dims;
  bool classify_json = false;
  classify_cmd->add_option("dims", classify_dims, "local dimensions")->required();
  classify_cmd->add_flag("--json", classify_json, "one JSON object on stdout");

  // trace
  auto* trace_cmd =
      app.add_subcommand("trace", "castling recursion trace of a tuple");
  std::vector<std::int64_t> trace_dims;
  bool trace_json = false;
  trace_cmd->add_option("dims", trace_dims, "local dimensions")->required();
  trace_cmd->add_flag("--json", trace_json, "one JSON object on stdout");

  // witness
  auto* witness_cmd = app.add_subcommand(
      "witness", "search for a state with maximally mixed reductions");
  std::vector<std::int64_t> witness_dims;
  lme::WitnessConfig cfg;
  bool witness_json = false;
  std::string out_path;
  witness_cmd->add_option("dims", witness_dims, "local dimensions")->required();
  witness_cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  witness_cmd->add_option("--restarts", cfg.restarts, "number of descents")
      ->capture_default_str();
  witness_cmd->add_option("--max-iters", cfg.max_iters, "iterations per descent")
      ->capture_default_str();
  witness_cmd->add_option("--tol", cfg.success_tolerance, "success residual")
      ->capture_default_str();
  witness_cmd->add_option("--out", out_path, "write the witness state (JSON)");
  witness_cmd->add_flag("--json", witness_json, "full report as JSON");

  // enumerate
  auto* enum_cmd =
      app.add_subcommand("enumerate", "classified table of all tuples in bounds");
  lme::EnumerationBounds enum_bounds;
  std::int64_t enum_max_product = 4096;
  bool enum_json = false;
  bool enum_csv = false;
  add_bounds_flags(enum_cmd, enum_bounds, enum_max_product);
  enum_cmd->add_flag("--json", enum_json, "one JSON object per row");
  enum_cmd->add_flag("--csv", enum_csv, "CSV with fixed header");

  // check
  auto* check_cmd = app.add_subcommand(
      "check", "closed form vs recursion over all tuples in bounds");
  lme::EnumerationBounds check_bounds;
  std::int64_t check_max_product = 4096;
  bool check_json = false;
  add_bounds_flags(check_cmd, check_bounds, check_max_product);
  check_cmd->add_flag("--json", check_json, "summary as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*classify_cmd) {
      g_json_errors = classify_json;
      cmd_classify(classify_dims, classify_json);
    } else if (*trace_cmd) {
      g_json_errors = trace_json;
      cmd_trace(trace_dims, trace_json);
    } else if (*witness_cmd) {
      g_json_errors = witness_json;
      cmd_witness(witness_dims, cfg, witness_json, out_path);
    } else if (*enum_cmd) {
      g_json_errors = enum_json;
      if (enum_json && enum_csv)
        lme::raise(lme::Errc::InvalidArgument, "--json and --csv are exclusive");
      enum_bounds.max_product = enum_max_product;
      cmd_enumerate(enum_bounds, enum_json, enum_csv);
    } else if (*check_cmd) {
      g_json_errors = check_json;
      check_bounds.max_product = check_max_product;
      return cmd_check(check_bounds, check_json);
    }
  } catch (const lme::Error& e) {
    if (g_json_errors)
      std::cout << error_json(e).dump() << '\n';
    else
      std::cerr << "error: " << e.what() << '\n';
    return error_exit_code(e);
  }
  return 0;
}
