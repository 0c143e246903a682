#pragma once

#include <cstdint>
#include <vector>

#include "lme/classify.hpp"
#include "lme/state.hpp"

namespace lme {

/// Residual f(psi) = sum_i ||rho_i - I/d_i||_F^2. Nonnegative, and zero
/// exactly on the locally maximally entangled states. For unit-norm psi it
/// equals sum_i (tr rho_i^2 - 1/d_i).
double lme_residual(const PureState& psi);

/// Riemannian gradient of the residual on the unit sphere: the ambient
/// gradient 4 * sum_i (rho_i - I/d_i) applied to slot i of psi, minus its
/// component along psi. <psi, result> = 0.
std::vector<Complex> residual_gradient(const PureState& psi);

struct WitnessConfig {
  int restarts = 100;
  int max_iters = 5000;              // per restart
  double step_tolerance = 1e-14;     // stop a descent once the decrease stalls
  double success_tolerance = 1e-10;  // residual level declared a witness
  std::uint64_t seed = 42;
  std::size_t max_amplitudes = 1'000'000;  // tensor-size cap (desk scale)
};

struct WitnessReport {
  DimVec dims;
  Classification predicted;  // closed-form existence prediction
  double best_residual = 0.0;
  PureState best_state;
  std::vector<double> per_subsystem_deviation;  // ||rho_i - I/d_i||_F
  int restarts_used = 0;
  std::int64_t iterations_total = 0;
  bool succeeded = false;  // best_residual <= success_tolerance
};

/// Multistart projected gradient descent with backtracking line search on
/// the unit sphere (initial step 0.1, halving factor 0.5, Armijo 1e-4).
/// Restart k draws its start from the (seed, k) stream, so results are
/// deterministic given cfg.seed and independent of scheduling. Stops early
/// once a restart reaches success_tolerance. Errors with Overflow when
/// prod(d) exceeds cfg.max_amplitudes.
WitnessReport search_witness(const DimVec& d, const WitnessConfig& cfg = {});

struct VerifyResult {
  bool ok = false;
  std::vector<double> deviations;  // ||rho_i - I/d_i||_F per slot
};

/// True iff every per-slot deviation is <= tol.
VerifyResult verify_witness(const PureState& psi, double tol);

}  // namespace lme
