#include "lme/witness.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "lme/errors.hpp"

namespace lme {

namespace {

constexpr double kInitialStep = 0.1;
constexpr double kBacktrack = 0.5;
constexpr double kArmijo = 1e-4;
constexpr int kMaxHalvings = 45;

std::vector<double> deviations(const PureState& psi) {
  const int n = static_cast<int>(psi.dims.size());
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    DensityMatrix rho = reduced_density(psi, i);
    rho.matrix.diagonal().array() -= Complex(1.0 / psi.dims[i], 0.0);
    out[i] = rho.matrix.norm();  // Frobenius
  }
  return out;
}

void check_config(const WitnessConfig& cfg) {
  if (cfg.restarts < 1 || cfg.max_iters < 1 || cfg.step_tolerance <= 0 ||
      cfg.success_tolerance <= 0 || cfg.max_amplitudes < 1)
    raise(Errc::InvalidArgument, "witness config fields must be positive");
}

}  // namespace

double lme_residual(const PureState& psi) {
  double total = 0.0;
  const int n = static_cast<int>(psi.dims.size());
  for (int i = 0; i < n; ++i) {
    DensityMatrix rho = reduced_density(psi, i);
    rho.matrix.diagonal().array() -= Complex(1.0 / psi.dims[i], 0.0);
    total += rho.matrix.squaredNorm();
  }
  return total;
}

std::vector<Complex> residual_gradient(const PureState& psi) {
  const DimVec& dv = psi.dims;
  const int n = static_cast<int>(dv.size());
  const std::size_t total = psi.amp.size();
  std::vector<Complex> grad(total, Complex(0.0, 0.0));

  for (int s = 0; s < n; ++s) {
    DensityMatrix dm = reduced_density(psi, s);
    dm.matrix.diagonal().array() -= Complex(1.0 / dv[s], 0.0);

    const std::size_t ds = static_cast<std::size_t>(dv[s]);
    std::size_t stride = 1;
    for (int j = s + 1; j < n; ++j) stride *= static_cast<std::size_t>(dv[j]);
    const std::size_t block = stride * ds;
    const std::size_t outer = total / block;

    // grad += 4 * (rho_s - I/d_s) applied to slot s of psi.
    for (std::size_t o = 0; o < outer; ++o) {
      const Complex* in = psi.amp.data() + o * block;
      Complex* out = grad.data() + o * block;
      for (std::size_t i = 0; i < stride; ++i) {
        for (std::size_t a = 0; a < ds; ++a) {
          Complex acc(0.0, 0.0);
          for (std::size_t b = 0; b < ds; ++b)
            acc += dm.matrix(a, b) * in[b * stride + i];
          out[a * stride + i] += 4.0 * acc;
        }
      }
    }
  }

  // Project tangent to psi. <psi, grad> is real for this functional, so the
  // complex projection coincides with the real-sphere one.
  Complex ip(0.0, 0.0);
  for (std::size_t i = 0; i < total; ++i) ip += std::conj(psi.amp[i]) * grad[i];
  for (std::size_t i = 0; i < total; ++i) grad[i] -= ip * psi.amp[i];
  return grad;
}

namespace {

// One projected gradient descent from x; returns the residual reached and
// the iterations spent. x is updated in place.
double descend(PureState& x, const WitnessConfig& cfg, std::int64_t& iterations) {
  double f = lme_residual(x);
  PureState cand{x.dims, std::vector<Complex>(x.amp.size())};
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    ++iterations;
    const std::vector<Complex> g = residual_gradient(x);
    double gnorm2 = 0.0;
    for (const Complex& z : g) gnorm2 += std::norm(z);
    if (gnorm2 == 0.0) break;

    // Backtracking line search: step, renormalize, halve on non-decrease.
    double step = kInitialStep;
    double f_cand = f;
    bool accepted = false;
    for (int h = 0; h < kMaxHalvings; ++h) {
      for (std::size_t i = 0; i < x.amp.size(); ++i)
        cand.amp[i] = x.amp[i] - step * g[i];
      cand.normalize();
      f_cand = lme_residual(cand);
      if (f_cand <= f - kArmijo * step * gnorm2) {
        accepted = true;
        break;
      }
      step *= kBacktrack;
    }
    if (!accepted) break;

    const double decrease = f - f_cand;
    std::swap(x.amp, cand.amp);
    f = f_cand;
    if (f <= 0.01 * cfg.success_tolerance) break;  // well below the target
    if (decrease < cfg.step_tolerance) break;
  }
  return f;
}

}  // namespace

WitnessReport search_witness(const DimVec& d, const WitnessConfig& cfg) {
  check_config(cfg);
  if (d.product() > Wide(cfg.max_amplitudes))
    raise(Errc::Overflow, "tensor for " + d.str() + " exceeds the cap of " +
                              std::to_string(cfg.max_amplitudes) + " amplitudes");

  const Classification predicted = classify(d);
  double best_f = std::numeric_limits<double>::infinity();
  std::optional<PureState> best;
  int restarts_used = 0;
  std::int64_t iterations_total = 0;

  for (int k = 0; k < cfg.restarts; ++k) {
    restarts_used = k + 1;
    const std::uint64_t stream =
        splitmix64(cfg.seed + (std::uint64_t(k) + 1) * 0x9E3779B97F4A7C15ull);
    PureState x = random_state(d, stream);
    const double f = descend(x, cfg, iterations_total);
    if (f < best_f) {
      best_f = f;
      best = std::move(x);
    }
    if (best_f <= cfg.success_tolerance) break;
  }

  WitnessReport report{d,
                       predicted,
                       best_f,
                       std::move(*best),
                       {},
                       restarts_used,
                       iterations_total,
                       best_f <= cfg.success_tolerance};
  report.per_subsystem_deviation = deviations(report.best_state);
  return report;
}

VerifyResult verify_witness(const PureState& psi, double tol) {
  VerifyResult res;
  res.deviations = deviations(psi);
  res.ok = true;
  for (double dev : res.deviations)
    if (!(dev <= tol)) res.ok = false;
  return res;
}

}  // namespace lme
