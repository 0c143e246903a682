#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lme/dims.hpp"

namespace lme {

using Complex = std::complex<double>;

/// Amplitude tensor psi in V_1 x ... x V_n, stored flat in row-major
/// multi-index order (the first index varies slowest). Unit norm by
/// convention; random_state and the optimizer keep it normalized.
struct PureState {
  DimVec dims;
  std::vector<Complex> amp;

  double norm() const;
  void normalize();
};

// SplitMix64 finalizer (mix only, no state). Stream k of a multistart search
// seeds mt19937_64 with splitmix64(seed + (k+1) * 0x9E3779B97F4A7C15).
std::uint64_t splitmix64(std::uint64_t x);

/// Haar-uniform state on the unit sphere: iid standard complex Gaussian
/// amplitudes, normalized. Bit-reproducible for a given seed: mt19937_64 is
/// pinned by the standard and the Gaussians come from Box-Muller on 53-bit
/// uniforms (std::normal_distribution is implementation-defined, so unused).
PureState random_state(const DimVec& d, std::uint64_t seed);

struct DensityMatrix {
  int subsystem = 0;  // 0-based slot index
  Eigen::MatrixXcd matrix;
};

/// Reduced density matrix of one slot: contract psi psi^dagger over every
/// other slot. Hermitian by construction; unit trace for unit-norm psi.
DensityMatrix reduced_density(const PureState& psi, int subsystem);

}  // namespace lme
