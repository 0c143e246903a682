#include "lme/state.hpp"

#include <cmath>
#include <cstddef>
#include <random>

#include "lme/errors.hpp"

namespace lme {

double PureState::norm() const {
  double s = 0.0;
  for (const Complex& z : amp) s += std::norm(z);
  return std::sqrt(s);
}

void PureState::normalize() {
  const double n = norm();
  for (Complex& z : amp) z /= n;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

namespace {

std::size_t tensor_size(const DimVec& d) {
  const Wide p = d.product();
  if (p > Wide(1) << 62)
    raise(Errc::Overflow, "amplitude tensor for " + d.str() + " is not addressable");
  return static_cast<std::size_t>(p);
}

// Uniform in (0, 1], 53-bit resolution.
double canonical(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

PureState random_state(const DimVec& d, std::uint64_t seed) {
  static constexpr double kTwoPi = 6.283185307179586476925286766559;
  const std::size_t n = tensor_size(d);
  std::mt19937_64 rng(seed);
  PureState psi{d, std::vector<Complex>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double u1 = canonical(rng);
    const double u2 = canonical(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    psi.amp[i] = Complex(r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2));
  }
  psi.normalize();
  return psi;
}

DensityMatrix reduced_density(const PureState& psi, int subsystem) {
  const DimVec& dv = psi.dims;
  const int n = static_cast<int>(dv.size());
  if (subsystem < 0 || subsystem >= n)
    raise(Errc::IndexOutOfRange,
          "subsystem " + std::to_string(subsystem) + " outside [0, " +
              std::to_string(n - 1) + "]");

  const std::size_t ds = static_cast<std::size_t>(dv[subsystem]);
  std::size_t stride = 1;
  for (int j = subsystem + 1; j < n; ++j) stride *= static_cast<std::size_t>(dv[j]);
  const std::size_t block = stride * ds;
  const std::size_t outer = psi.amp.size() / block;

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(ds, ds);
  for (std::size_t o = 0; o < outer; ++o) {
    const Complex* base = psi.amp.data() + o * block;
    for (std::size_t a = 0; a < ds; ++a) {
      const Complex* pa = base + a * stride;
      for (std::size_t b = 0; b <= a; ++b) {
        const Complex* pb = base + b * stride;
        Complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < stride; ++i) acc += pa[i] * std::conj(pb[i]);
        rho(a, b) += acc;
      }
    }
  }
  // Mirror the strict lower triangle; the diagonal is exactly real already.
  for (std::size_t a = 0; a < ds; ++a)
    for (std::size_t b = a + 1; b < ds; ++b) rho(a, b) = std::conj(rho(b, a));
  return DensityMatrix{subsystem, std::move(rho)};
}

}  // namespace lme
