// spectrum.hpp — the discrete one-photon spectrum on R x S^3.
//
// Levels are labelled by n = 2j + 1 = 1, 2, 3, ... with
//
//   energy      eps_n = sqrt(n^2 - 1) / R      (natural units)
//   degeneracy  g_n   = 2 n^2                  (orbital labels x two spins)
//
// The n = 1 zero mode (j = 0, eps = 0, g = 2) exists but is excluded from
// every statistical sum: its Bose occupation diverges at zero chemical
// potential and the continuum measure vanishes there.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace s3gas {

/// The single geometric parameter: the radius of S^3. hbar = c = k_B = 1.
struct Geometry {
  double radius;

  explicit Geometry(double r);

  /// Volume of the spatial section, 2 pi^2 R^3.
  [[nodiscard]] double volume() const;
};

namespace spectrum {

/// One discrete energy level.
struct ModeLevel {
  int n;                 // level index, n >= 2 in enumerations
  double j;              // angular quantum number, (n - 1) / 2
  double energy;         // sqrt(n^2 - 1) / R
  std::int64_t degeneracy;  // 2 n^2
};

/// eps_n = sqrt(n^2 - 1) / R. Exactly 0 for n = 1. Rejects n < 1.
double mode_energy(int n, const Geometry& geom);

/// g_n = 2 n^2. Rejects n < 1.
std::int64_t degeneracy(int n);

/// All levels with 0 < eps <= energy_cutoff, ascending in energy, starting
/// at n = 2. Empty when energy_cutoff < sqrt(3)/R. Rejects cutoff <= 0.
std::vector<ModeLevel> enumerate_levels(const Geometry& geom,
                                        double energy_cutoff);

/// Sum of 2 n^2 for n = 1..n_max, via the closed form
/// n_max (n_max + 1)(2 n_max + 1) / 3. Includes the zero-mode pair.
/// The count is independent of the geometry; the Geometry argument fixes
/// the K-grid (K = n/R) the count discretizes.
std::int64_t cumulative_state_count(const Geometry& geom, int n_max);

/// Dense square complex matrix, row-major, just large enough for the
/// generator algebra below (dimensions 2j + 1).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim)
      : dim_(dim), data_(dim * dim, {0.0, 0.0}) {}

  [[nodiscard]] std::size_t dim() const { return dim_; }
  std::complex<double>& operator()(std::size_t r, std::size_t c) {
    return data_[r * dim_ + c];
  }
  const std::complex<double>& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix scaled(std::complex<double> factor) const;

  /// Largest entry magnitude.
  [[nodiscard]] double max_abs() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::complex<double>> data_;
};

/// An angular-momentum triple (Jx, Jy, Jz) for quantum number j, realized as
/// dense matrices in the standard |j, m> basis with ladder-operator matrix
/// elements.
struct GeneratorSet {
  double j;
  ComplexMatrix jx;
  ComplexMatrix jy;
  ComplexMatrix jz;

  [[nodiscard]] std::size_t dim() const { return jx.dim(); }
};

/// Builds the spin-j triple. Rejects j that is not a non-negative
/// half-integer.
GeneratorSet build_generators(double j);

/// Max entrywise deviation of [J_a, J_b] - i eps_abc J_c over the three
/// cyclic pairs. Zero (to rounding) for a true angular-momentum triple.
double commutator_residual(const GeneratorSet& gen);

/// Jx^2 + Jy^2 + Jz^2.
ComplexMatrix casimir_matrix(const GeneratorSet& gen);

/// Max entrywise deviation of the Casimir from j(j+1) * identity.
double casimir_residual(const GeneratorSet& gen);

/// so(4) Casimir on the (j, j) representation: 2 (J^2 + S^2) with J^2 = S^2
/// read off from the matrices; equals 4 j (j + 1).
double so4_casimir_value(const GeneratorSet& gen);

}  // namespace spectrum
}  // namespace s3gas
