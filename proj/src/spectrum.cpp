#include "s3gas/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "s3gas/numerics.hpp"

namespace s3gas {

Geometry::Geometry(double r) : radius(r) {
  if (!std::isfinite(r) || r <= 0.0) {
    throw std::invalid_argument("Geometry: radius must be positive and finite");
  }
}

double Geometry::volume() const {
  return 2.0 * numerics::kPi * numerics::kPi * radius * radius * radius;
}

namespace spectrum {

double mode_energy(int n, const Geometry& geom) {
  if (n < 1) {
    throw std::invalid_argument("mode_energy: level index n must be >= 1");
  }
  const double n2 = static_cast<double>(static_cast<std::int64_t>(n) * n);
  return std::sqrt(n2 - 1.0) / geom.radius;
}

std::int64_t degeneracy(int n) {
  if (n < 1) {
    throw std::invalid_argument("degeneracy: level index n must be >= 1");
  }
  return 2 * static_cast<std::int64_t>(n) * n;
}

std::vector<ModeLevel> enumerate_levels(const Geometry& geom,
                                        double energy_cutoff) {
  if (!std::isfinite(energy_cutoff) || energy_cutoff <= 0.0) {
    throw std::invalid_argument("enumerate_levels: energy cutoff must be > 0");
  }
  std::vector<ModeLevel> levels;
  for (int n = 2;; ++n) {
    const double eps = mode_energy(n, geom);
    if (eps > energy_cutoff) break;
    levels.push_back({n, 0.5 * (n - 1), eps, degeneracy(n)});
  }
  return levels;
}

std::int64_t cumulative_state_count(const Geometry& geom, int n_max) {
  (void)geom;  // the count is the same on every S^3
  if (n_max < 1) {
    throw std::invalid_argument("cumulative_state_count: n_max must be >= 1");
  }
  if (n_max > 2'000'000) {
    throw std::out_of_range(
        "cumulative_state_count: n_max beyond 2e6 overflows 64-bit counts");
  }
  const std::int64_t n = n_max;
  return n * (n + 1) * (2 * n + 1) / 3;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const std::complex<double> lhs = (*this)(r, k);
      if (lhs == std::complex<double>{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < dim_; ++c) {
        out(r, c) += lhs * other(k, c);
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_ * dim_; ++i) {
    out.data_[i] = data_[i] - other.data_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_ * dim_; ++i) {
    out.data_[i] = data_[i] + other.data_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::scaled(std::complex<double> factor) const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_ * dim_; ++i) {
    out.data_[i] = factor * data_[i];
  }
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

GeneratorSet build_generators(double j) {
  const double two_j = 2.0 * j;
  if (!(j >= 0.0) || std::abs(two_j - std::round(two_j)) > 1e-9) {
    throw std::invalid_argument(
        "build_generators: j must be a non-negative half-integer");
  }
  const std::size_t dim = static_cast<std::size_t>(std::llround(two_j)) + 1;

  // |j, m> basis ordered m = j, j-1, ..., -j. Raising operator:
  // J+ |j, m> = sqrt(j(j+1) - m(m+1)) |j, m+1>.
  ComplexMatrix raise(dim);
  ComplexMatrix jz(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double m = j - static_cast<double>(k);
    jz(k, k) = m;
    if (k > 0) {
      raise(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
  }
  ComplexMatrix lower(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      lower(c, r) = std::conj(raise(r, c));
    }
  }

  GeneratorSet gen;
  gen.j = j;
  gen.jx = (raise + lower).scaled(0.5);
  gen.jy = (raise - lower).scaled(std::complex<double>{0.0, -0.5});
  gen.jz = jz;
  return gen;
}

double commutator_residual(const GeneratorSet& gen) {
  const std::complex<double> i{0.0, 1.0};
  const ComplexMatrix* mats[3] = {&gen.jx, &gen.jy, &gen.jz};
  double worst = 0.0;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    const int c = (a + 2) % 3;
    const ComplexMatrix comm = (*mats[a]) * (*mats[b]) - (*mats[b]) * (*mats[a]);
    worst = std::max(worst, (comm - mats[c]->scaled(i)).max_abs());
  }
  return worst;
}

ComplexMatrix casimir_matrix(const GeneratorSet& gen) {
  return gen.jx * gen.jx + gen.jy * gen.jy + gen.jz * gen.jz;
}

double casimir_residual(const GeneratorSet& gen) {
  ComplexMatrix expected(gen.dim());
  const double eigenvalue = gen.j * (gen.j + 1.0);
  for (std::size_t k = 0; k < gen.dim(); ++k) {
    expected(k, k) = eigenvalue;
  }
  return (casimir_matrix(gen) - expected).max_abs();
}

double so4_casimir_value(const GeneratorSet& gen) {
  // J and S act in separate factors with identical spin; the quadratic
  // invariant is 2(J^2 + S^2) evaluated on the (j, j) representation.
  const ComplexMatrix cas = casimir_matrix(gen);
  if (gen.dim() == 0) return 0.0;
  double trace = 0.0;
  for (std::size_t k = 0; k < gen.dim(); ++k) {
    trace += cas(k, k).real();
  }
  const double j_squared = trace / static_cast<double>(gen.dim());
  return 2.0 * (j_squared + j_squared);
}

}  // namespace spectrum
}  // namespace s3gas
