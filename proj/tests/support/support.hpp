#pragma once

// Random instance generators and independent oracles for the test suites.
// The oracles use plain std::complex arithmetic on the defining formulas and
// never call into the library under test.

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace testsupport {

using Complex = std::complex<double>;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Complex unit() {
    const double t = uniform(0.0, 6.283185307179586);
    return {std::cos(t), std::sin(t)};
  }
  Complex target() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }
  std::vector<Complex> targets(std::size_t n) {
    std::vector<Complex> out(n);
    for (auto& v : out) v = target();
    return out;
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// A point with 1 - |z| = exp(-U(0.1, depth)) and uniform argument.
Complex random_disk_point(Rng& rng, double depth);

/// n points with pairwise rho >= min_rho, grown greedily by rejection.
std::vector<Complex> random_separated(Rng& rng, std::size_t n, double min_rho);

/// n points whose Carleson constant (min over j of prod_{k != j} rho) is at
/// least delta, grown greedily by rejection.
std::vector<Complex> random_carleson(Rng& rng, std::size_t n, double delta);

double rho(Complex a, Complex z);
Complex factor(Complex a, Complex z);
Complex blaschke(const std::vector<Complex>& zeros, Complex z);

/// prod_{k != j} rho(a_j, a_k)
double carleson_product(const std::vector<Complex>& zeros, std::size_t j);
double carleson_delta(const std::vector<Complex>& zeros);

/// Central difference (f(z + h) - f(z - h)) / 2h along the real axis.
Complex central_difference(const std::function<Complex(Complex)>& f, Complex z, double h);

/// B'(a_j) from the product rule on the naive factors.
Complex derivative_at_zero(const std::vector<Complex>& zeros, std::size_t j);

/// sup_k |sum_j alpha_j / (B'(a_j) (1 - a_j conj(a_k)))| by direct summation.
double dyakonov_brute(const std::vector<Complex>& zeros, const std::vector<Complex>& alpha);

/// Gaussian elimination with partial pivoting on a dense complex system.
std::vector<Complex> solve_dense(std::vector<std::vector<Complex>> m, std::vector<Complex> rhs);

/// The interpolant in K_B written as sum_j c_j (1 - |a_j|^2) / (1 - conj(a_j) z),
/// with c from solve_dense on the kernel matrix.
std::function<Complex(Complex)> kernel_interpolant(const std::vector<Complex>& zeros,
                                                   const std::vector<Complex>& alpha);

/// Winding number of f around w along the unit circle, by accumulating the
/// argument increments over `samples` equispaced points.
int winding_number(const std::function<Complex(Complex)>& f, Complex w, std::size_t samples);

/// sup over `samples` equispaced circle points of |f - g|.
double circle_sup_diff(const std::function<Complex(Complex)>& f,
                       const std::function<Complex(Complex)>& g, std::size_t samples);

}  // namespace testsupport
