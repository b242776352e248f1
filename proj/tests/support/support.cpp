#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace testsupport {

namespace {

constexpr double kTwoPi = 6.283185307179586;

double depth_for(std::size_t n) { return std::min(0.5 * static_cast<double>(n) + 1.0, 23.0); }

}  // namespace

Complex random_disk_point(Rng& rng, double depth) {
  const double radius = 1.0 - std::exp(-rng.uniform(0.1, depth));
  return radius * rng.unit();
}

std::vector<Complex> random_separated(Rng& rng, std::size_t n, double min_rho) {
  std::vector<Complex> pts;
  const double depth = depth_for(n);
  for (int attempt = 0; pts.size() < n; ++attempt) {
    if (attempt > 1000000) throw std::runtime_error("random_separated: gave up");
    const Complex c = random_disk_point(rng, depth);
    bool ok = true;
    for (const auto& p : pts) ok = ok && rho(p, c) >= min_rho;
    if (ok) pts.push_back(c);
  }
  return pts;
}

std::vector<Complex> random_carleson(Rng& rng, std::size_t n, double delta) {
  std::vector<Complex> pts;
  const double depth = depth_for(n);
  for (int attempt = 0; pts.size() < n; ++attempt) {
    if (attempt > 1000000) throw std::runtime_error("random_carleson: gave up");
    std::vector<Complex> trial = pts;
    trial.push_back(random_disk_point(rng, depth));
    if (carleson_delta(trial) >= delta) pts = std::move(trial);
  }
  return pts;
}

double rho(Complex a, Complex z) { return std::abs(z - a) / std::abs(1.0 - std::conj(a) * z); }

Complex factor(Complex a, Complex z) {
  if (a == Complex(0.0, 0.0)) return z;
  return (std::abs(a) / -a) * (z - a) / (1.0 - std::conj(a) * z);
}

Complex blaschke(const std::vector<Complex>& zeros, Complex z) {
  Complex p{1.0, 0.0};
  for (const auto& a : zeros) p *= factor(a, z);
  return p;
}

double carleson_product(const std::vector<Complex>& zeros, std::size_t j) {
  double p = 1.0;
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    if (k != j) p *= rho(zeros[j], zeros[k]);
  }
  return p;
}

double carleson_delta(const std::vector<Complex>& zeros) {
  double d = 1.0;
  for (std::size_t j = 0; j < zeros.size(); ++j) d = std::min(d, carleson_product(zeros, j));
  return d;
}

Complex central_difference(const std::function<Complex(Complex)>& f, Complex z, double h) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

Complex derivative_at_zero(const std::vector<Complex>& zeros, std::size_t j) {
  const Complex a = zeros[j];
  // b_j'(a_j) = unit / (1 - |a_j|^2), unit = |a|/-a (1 when a = 0).
  const Complex unit = a == Complex(0.0, 0.0) ? Complex(1.0, 0.0) : std::abs(a) / -a;
  Complex rest{1.0, 0.0};
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    if (k != j) rest *= factor(zeros[k], a);
  }
  return unit / (1.0 - std::norm(a)) * rest;
}

double dyakonov_brute(const std::vector<Complex>& zeros, const std::vector<Complex>& alpha) {
  double best = 0.0;
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    Complex s{0.0, 0.0};
    for (std::size_t j = 0; j < zeros.size(); ++j) {
      s += alpha[j] / (derivative_at_zero(zeros, j) * (1.0 - zeros[j] * std::conj(zeros[k])));
    }
    best = std::max(best, std::abs(s));
  }
  return best;
}

std::vector<Complex> solve_dense(std::vector<std::vector<Complex>> m, std::vector<Complex> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t r = n; r-- > 0;) {
    Complex s = rhs[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= m[r][c] * x[c];
    x[r] = s / m[r][r];
  }
  return x;
}

std::function<Complex(Complex)> kernel_interpolant(const std::vector<Complex>& zeros,
                                                   const std::vector<Complex>& alpha) {
  const std::size_t n = zeros.size();
  auto kern = [](Complex w, Complex z) { return (1.0 - std::norm(w)) / (1.0 - std::conj(w) * z); };
  std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = kern(zeros[c], zeros[r]);
  }
  const std::vector<Complex> coef = solve_dense(std::move(m), alpha);
  return [zeros, coef, kern](Complex z) {
    Complex s{0.0, 0.0};
    for (std::size_t j = 0; j < zeros.size(); ++j) s += coef[j] * kern(zeros[j], z);
    return s;
  };
}

int winding_number(const std::function<Complex(Complex)>& f, Complex w, std::size_t samples) {
  double total = 0.0;
  Complex prev = f(1.0) - w;
  for (std::size_t k = 1; k <= samples; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    const Complex cur = f({std::cos(t), std::sin(t)}) - w;
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

double circle_sup_diff(const std::function<Complex(Complex)>& f,
                       const std::function<Complex(Complex)>& g, std::size_t samples) {
  double best = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    const Complex z{std::cos(t), std::sin(t)};
    best = std::max(best, std::abs(f(z) - g(z)));
  }
  return best;
}

}  // namespace testsupport
