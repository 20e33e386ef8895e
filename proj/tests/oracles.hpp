#pragma once

// Brute-force reference implementations, written directly from the
// definitions and kept independent of the library code paths they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace oracles {

// Two-sample KS: scan every pooled distinct value, compare ECDFs.
inline double ks_brute(std::vector<double> a, std::vector<double> b) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::sort(pooled.begin(), pooled.end());
  pooled.erase(std::unique(pooled.begin(), pooled.end()), pooled.end());

  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  for (double v : pooled) {
    std::size_t ca = 0;
    for (double x : a) {
      if (x <= v) ++ca;
    }
    std::size_t cb = 0;
    for (double x : b) {
      if (x <= v) ++cb;
    }
    d = std::max(d, std::abs(static_cast<double>(ca) / na - static_cast<double>(cb) / nb));
  }
  return d;
}

inline bool within_cheb(const std::vector<double>& x, std::size_t i, std::size_t j, int m,
                        double r) {
  for (int k = 0; k < m; ++k) {
    if (std::abs(x[i + static_cast<std::size_t>(k)] - x[j + static_cast<std::size_t>(k)]) > r) {
      return false;
    }
  }
  return true;
}

// Sample entropy per Richman & Moorman: both template lengths range over the
// first N-m start positions; ordered pairs, self-matches excluded.
inline std::optional<double> sampen_brute(const std::vector<double>& x, int m, double r) {
  const std::size_t n = x.size();
  const std::size_t starts = n - static_cast<std::size_t>(m);
  long long b_count = 0;
  long long a_count = 0;
  for (std::size_t i = 0; i < starts; ++i) {
    for (std::size_t j = 0; j < starts; ++j) {
      if (i == j) continue;
      if (within_cheb(x, i, j, m, r)) ++b_count;
      if (within_cheb(x, i, j, m + 1, r)) ++a_count;
    }
  }
  if (a_count == 0 || b_count == 0) return std::nullopt;
  return -std::log(static_cast<double>(a_count) / static_cast<double>(b_count));
}

// Approximate entropy per Pincus, self-matches included.
inline double apen_brute(const std::vector<double>& x, int m, double r) {
  const auto phi = [&](int mm) {
    const std::size_t count = x.size() - static_cast<std::size_t>(mm) + 1;
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t matches = 0;
      for (std::size_t j = 0; j < count; ++j) {
        if (within_cheb(x, i, j, mm, r)) ++matches;
      }
      acc += std::log(static_cast<double>(matches) / static_cast<double>(count));
    }
    return acc / static_cast<double>(count);
  };
  return phi(m) - phi(m + 1);
}

inline double t_pdf(double x, double df) {
  const double c = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                   0.5 * std::log(df * 3.14159265358979323846);
  return std::exp(c - 0.5 * (df + 1.0) * std::log1p(x * x / df));
}

inline double simpson(double (*f)(double, double), double df, double a, double b, int steps) {
  const double h = (b - a) / steps;
  double acc = f(a, df) + f(b, df);
  for (int i = 1; i < steps; ++i) {
    acc += f(a + i * h, df) * ((i % 2) ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

// Two-sided p by integrating the density over [-|t|, |t|] and subtracting
// from 1; fixed fine grid, accurate far below 1e-6.
inline double t_two_sided_p_quadrature(double t, double df) {
  const double a = std::abs(t);
  if (a == 0.0) return 1.0;
  return 1.0 - simpson(&t_pdf, df, -a, a, 20000);
}

}  // namespace oracles
