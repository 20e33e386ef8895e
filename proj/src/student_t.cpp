#include "laas/student_t.hpp"

#include <cmath>

#include "laas/errors.hpp"

namespace laas {

namespace {

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for the incomplete beta, evaluated with the modified
// Lentz algorithm. Converges quickly for x < (a+1)/(a+b+2).
double incomplete_beta_cf(double x, double a, double b) {
  constexpr double tiny = 1e-30;
  constexpr double eps = 1e-15;
  constexpr int max_iterations = 300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;

  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;

  for (int m = 1; m <= max_iterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;

    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) {
      return h;
    }
  }
  throw Error("incomplete beta continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw InvalidParameter("incomplete beta needs a > 0 and b > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidParameter("incomplete beta needs x in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double front =
      std::exp(a * std::log(x) + b * std::log(1.0 - x) - log_beta(a, b));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * incomplete_beta_cf(x, a, b) / a;
  }
  return 1.0 - front * incomplete_beta_cf(1.0 - x, b, a) / b;
}

double student_t_cdf(double t, double df) {
  if (!(df > 0.0)) {
    throw InvalidParameter("Student-t needs df > 0");
  }
  const double x = df / (df + t * t);
  const double tail = 0.5 * regularized_incomplete_beta(x, 0.5 * df, 0.5);
  return t >= 0.0 ? 1.0 - tail : tail;
}

double student_t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) {
    throw InvalidParameter("Student-t needs df > 0");
  }
  return regularized_incomplete_beta(df / (df + t * t), 0.5 * df, 0.5);
}

}  // namespace laas
