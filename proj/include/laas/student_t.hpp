#pragma once

namespace laas {

// Regularized incomplete beta function I_x(a, b), a, b > 0, x in [0, 1].
// Continued fraction (modified Lentz) with the symmetry split at
// x = (a+1)/(a+b+2).
double regularized_incomplete_beta(double x, double a, double b);

// CDF of the Student-t distribution with df > 0 degrees of freedom.
double student_t_cdf(double t, double df);

// Two-sided p-value: I_{df/(df+t^2)}(df/2, 1/2).
double student_t_two_sided_p(double t, double df);

}  // namespace laas
