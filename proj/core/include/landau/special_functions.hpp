#ifndef LANDAU_SPECIAL_FUNCTIONS_HPP
#define LANDAU_SPECIAL_FUNCTIONS_HPP

#include <vector>

namespace landau::sf {

/// Rising factorial (a)_n.
double pochhammer(double a, int n);

/// Reciprocal gamma, returning exactly 0 at non-positive integer arguments.
double reciprocal_gamma(double x);

/// Terminating Gauss series F(-l, b; c; x) = sum_{n<=l} (-l)_n (b)_n x^n / (n! (c)_n).
/// Throws when the sum runs through a zero of (c)_n; use the regularized form
/// for non-positive integer c.
double hyp2f1_terminating(int l, double b, double c, double x);

/// Regularized form sum_{n<=l} (-l)_n (b)_n x^n / (n! Gamma(c+n)); finite for
/// every real c, and identically F/Gamma(c) when c is not a non-positive integer.
double hyp2f1_terminating_regularized(int l, double b, double c, double x);

/// Terminating Kummer series M(-l; c; x) and its regularized companion.
double hyp1f1_terminating(int l, double c, double x);
double hyp1f1_terminating_regularized(int l, double c, double x);

/// Polynomial coefficients a_n of the regularized terminating series
/// sum a_n x^n (n = 0..l).  `confluent` drops the (b)_n factor.
std::vector<double> hyp_coefficients(int l, double b, double c, bool confluent);

/// Evaluates sum a_n x^n together with its first two derivatives in x.
struct PolyEval {
    double f{}, dx{}, ddx{};
};
PolyEval poly_eval(const std::vector<double>& coeff, double x);

/// Generalized Laguerre polynomial L_l^(alpha)(x) by the three-term
/// recurrence; valid for any real alpha, including negative integers.
double laguerre(int l, double alpha, double x);

/// Jacobi polynomial P_l^(a,b)(x) by recurrence (delegates to Boost.Math).
double jacobi(int l, double a, double b, double x);

}  // namespace landau::sf

#endif
