#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace oscsphere::specfun {

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

// ln n!! with the empty-product conventions 0!! = (-1)!! = 1.
double log_double_factorial(int n);

// A real number kept as mantissa * exp(log_scale) so that quantities far
// outside double range can travel through prefactor algebra safely.
struct ScaledReal {
  double mantissa = 0.0;
  double log_scale = 0.0;
  double value() const;
};

// Jacobi polynomial P_n^{(alpha,beta)}(x) by forward three-term recurrence.
double jacobi_p(int n, double alpha, double beta, double x);

enum class PolyKind { gegenbauer, laguerre, hermite };

// Gegenbauer C_n^param, Laguerre L_n^param or Hermite H_n (param ignored).
double classical_poly(PolyKind kind, int n, double param, double x);

// Condon-Shortley spherical harmonic Y_lm(theta, phi), unit L2 norm on S^2.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

// Terminating hypergeometric series at unit argument,
// sum_k prod_i (a_i)_k / (prod_j (b_j)_k * k!).
//
// In regularized mode every denominator except those listed in
// plain_denominators is folded termwise as 1/Gamma(b_j + k), with the
// convention 1/Gamma(nonpositive integer) = 0; the returned value then
// carries an extra factor prod_folded 1/Gamma(b_j) relative to plain mode.
struct TerminatingSeriesSpec {
  std::vector<double> numerators;    // length 3 or 4
  std::vector<double> denominators;  // length 2 or 3
  bool regularized = false;
  std::vector<std::size_t> plain_denominators{};
};

double hyp_terminating(const TerminatingSeriesSpec& spec);
ScaledReal hyp_terminating_scaled(const TerminatingSeriesSpec& spec);

// sqrt( Gamma(a+b-c+1) Gamma(a-b+c+1) Gamma(b+c-a+1) / Gamma(a+b+c+2) ).
double triangle_delta(double a, double b, double c);
double log_triangle_delta(double a, double b, double c);

// Arguments of the Racah coefficient W(abed; cf). Construction validates
// that every gamma argument appearing in the four triangle prefactors is
// positive; out-of-domain argument sets are rejected with std::domain_error.
struct RacahArguments {
  double a, b, e, d, c, f;
  RacahArguments(double a_, double b_, double e_, double d_, double c_,
                 double f_);
};

// Racah coefficient W(abed; cf) through the terminating 4F3(1) series.
// For (half-)integer momenta equals the 6j symbol {a b c; d e f} up to the
// phase (-1)^{a+b+d+e}.
double racah_w(const RacahArguments& args);

// Clebsch-Gordan coefficient <a alpha, b beta | c gamma>, Condon-Shortley
// convention. Selection-rule violations return 0.
double clebsch_gordan(double a, double alpha, double b, double beta, double c,
                      double gamma);

// Residual of the three-term recurrence in c for the 6j symbol {a b c; d l f}:
// c B_c {c+1} + (c+1) B_{c-1} {c-1} + (2c+1) A_c {c}, scaled by the largest
// contributing coefficient times the largest contributing symbol. Near zero
// for a correct racah_w. Boundary terms whose B coefficient vanishes are
// dropped even when the shifted symbol leaves the triangle domain.
double racah_recurrence_residual(double a, double b, double c, double d,
                                 double l, double f);

struct JacobiElliptic {
  double sn, cn, dn;
};

// sn, cn, dn via the descending Landen transformation (AGM scheme).
JacobiElliptic jacobi_elliptic(double u, double k);

// Complete elliptic integral K(k), modulus convention, via the AGM.
double complete_elliptic_k(double k);

// u in [0, K(k)] with sn(u, k) = x, for x in [0, 1], via Carlson R_F.
double inverse_sn(double x, double k);

struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

// Gauss-Legendre rule with npoints nodes on [a, b].
QuadratureRule gauss_legendre(int npoints, double a, double b);

}  // namespace oscsphere::specfun
