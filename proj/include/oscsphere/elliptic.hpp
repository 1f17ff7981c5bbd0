#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "oscsphere/bases.hpp"
#include "oscsphere/interbasis.hpp"

namespace oscsphere::elliptic {

// Mixing parameter a of the operator L^2 - a R^2 D33. Nonnegative a is the
// oblate family with k^2 = a / (1 + a); a in [-1, 0) is prolate with
// k^2 = -a.
struct EllipticParams {
  double a = 0.0;
  double k = 0.0;
  double R = 1.0;
  EllipticParams(double a_, double R_);
};

// Symmetric tridiagonal operator over a parity stride; offdiag[i] couples
// index_set[i] to index_set[i+1].
struct TridiagonalOperator {
  std::vector<int> index_set;
  Eigen::VectorXd diag;
  Eigen::VectorXd offdiag;
};

struct EllipticSolution {
  int q = 0;
  double lambda_q = 0.0;
  Eigen::VectorXd T;
  Eigen::VectorXd U;
};

enum class MatrixMethod { oracle, closed };

// D33 over the l-stride: oracle contracts the interbasis block against
// diag((n3+nu+1)^2); closed evaluates the printed recurrence coefficients
// (off-diagonals symmetrized, see the implementation note).
TridiagonalOperator d33_block(int N, int m, double nu, MatrixMethod method);

// L^2 over the n3-stride: oracle contracts against diag(l(l+1)); closed uses
// the printed coefficient forms.
TridiagonalOperator l2_block(int N, int m, double nu, MatrixMethod method);

// diag(l(l+1)) - a R^2 D33 and L^2 - a R^2 diag((n3+nu+1)^2), the two
// tridiagonal representations of the same operator (oracle matrices).
TridiagonalOperator spherical_form_operator(int N, int m, double nu,
                                            const EllipticParams& params);
TridiagonalOperator cylindrical_form_operator(int N, int m, double nu,
                                              const EllipticParams& params);

// Rowwise residual of op v = lambda v, scaled by the largest row term.
double recurrence_residual(const TridiagonalOperator& op, double lambda,
                           const Eigen::VectorXd& v);

// Eigenpairs sorted by ascending lambda; T filled, U empty. a = 0 is the
// exact diagonal case and bypasses the solver.
std::vector<EllipticSolution> solve_spherical_form(int N, int m, double nu,
                                                   const EllipticParams& params);

// Eigenpairs over the n3-stride; U filled, T empty.
std::vector<EllipticSolution> solve_cylindrical_form(
    int N, int m, double nu, const EllipticParams& params);

// Pairs the two solution lists by eigenvalue and enforces U = W^T T within
// 1e-8 (degenerate clusters handled by subspace projection). Throws on
// unmatched eigenvalues or coefficient disagreement.
std::vector<EllipticSolution> match_solutions(
    const std::vector<EllipticSolution>& sph,
    const std::vector<EllipticSolution>& cyl,
    const interbasis::InterbasisBlock& w);

// Evaluates the elliptic state both as sum_l T_l Psi_spherical and as
// sum_n3 U_n3 Psi_cylindrical; returns the common value, throwing if the two
// forms disagree beyond 1e-8.
std::complex<double> elliptic_wavefunction(const EllipticSolution& sol, int N,
                                           int m,
                                           const bases::OscillatorParams& params,
                                           const bases::SpherePoint& point);

}  // namespace oscsphere::elliptic
