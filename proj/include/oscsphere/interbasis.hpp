#pragma once

#include <vector>

#include <Eigen/Dense>

namespace oscsphere::interbasis {

// One parity-matched expansion block between the spherical and cylindrical
// bases at fixed (N, m). Rows follow l_index, columns follow n3_index; the
// inverse expansion is the transpose.
struct InterbasisBlock {
  int N = 0;
  int m = 0;
  double nu = 0.0;
  std::vector<int> l_index;
  std::vector<int> n3_index;
  Eigen::MatrixXd entries;
};

// Admissible l values: start at |m| or |m|+1 to match the parity of N, step 2.
std::vector<int> l_stride(int N, int m);

// Admissible n3 values: start at 0 or 1 to match the parity of N - |m|, step 2.
std::vector<int> n3_stride(int N, int m);

// Closed-form coefficient via the regularized terminating 4F3 series.
double w_via_4f3(int N, int l, int m, int n3, double nu);

// Same coefficient through the Racah W representation.
double w_via_racah(int N, int l, int m, int n3, double nu);

// Independent route: Gauss-Legendre quadrature of the overlap integral.
// Parity-odd (l - |m| - n3) combinations vanish identically.
double overlap_oracle(int N, int l, int m, int n3, double nu, int nodes);

enum class WMethod { f43, racah, quadrature };

// Assembles the full block. The quadrature method starts at quad_nodes and
// doubles the node count until two successive matrices agree entrywise
// within 1e-11, capped at 1600 nodes.
InterbasisBlock w_block(int N, int m, double nu, WMethod method,
                        int quad_nodes = 200);

enum class WLimitKind { flat_3f2, flat_cg, free_racah };

// Limiting closed forms: flat_3f2 and flat_cg give the nu -> infinity value
// two ways; free_racah gives the nu = 0 value through the Racah table in the
// free-motion quantum numbers.
double w_limit(WLimitKind kind, int N, int l, int m, int n3);

}  // namespace oscsphere::interbasis
