#include "oscsphere/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace oscsphere::elliptic {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

EllipticParams validated(const EllipticParams& p) {
  if (p.a < -1.0) throw std::domain_error("EllipticParams: a must be >= -1");
  if (!(p.R > 0.0)) throw std::domain_error("EllipticParams: R must be positive");
  return p;
}

TridiagonalOperator from_dense(std::vector<int> index_set, const MatrixXd& m) {
  TridiagonalOperator op;
  op.index_set = std::move(index_set);
  int n = static_cast<int>(op.index_set.size());
  op.diag.resize(n);
  op.offdiag.resize(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) op.diag[i] = m(i, i);
  for (int i = 0; i + 1 < n; ++i)
    op.offdiag[i] = 0.5 * (m(i, i + 1) + m(i + 1, i));
  return op;
}

double closed_b_l(int N, int am, double nu, int l) {
  return std::sqrt((l - am + 1.0) * (l - am + 2.0) * (l + am + 1.0) *
                   (l + am + 2.0) * (N + l + 3.0) * (N - l) *
                   (N + l + 2.0 * nu + 4.0) * (N - l + 2.0 * nu + 1.0)) /
         16.0;
}

double closed_c_l(int N, int am, double nu, int l) {
  return (4.0 * (N + 1.0) * (N + 3.0) + 2.0 * (2.0 * am * am - 1.0) +
          4.0 * nu * (2.0 * N + 2.0 * nu + 5.0) -
          (2.0 * l - 1.0) * (2.0 * l + 3.0) -
          (4.0 * am * am - 1.0) * (2.0 * N + 3.0) *
              (2.0 * N + 5.0 + 4.0 * nu) /
              ((2.0 * l - 1.0) * (2.0 * l + 3.0))) /
         8.0;
}

double closed_b_n3(int N, int am, double nu, int n3) {
  return std::sqrt((n3 + 2.0 * nu + 2.0) * (n3 + 2.0) * (n3 + 1.0) *
                   (n3 + 2.0 * nu + 3.0) * (N + am + n3 + 2.0 * nu + 4.0) *
                   (N + am - n3) * (N - am - n3) *
                   (N - am + n3 + 2.0 * nu + 4.0) /
                   ((n3 + nu + 1.0) * (n3 + nu + 2.0) * (n3 + nu + 2.0) *
                    (n3 + nu + 3.0))) /
         4.0;
}

double closed_c_n3(int N, int am, double nu, int n3) {
  // The n3 = 0 branch is the pole-cancelled form of the general expression.
  double tail =
      (n3 == 0)
          ? (nu + 1.0) * (N + am + nu + 2.0) * (N - am + nu + 2.0) / (nu + 2.0)
          : nu * (nu + 1.0) * (N + am + nu + 2.0) * (N - am + nu + 2.0) /
                ((n3 + nu) * (n3 + nu + 2.0));
  return ((N + 2.0) * (N + 2.0) + nu * (2.0 * N + 2.0 * nu + 5.0) +
          (am * am - 2.0) - (n3 + nu) * (n3 + nu + 2.0) - tail) /
         2.0;
}

// Implicit-shift QL for a symmetric tridiagonal matrix, rotating the
// eigenvector matrix z along. d holds the diagonal, e the subdiagonal with
// e[n-1] as scratch.
void tqli(VectorXd& d, VectorXd& e, MatrixXd& z) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 64)
          throw std::runtime_error("tqli: eigenvalue iteration stalled");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void fix_sign(VectorXd& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0.0) v = -v;
      return;
    }
  }
}

std::vector<EllipticSolution> solve_operator(const TridiagonalOperator& op,
                                             bool fill_t) {
  const int n = static_cast<int>(op.index_set.size());
  VectorXd d = op.diag;
  VectorXd e(n);
  e.setZero();
  e.head(std::max(n - 1, 0)) = op.offdiag;
  MatrixXd z = MatrixXd::Identity(n, n);
  if (n > 1) tqli(d, e, z);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&d](int i, int j) { return d[i] < d[j]; });
  std::vector<EllipticSolution> out(n);
  for (int q = 0; q < n; ++q) {
    out[q].q = q;
    out[q].lambda_q = d[order[q]];
    VectorXd v = z.col(order[q]);
    v.normalize();
    fix_sign(v);
    (fill_t ? out[q].T : out[q].U) = v;
  }
  return out;
}

}  // namespace

EllipticParams::EllipticParams(double a_, double R_) : a(a_), R(R_) {
  validated(*this);
  k = (a >= 0.0) ? std::sqrt(a / (1.0 + a)) : std::sqrt(-a);
}

TridiagonalOperator d33_block(int N, int m, double nu, MatrixMethod method) {
  auto ls = interbasis::l_stride(N, m);
  const int am = std::abs(m);
  if (method == MatrixMethod::closed) {
    TridiagonalOperator op;
    op.index_set = ls;
    op.diag.resize(ls.size());
    op.offdiag.resize(std::max<int>(static_cast<int>(ls.size()) - 1, 0));
    for (std::size_t i = 0; i < ls.size(); ++i) {
      op.diag[i] = closed_c_l(N, am, nu, ls[i]);
      // The printed off-diagonal prefactors differ between the two coupled
      // rows; the symmetric coefficient below is their geometric mean and
      // reproduces the congruence oracle.
      if (i + 1 < ls.size()) {
        int l = ls[i];
        op.offdiag[i] = -16.0 * closed_b_l(N, am, nu, l) /
                        std::sqrt((2.0 * l + 1.0) * (2.0 * l + 3.0) *
                                  (2.0 * l + 3.0) * (2.0 * l + 5.0));
      }
    }
    return op;
  }
  interbasis::InterbasisBlock w =
      interbasis::w_block(N, m, nu, interbasis::WMethod::f43);
  VectorXd boost(w.n3_index.size());
  for (std::size_t j = 0; j < w.n3_index.size(); ++j) {
    double v = w.n3_index[j] + nu + 1.0;
    boost[j] = v * v;
  }
  MatrixXd dense = w.entries * boost.asDiagonal() * w.entries.transpose();
  return from_dense(ls, dense);
}

TridiagonalOperator l2_block(int N, int m, double nu, MatrixMethod method) {
  auto n3s = interbasis::n3_stride(N, m);
  const int am = std::abs(m);
  if (method == MatrixMethod::closed) {
    TridiagonalOperator op;
    op.index_set = n3s;
    op.diag.resize(n3s.size());
    op.offdiag.resize(std::max<int>(static_cast<int>(n3s.size()) - 1, 0));
    for (std::size_t i = 0; i < n3s.size(); ++i) {
      op.diag[i] = closed_c_n3(N, am, nu, n3s[i]);
      if (i + 1 < n3s.size()) op.offdiag[i] = closed_b_n3(N, am, nu, n3s[i]);
    }
    return op;
  }
  interbasis::InterbasisBlock w =
      interbasis::w_block(N, m, nu, interbasis::WMethod::f43);
  VectorXd angular(w.l_index.size());
  for (std::size_t i = 0; i < w.l_index.size(); ++i)
    angular[i] = static_cast<double>(w.l_index[i]) * (w.l_index[i] + 1.0);
  MatrixXd dense = w.entries.transpose() * angular.asDiagonal() * w.entries;
  return from_dense(n3s, dense);
}

TridiagonalOperator spherical_form_operator(int N, int m, double nu,
                                            const EllipticParams& params) {
  validated(params);
  TridiagonalOperator op = d33_block(N, m, nu, MatrixMethod::oracle);
  double scale = -params.a * params.R * params.R;
  op.diag *= scale;
  op.offdiag *= scale;
  for (std::size_t i = 0; i < op.index_set.size(); ++i)
    op.diag[i] += static_cast<double>(op.index_set[i]) * (op.index_set[i] + 1.0);
  return op;
}

TridiagonalOperator cylindrical_form_operator(int N, int m, double nu,
                                              const EllipticParams& params) {
  validated(params);
  TridiagonalOperator op = l2_block(N, m, nu, MatrixMethod::oracle);
  double scale = params.a * params.R * params.R;
  for (std::size_t i = 0; i < op.index_set.size(); ++i) {
    double v = op.index_set[i] + nu + 1.0;
    op.diag[i] -= scale * v * v;
  }
  return op;
}

double recurrence_residual(const TridiagonalOperator& op, double lambda,
                           const Eigen::VectorXd& v) {
  const int n = static_cast<int>(op.index_set.size());
  if (v.size() != n)
    throw std::invalid_argument("recurrence_residual: vector length mismatch");
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = op.diag[i] * v[i] - lambda * v[i];
    double scale = std::max(std::abs(op.diag[i] * v[i]),
                            std::abs(lambda * v[i]));
    if (i > 0) {
      row += op.offdiag[i - 1] * v[i - 1];
      scale = std::max(scale, std::abs(op.offdiag[i - 1] * v[i - 1]));
    }
    if (i + 1 < n) {
      row += op.offdiag[i] * v[i + 1];
      scale = std::max(scale, std::abs(op.offdiag[i] * v[i + 1]));
    }
    if (scale > 0.0) worst = std::max(worst, std::abs(row) / scale);
  }
  return worst;
}

std::vector<EllipticSolution> solve_spherical_form(
    int N, int m, double nu, const EllipticParams& params) {
  validated(params);
  if (params.a == 0.0) {
    auto ls = interbasis::l_stride(N, m);
    std::vector<EllipticSolution> out(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i) {
      out[i].q = static_cast<int>(i);
      out[i].lambda_q = static_cast<double>(ls[i]) * (ls[i] + 1.0);
      out[i].T = VectorXd::Unit(ls.size(), i);
    }
    return out;
  }
  return solve_operator(spherical_form_operator(N, m, nu, params), true);
}

std::vector<EllipticSolution> solve_cylindrical_form(
    int N, int m, double nu, const EllipticParams& params) {
  validated(params);
  return solve_operator(cylindrical_form_operator(N, m, nu, params), false);
}

std::vector<EllipticSolution> match_solutions(
    const std::vector<EllipticSolution>& sph,
    const std::vector<EllipticSolution>& cyl,
    const interbasis::InterbasisBlock& w) {
  const int n = static_cast<int>(sph.size());
  if (static_cast<int>(cyl.size()) != n ||
      w.entries.rows() != n || w.entries.cols() != n)
    throw std::invalid_argument("match_solutions: size mismatch");

  double scale = 1.0;
  for (const auto& s : sph) scale = std::max(scale, std::abs(s.lambda_q));
  const double pair_tol = 1e-8 * scale;
  const double coeff_tol = 1e-8;

  std::vector<EllipticSolution> out(n);
  int i = 0;
  while (i < n) {
    // Degenerate eigenvalues arrive as a contiguous cluster in sorted order.
    int j = i + 1;
    while (j < n && std::abs(sph[j].lambda_q - sph[i].lambda_q) <= pair_tol) ++j;
    MatrixXd u_basis(n, j - i);
    for (int c = i; c < j; ++c) {
      if (std::abs(cyl[c].lambda_q - sph[c].lambda_q) > pair_tol)
        throw std::runtime_error("match_solutions: eigenvalue sets disagree");
      u_basis.col(c - i) = cyl[c].U;
    }
    for (int c = i; c < j; ++c) {
      VectorXd target = w.entries.transpose() * sph[c].T;
      VectorXd projected = u_basis * (u_basis.transpose() * target);
      if ((projected - target).cwiseAbs().maxCoeff() > coeff_tol)
        throw std::runtime_error(
            "match_solutions: cylindrical coefficients do not match W^T T");
      out[c].q = c;
      out[c].lambda_q = sph[c].lambda_q;
      out[c].T = sph[c].T;
      out[c].U = target;
    }
    i = j;
  }
  return out;
}

std::complex<double> elliptic_wavefunction(const EllipticSolution& sol, int N,
                                           int m,
                                           const bases::OscillatorParams& params,
                                           const bases::SpherePoint& point) {
  auto ls = interbasis::l_stride(N, m);
  auto n3s = interbasis::n3_stride(N, m);
  if (sol.T.size() != static_cast<int>(ls.size()) ||
      sol.U.size() != static_cast<int>(n3s.size()))
    throw std::invalid_argument("elliptic_wavefunction: solution not matched");
  std::complex<double> t_form(0.0, 0.0), u_form(0.0, 0.0);
  for (std::size_t i = 0; i < ls.size(); ++i)
    t_form += sol.T[i] *
              bases::wavefunction(bases::SphericalQN(N, ls[i], m), params, point);
  for (std::size_t j = 0; j < n3s.size(); ++j)
    u_form += sol.U[j] * bases::wavefunction(bases::CylindricalQN(N, m, n3s[j]),
                                             params, point);
  double gap = std::abs(t_form - u_form);
  double mag = std::max({1.0, std::abs(t_form), std::abs(u_form)});
  if (gap > 1e-8 * mag)
    throw std::runtime_error(
        "elliptic_wavefunction: spherical and cylindrical forms disagree");
  return 0.5 * (t_form + u_form);
}

}  // namespace oscsphere::elliptic
