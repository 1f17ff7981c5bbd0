#include "oscsphere/interbasis.hpp"

#include <cmath>
#include <stdexcept>

#include "oscsphere/bases.hpp"
#include "oscsphere/specfun.hpp"

namespace oscsphere::interbasis {

namespace {

int parity_sign(int twice) { return (twice % 2 == 0) ? 1 : -1; }

void validate_pair(int N, int l, int m, int n3, double nu) {
  bases::SphericalQN sph(N, l, m);
  bases::CylindricalQN cyl(N, m, n3);
  (void)sph;
  (void)cyl;
  if (nu < 0.0) throw std::domain_error("interbasis: nu must be nonnegative");
}

}  // namespace

std::vector<int> l_stride(int N, int m) {
  int am = std::abs(m);
  if (am > N) throw std::invalid_argument("l_stride: |m| must not exceed N");
  int l0 = ((N - am) % 2 == 0) ? am : am + 1;
  std::vector<int> ls;
  for (int l = l0; l <= N; l += 2) ls.push_back(l);
  return ls;
}

std::vector<int> n3_stride(int N, int m) {
  int am = std::abs(m);
  if (am > N) throw std::invalid_argument("n3_stride: |m| must not exceed N");
  int n0 = ((N - am) % 2 == 0) ? 0 : 1;
  std::vector<int> ns;
  for (int n3 = n0; n3 <= N - am; n3 += 2) ns.push_back(n3);
  return ns;
}

double w_via_4f3(int N, int l, int m, int n3, double nu) {
  validate_pair(N, l, m, n3, nu);
  const int am = std::abs(m);
  specfun::TerminatingSeriesSpec series;
  series.numerators = {-0.5 * n3, -0.5 * (n3 - 1.0), -0.5 * (N - l),
                       0.5 * (N + l) + nu + 2.0};
  series.denominators = {nu + 1.5, 0.5 * (l + am - n3) + 1.0,
                         0.5 * (l - am - n3) + 1.0};
  series.regularized = true;
  specfun::ScaledReal s = specfun::hyp_terminating_scaled(series);

  double log_inner =
      std::lgamma(0.5 * (N + l) + nu + 2.0) +
      std::lgamma(0.5 * (N - l + 3.0) + nu) +
      std::lgamma(n3 + 2.0 * nu + 2.0) +
      std::lgamma(0.5 * (N - am - n3) + 1.0) +
      std::lgamma(0.5 * (N + am - n3) + 1.0) -
      std::lgamma(0.5 * (N + l + 3.0)) - std::lgamma(0.5 * (N - l) + 1.0) -
      std::lgamma(0.5 * (N - am + n3) + nu + 2.0) -
      std::lgamma(0.5 * (N + am + n3) + nu + 2.0) - std::lgamma(n3 + 1.0);
  double log_pref =
      0.5 * std::log(M_PI) - (l + nu + 1.0) * std::log(2.0) +
      0.5 * (std::log(2.0 * l + 1.0) + std::log(n3 + nu + 1.0) +
             std::lgamma(l + am + 1.0) + std::lgamma(l - am + 1.0) +
             log_inner);
  int phase = parity_sign((m + am) / 2);
  return phase * s.mantissa * std::exp(s.log_scale + log_pref);
}

double w_via_racah(int N, int l, int m, int n3, double nu) {
  validate_pair(N, l, m, n3, nu);
  const int am = std::abs(m);
  specfun::RacahArguments args(
      0.25 * (N + am), 0.25 * (N - am - 1.0), 0.25 * (N + am) + 0.5 * nu,
      0.25 * (N - am) + 0.5 * nu + 0.25, 0.25 * (2.0 * l - 1.0),
      0.5 * n3 + 0.5 * nu);
  int phase = parity_sign((N - l) / 2 + (m + am) / 2);
  return phase * std::sqrt((l + 0.5) * (n3 + nu + 1.0)) *
         specfun::racah_w(args);
}

double overlap_oracle(int N, int l, int m, int n3, double nu, int nodes) {
  if (nodes < 64) throw std::invalid_argument("overlap_oracle: need nodes >= 64");
  const int am = std::abs(m);
  bases::SphericalQN sph(N, l, m);
  (void)sph;
  if (n3 < 0 || n3 > N - am)
    throw std::invalid_argument("overlap_oracle: n3 out of range");
  if ((l - am - n3) % 2 != 0) return 0.0;
  if (nu < 0.0) throw std::domain_error("overlap_oracle: nu must be nonnegative");

  const int nr = (N - l) / 2;
  // Even integrand: integrate the half interval and double.
  specfun::QuadratureRule rule = specfun::gauss_legendre(nodes, 0.0, M_PI_2);
  double integral = 0.0;
  for (int i = 0; i < nodes; ++i) {
    double p2 = rule.nodes[i];
    double s = std::sin(p2), c = std::cos(p2);
    double value = std::pow(s, l - am) *
                   std::exp((2.0 * nu + 2.0) * std::log(c)) *
                   specfun::jacobi_p(nr, l + 0.5, nu + 0.5, std::cos(2.0 * p2)) *
                   specfun::jacobi_p(n3, nu + 0.5, nu + 0.5, s);
    integral += rule.weights[i] * value;
  }
  integral *= 2.0;

  double log_pref =
      -(am + nu + 1.0) * std::log(2.0) - std::lgamma(n3 + nu + 1.5) +
      0.5 * (std::log(2.0 * l + 1.0) + std::log(n3 + nu + 1.0) +
             std::lgamma(l + am + 1.0) +
             std::lgamma(0.5 * (N - am - n3) + 1.0) -
             std::lgamma(l - am + 1.0) -
             std::lgamma(0.5 * (N + am - n3) + 1.0) + std::lgamma(n3 + 1.0) +
             std::lgamma(0.5 * (N - l) + 1.0) -
             std::lgamma(0.5 * (N + l) + 1.5) +
             std::lgamma(0.5 * (N - am + n3) + nu + 2.0) +
             std::lgamma(0.5 * (N + l) + nu + 2.0) +
             std::lgamma(n3 + 2.0 * nu + 2.0) -
             std::lgamma(0.5 * (N + am + n3) + nu + 2.0) -
             std::lgamma(0.5 * (N - l) + nu + 1.5));
  int phase = parity_sign((m + am) / 2);
  return phase * std::exp(log_pref) * integral;
}

namespace {

Eigen::MatrixXd assemble_quadrature(int N, int m, double nu,
                                    const std::vector<int>& ls,
                                    const std::vector<int>& n3s, int nodes) {
  Eigen::MatrixXd w(ls.size(), n3s.size());
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = 0; j < n3s.size(); ++j)
      w(i, j) = overlap_oracle(N, ls[i], m, n3s[j], nu, nodes);
  return w;
}

}  // namespace

InterbasisBlock w_block(int N, int m, double nu, WMethod method,
                        int quad_nodes) {
  InterbasisBlock block;
  block.N = N;
  block.m = m;
  block.nu = nu;
  block.l_index = l_stride(N, m);
  block.n3_index = n3_stride(N, m);
  const auto& ls = block.l_index;
  const auto& n3s = block.n3_index;
  if (method == WMethod::quadrature) {
    int nodes = std::max(quad_nodes, 64);
    Eigen::MatrixXd prev = assemble_quadrature(N, m, nu, ls, n3s, nodes);
    while (nodes < 1600) {
      nodes = std::min(2 * nodes, 1600);
      Eigen::MatrixXd cur = assemble_quadrature(N, m, nu, ls, n3s, nodes);
      bool settled = (cur - prev).cwiseAbs().maxCoeff() < 1e-11;
      prev = cur;
      if (settled) break;
    }
    block.entries = prev;
    return block;
  }
  block.entries.resize(ls.size(), n3s.size());
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = 0; j < n3s.size(); ++j)
      block.entries(i, j) = (method == WMethod::f43)
                               ? w_via_4f3(N, ls[i], m, n3s[j], nu)
                               : w_via_racah(N, ls[i], m, n3s[j], nu);
  return block;
}

double w_limit(WLimitKind kind, int N, int l, int m, int n3) {
  validate_pair(N, l, m, n3, 0.0);
  const int am = std::abs(m);
  switch (kind) {
    case WLimitKind::flat_3f2: {
      specfun::TerminatingSeriesSpec series;
      series.numerators = {-0.5 * n3, -0.5 * (n3 - 1.0), -0.5 * (N - l)};
      series.denominators = {0.5 * (l + am - n3) + 1.0,
                             0.5 * (l - am - n3) + 1.0};
      series.regularized = true;
      specfun::ScaledReal s = specfun::hyp_terminating_scaled(series);
      double log_pref =
          -(l - n3) * std::log(2.0) +
          0.5 * (specfun::log_double_factorial(N - am - n3) +
                 specfun::log_double_factorial(N + am - n3) -
                 specfun::log_double_factorial(N + l + 1) -
                 specfun::log_double_factorial(N - l) - std::lgamma(n3 + 1.0) +
                 std::log(2.0 * l + 1.0) + std::lgamma(l + am + 1.0) +
                 std::lgamma(l - am + 1.0));
      int phase = parity_sign((m + am) / 2);
      return phase * s.mantissa * std::exp(s.log_scale + log_pref);
    }
    case WLimitKind::flat_cg: {
      int phase = parity_sign((m + am) / 2);
      return phase * specfun::clebsch_gordan(
                         0.25 * (N + am), 0.25 * (N + am - 2.0 * n3),
                         0.25 * (N - am - 1.0), 0.25 * (2.0 * n3 - N + am - 1.0),
                         0.25 * (2.0 * l - 1.0), 0.25 * (2.0 * am - 1.0));
    }
    case WLimitKind::free_racah: {
      int J = N + 1;
      int m2 = n3 + 1;
      specfun::RacahArguments args(
          0.25 * (J + am - 1.0), 0.25 * (J - am - 2.0), 0.25 * (J + am - 1.0),
          0.25 * (J - am), 0.25 * (2.0 * l - 1.0), 0.5 * (m2 - 1.0));
      int phase = parity_sign((J - l - 1) / 2 + (m + am) / 2);
      return phase * std::sqrt((l + 0.5) * m2) * specfun::racah_w(args);
    }
  }
  throw std::invalid_argument("w_limit: unknown kind");
}

}  // namespace oscsphere::interbasis
