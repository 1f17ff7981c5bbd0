#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "oscsphere/specfun.hpp"
#include "oscsphere/verify.hpp"

using namespace oscsphere::specfun;
using oscsphere::verify::Lcg;

namespace {

constexpr double kPi = 3.14159265358979323846;

double pochhammer(double x, int n) {
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= x + i;
  return p;
}

bool near_nonpositive_integer(double x, double tol) {
  if (x > tol) return false;
  return std::abs(x - std::round(x)) <= tol;
}

}  // namespace

TEST_CASE("log_gamma matches factorials and half-integer values") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_gamma(0.5) ==
        doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-15));
  CHECK(log_gamma(10.0) ==
        doctest::Approx(std::log(362880.0)).epsilon(1e-15));
  for (double x : {1e-3, 0.2, 1.7, 33.0, 4096.5, 1e6}) {
    CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("log_double_factorial covers empty products and both parities") {
  CHECK(log_double_factorial(-1) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_double_factorial(0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_double_factorial(1) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_double_factorial(5) ==
        doctest::Approx(std::log(15.0)).epsilon(1e-14));
  CHECK(log_double_factorial(6) ==
        doctest::Approx(std::log(48.0)).epsilon(1e-14));
  CHECK(log_double_factorial(9) ==
        doctest::Approx(std::log(945.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_double_factorial(-2), std::invalid_argument);
}

TEST_CASE("jacobi_p reproduces closed forms and frozen samples") {
  CHECK(jacobi_p(0, 2.3, -0.7, 0.9) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(jacobi_p(1, 1.0, 1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(jacobi_p(2, 0.0, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(jacobi_p(3, 0.5, 1.5, 0.3) ==
        doctest::Approx(-0.39725).epsilon(1e-13));
  CHECK(jacobi_p(5, 2.0, 0.0, -0.4) ==
        doctest::Approx(-0.44044).epsilon(1e-13));
  CHECK_THROWS_AS(jacobi_p(-1, 0.0, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_p(2, -1.5, 0.0, 0.5), std::domain_error);
}

TEST_CASE("jacobi_p value at x = 1 equals the binomial coefficient") {
  for (double alpha : {-0.4, 0.0, 0.5, 3.0, 17.5}) {
    for (double beta : {-0.4, 0.0, 0.5, 3.0, 17.5}) {
      for (int n : {0, 1, 2, 5, 13, 34, 60}) {
        double expected = std::exp(std::lgamma(n + alpha + 1.0) -
                                   std::lgamma(alpha + 1.0) -
                                   std::lgamma(n + 1.0));
        CHECK(jacobi_p(n, alpha, beta, 1.0) ==
              doctest::Approx(expected).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("jacobi_p families are orthogonal under their weight") {
  // Integer exponents keep the weighted integrand polynomial, so the
  // quadrature below is exact up to roundoff.
  QuadratureRule rule = gauss_legendre(40, -1.0, 1.0);
  for (auto [alpha, beta] : std::vector<std::pair<double, double>>{
           {0.0, 0.0}, {2.0, 1.0}, {3.0, 0.0}}) {
    for (int n = 0; n <= 12; ++n) {
      for (int m = 0; m < n; ++m) {
        double cross = 0.0, nn = 0.0, mm = 0.0;
        for (int i = 0; i < rule.nodes.size(); ++i) {
          double x = rule.nodes[i];
          double w = rule.weights[i] * std::pow(1.0 - x, alpha) *
                     std::pow(1.0 + x, beta);
          double pn = jacobi_p(n, alpha, beta, x);
          double pm = jacobi_p(m, alpha, beta, x);
          cross += w * pn * pm;
          nn += w * pn * pn;
          mm += w * pm * pm;
        }
        CHECK(std::abs(cross) / std::sqrt(nn * mm) < 1e-10);
      }
    }
  }
  // Fractional exponents via x = cos t, which turns the weight into a
  // smooth trigonometric factor.
  QuadratureRule trig = gauss_legendre(120, 0.0, kPi);
  for (int n = 0; n <= 12; ++n) {
    for (int m = 0; m < n; ++m) {
      double cross = 0.0, nn = 0.0, mm = 0.0;
      for (int i = 0; i < trig.nodes.size(); ++i) {
        double t = trig.nodes[i];
        double x = std::cos(t);
        double w = trig.weights[i] * std::sin(t) * std::sin(t);
        double pn = jacobi_p(n, 0.5, 0.5, x);
        double pm = jacobi_p(m, 0.5, 0.5, x);
        cross += w * pn * pm;
        nn += w * pn * pn;
        mm += w * pm * pm;
      }
      CHECK(std::abs(cross) / std::sqrt(nn * mm) < 1e-10);
    }
  }
}

TEST_CASE("classical_poly matches low-order closed forms") {
  CHECK(classical_poly(PolyKind::gegenbauer, 0, 1.0, 0.3) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(classical_poly(PolyKind::laguerre, 1, 0.0, 2.0) ==
        doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(classical_poly(PolyKind::hermite, 2, 0.0, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(classical_poly(PolyKind::hermite, 4, 0.0, 0.7) ==
        doctest::Approx(-7.6784).epsilon(1e-13));
  CHECK(classical_poly(PolyKind::laguerre, 3, 1.5, 2.1) ==
        doctest::Approx(-1.596).epsilon(1e-13));
  CHECK(classical_poly(PolyKind::gegenbauer, 4, 2.0, 0.45) ==
        doctest::Approx(-3.4395).epsilon(1e-13));
  CHECK_THROWS_AS(classical_poly(PolyKind::gegenbauer, 2, -0.8, 0.1),
                  std::domain_error);
}

TEST_CASE("spherical_harmonic normalization, phases, frozen values") {
  std::complex<double> y00 = spherical_harmonic(0, 0, 0.37, 2.1);
  CHECK(y00.real() == doctest::Approx(1.0 / std::sqrt(4.0 * kPi)).epsilon(1e-14));
  CHECK(std::abs(y00.imag()) < 1e-16);

  double theta = 0.9, phi = 0.4;
  std::complex<double> y10 = spherical_harmonic(1, 0, theta, phi);
  CHECK(y10.real() ==
        doctest::Approx(std::sqrt(3.0 / (4.0 * kPi)) * std::cos(theta))
            .epsilon(1e-14));

  // Addition theorem at l = 2.
  double sum = 0.0;
  for (int m = -2; m <= 2; ++m) sum += std::norm(spherical_harmonic(2, m, 0.7, 1.1));
  CHECK(sum == doctest::Approx(5.0 / (4.0 * kPi)).epsilon(1e-13));

  // Conjugation symmetry.
  for (auto [l, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {5, 4}}) {
    std::complex<double> plus = spherical_harmonic(l, m, 1.234, 0.77);
    std::complex<double> minus = spherical_harmonic(l, -m, 1.234, 0.77);
    double sign = (m % 2 == 0) ? 1.0 : -1.0;
    CHECK(std::abs(minus - sign * std::conj(plus)) < 1e-14);
  }

  std::complex<double> y21 = spherical_harmonic(2, 1, 0.8, 0.3);
  CHECK(y21.real() == doctest::Approx(-0.36886449021043455919).epsilon(1e-13));
  CHECK(y21.imag() == doctest::Approx(-0.11410315801586141027).epsilon(1e-13));
  std::complex<double> y3m2 = spherical_harmonic(3, -2, 1.1, 2.0);
  CHECK(y3m2.real() == doctest::Approx(-0.24066482111865833992).epsilon(1e-13));
  CHECK(y3m2.imag() == doctest::Approx(0.27864685180403669975).epsilon(1e-13));

  CHECK_THROWS_AS(spherical_harmonic(1, 2, 0.3, 0.3), std::domain_error);
}

TEST_CASE("hyp_terminating sums short series exactly") {
  TerminatingSeriesSpec zero_num;
  zero_num.numerators = {0.0, 1.3, 2.2};
  zero_num.denominators = {4.0, 5.5};
  CHECK(hyp_terminating(zero_num) == doctest::Approx(1.0).epsilon(1e-15));

  TerminatingSeriesSpec two_terms;
  two_terms.numerators = {-1.0, 2.0, 3.0, 4.0};
  two_terms.denominators = {5.0, 6.0, 7.0};
  CHECK(hyp_terminating(two_terms) ==
        doctest::Approx(1.0 - 24.0 / 210.0).epsilon(1e-15));

  TerminatingSeriesSpec nonterminating;
  nonterminating.numerators = {0.5, 1.0, 1.0};
  nonterminating.denominators = {2.0, 3.0};
  CHECK_THROWS_AS(hyp_terminating(nonterminating), std::domain_error);
}

TEST_CASE("hyp_terminating satisfies the Saalschuetz 3F2 evaluation") {
  Lcg rng(91);
  int tested = 0;
  while (tested < 100) {
    int n = 1 + static_cast<int>(rng.next_double() * 5.0);
    double a = 0.2 + 2.8 * rng.next_double();
    double b = 0.2 + 2.8 * rng.next_double();
    double c = 4.0 + 2.0 * rng.next_double();
    double d = 1.0 + a + b - c - n;
    if (near_nonpositive_integer(d + 0.0, 1e-3) ||
        std::abs(pochhammer(c - a - b, n)) < 1e-6)
      continue;
    bool skip = false;
    for (int k = 0; k < n && !skip; ++k)
      if (std::abs(d + k) < 1e-3) skip = true;
    if (skip) continue;
    TerminatingSeriesSpec spec;
    spec.numerators = {a, b, static_cast<double>(-n)};
    spec.denominators = {c, d};
    double lhs = hyp_terminating(spec);
    double rhs = pochhammer(c - a, n) * pochhammer(c - b, n) /
                 (pochhammer(c, n) * pochhammer(c - a - b, n));
    CHECK(std::abs(lhs - rhs) <=
          1e-13 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
    ++tested;
  }
}

TEST_CASE("Saalschuetzian 4F3 transformation pairs agree") {
  // Balanced terminating series F[-n, x, y, z; u, v, w] equals
  // (v-z)_n (w-z)_n / ((v)_n (w)_n) *
  //   F[-n, u-x, u-y, z; u, z+1-n-v, z+1-n-w].
  Lcg rng(2024);
  int tested = 0;
  while (tested < 200) {
    int n = 1 + static_cast<int>(rng.next_double() * 5.0);
    double x = 0.2 + 2.8 * rng.next_double();
    double y = 0.2 + 2.8 * rng.next_double();
    double z = 0.2 + 2.8 * rng.next_double();
    double u = 3.5 + 2.5 * rng.next_double();
    double v = 3.5 + 2.5 * rng.next_double();
    double w = x + y + z - n + 1.0 - u - v;
    double dv = z + 1.0 - n - v;
    double dw = z + 1.0 - n - w;
    bool skip = false;
    for (int k = 0; k <= n; ++k) {
      for (double den : {w + k, dv + k, dw + k})
        if (std::abs(den) < 1e-3) skip = true;
    }
    double pref_den = pochhammer(v, n) * pochhammer(w, n);
    if (skip || std::abs(pref_den) < 1e-6) continue;

    TerminatingSeriesSpec lhs_spec;
    lhs_spec.numerators = {static_cast<double>(-n), x, y, z};
    lhs_spec.denominators = {u, v, w};
    TerminatingSeriesSpec rhs_spec;
    rhs_spec.numerators = {static_cast<double>(-n), u - x, u - y, z};
    rhs_spec.denominators = {u, dv, dw};

    double lhs = hyp_terminating(lhs_spec);
    double rhs = pochhammer(v - z, n) * pochhammer(w - z, n) / pref_den *
                 hyp_terminating(rhs_spec);
    CHECK(std::abs(lhs - rhs) <=
          1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
    ++tested;
  }
}

TEST_CASE("triangle_delta factorial evaluations") {
  CHECK(triangle_delta(0.0, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(triangle_delta(1.0, 1.0, 1.0) ==
        doctest::Approx(std::sqrt(1.0 / 24.0)).epsilon(1e-14));
  CHECK(triangle_delta(1.0, 0.0, 1.0) ==
        doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
  CHECK(log_triangle_delta(1.0, 1.0, 1.0) ==
        doctest::Approx(0.5 * std::log(1.0 / 24.0)).epsilon(1e-13));
  CHECK_THROWS_AS(triangle_delta(3.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("racah_w integer and quarter-integer samples") {
  // One argument zero: |W| = 1/3.
  CHECK(std::abs(racah_w(RacahArguments(1, 1, 1, 1, 0, 0))) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(racah_w(RacahArguments(1, 1, 1, 1, 1, 1)) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(racah_w(RacahArguments(2, 2, 2, 2, 2, 2)) ==
        doctest::Approx(-3.0 / 70.0).epsilon(1e-13));
  // Stretched case c = a + b reduces the series to its first term.
  CHECK(racah_w(RacahArguments(1, 1, 1, 1, 2, 1)) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  // Quarter-integer family.
  CHECK(racah_w(RacahArguments(1.5, 0.75, 1.75, 1.5, 1.25, 1.25)) ==
        doctest::Approx(-2.0 / 105.0).epsilon(1e-12));
  CHECK_THROWS_AS(RacahArguments(1, 1, 1, 1, 5, 1), std::domain_error);
}

TEST_CASE("racah_w orthogonality over the coupling index") {
  const double a = 2, b = 2, e = 2, d = 2;
  for (int f1 = 0; f1 <= 4; ++f1) {
    for (int f2 = f1; f2 <= 4; ++f2) {
      double sum = 0.0;
      for (int c = 0; c <= 4; ++c) {
        double w1 = racah_w(RacahArguments(a, b, e, d, c, f1));
        double w2 = racah_w(RacahArguments(a, b, e, d, c, f2));
        sum += (2.0 * c + 1.0) *
               std::sqrt((2.0 * f1 + 1.0) * (2.0 * f2 + 1.0)) * w1 * w2;
      }
      double expected = (f1 == f2) ? 1.0 : 0.0;
      CHECK(std::abs(sum - expected) < 1e-12);
    }
  }
}

TEST_CASE("clebsch_gordan closed forms and continued arguments") {
  CHECK(clebsch_gordan(1.5, 0.5, 0.0, 0.0, 1.5, 0.5) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(clebsch_gordan(0.5, 0.5, 0.5, -0.5, 0.0, 0.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(clebsch_gordan(1.0, 1.0, 1.0, -1.0, 0.0, 0.0) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(clebsch_gordan(1.5, 0.5, 1.0, 0.0, 2.5, 0.5) ==
        doctest::Approx(0.77459666924148337704).epsilon(1e-13));
  // Quarter-integer projections outside the usual |alpha| <= a band.
  CHECK(clebsch_gordan(2.0, 2.0, 0.75, -1.25, 0.75, 0.75) ==
        doctest::Approx(0.87287156094396952506).epsilon(1e-12));
  // Projection mismatch is a selection rule, not an error.
  CHECK(clebsch_gordan(1.0, 1.0, 1.0, 0.0, 2.0, 0.0) == 0.0);

  double sum = 0.0;
  for (int alpha = -1; alpha <= 1; ++alpha) {
    double c = clebsch_gordan(1.0, alpha, 1.0, -alpha, 2.0, 0.0);
    sum += c * c;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("racah recurrence residual is small in-domain and reacts to bias") {
  CHECK(std::abs(racah_recurrence_residual(1, 1, 1, 1, 1, 1)) < 1e-12);
  // Boundary c = a + b: the upward term is annihilated by its coefficient.
  CHECK(std::abs(racah_recurrence_residual(1, 1, 2, 1, 1, 1)) < 1e-12);

  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int d = 1; d <= 3; ++d)
        for (int l = 1; l <= 3; ++l)
          for (int f = std::max(std::abs(a - l), std::abs(d - b));
               f <= std::min(a + l, d + b); ++f)
            for (int c = std::max(std::abs(a - b), std::abs(d - l));
                 c <= std::min(a + b, d + l); ++c)
              CHECK(std::abs(racah_recurrence_residual(a, b, c, d, l, f)) <
                    1e-11);

  // Contrapositive: rebuild the three balanced terms and bias one by 1%.
  auto coeff_b = [](double a, double b, double d, double l, double cc) {
    const double factors[8] = {a + b + cc + 2.0, -a + b + cc + 1.0,
                               a - b + cc + 1.0, a + b - cc,
                               d - l + cc + 1.0, d + l - cc,
                               d + l + cc + 2.0, -d + l + cc + 1.0};
    double product = 1.0;
    for (double x : factors) product *= x;
    return std::sqrt(product);
  };
  const double a = 2, b = 2, c = 2, d = 2, l = 2, f = 2;
  double ac =
      (a * (a + 1) - b * (b + 1)) * (d * (d + 1) - l * (l + 1)) +
      c * (c + 1) * (a * (a + 1) + b * (b + 1) + d * (d + 1) + l * (l + 1) -
                     c * (c + 1)) -
      2 * c * (c + 1) * f * (f + 1);
  double up = c * coeff_b(a, b, d, l, c) *
              racah_w(RacahArguments(a, b, l, d, c + 1, f));
  double down = (c + 1) * coeff_b(a, b, d, l, c - 1) *
                racah_w(RacahArguments(a, b, l, d, c - 1, f));
  double mid = (2 * c + 1) * ac * racah_w(RacahArguments(a, b, l, d, c, f));
  double scale = std::max({std::abs(up), std::abs(down), std::abs(mid)});
  CHECK(std::abs(up + down + mid) / scale < 1e-12);
  CHECK(std::abs(1.01 * up + down + mid) / scale > 1e-4);
}

TEST_CASE("jacobi_elliptic degenerations, identities, frozen point") {
  for (double k : {0.0, 0.4, 1.0}) {
    JacobiElliptic at0 = jacobi_elliptic(0.0, k);
    CHECK(at0.sn == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(at0.cn == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(at0.dn == doctest::Approx(1.0).epsilon(1e-15));
  }
  JacobiElliptic circ = jacobi_elliptic(0.83, 0.0);
  CHECK(circ.sn == doctest::Approx(std::sin(0.83)).epsilon(1e-14));
  CHECK(circ.cn == doctest::Approx(std::cos(0.83)).epsilon(1e-14));
  CHECK(circ.dn == doctest::Approx(1.0).epsilon(1e-15));
  JacobiElliptic hyp = jacobi_elliptic(0.83, 1.0);
  CHECK(hyp.sn == doctest::Approx(std::tanh(0.83)).epsilon(1e-14));
  CHECK(hyp.cn == doctest::Approx(1.0 / std::cosh(0.83)).epsilon(1e-14));
  CHECK(hyp.dn == doctest::Approx(1.0 / std::cosh(0.83)).epsilon(1e-14));

  JacobiElliptic frozen = jacobi_elliptic(0.7, 0.6);
  CHECK(frozen.sn == doctest::Approx(0.62991711532348681044).epsilon(1e-13));
  CHECK(frozen.cn == doctest::Approx(0.77666236410845673098).epsilon(1e-13));
  CHECK(frozen.dn == doctest::Approx(0.92582589832868324581).epsilon(1e-13));

  for (double k : {0.0, 0.3, 0.8, 0.99, 1.0}) {
    for (int i = 0; i <= 100; ++i) {
      double u = -5.0 + 0.1 * i;
      JacobiElliptic v = jacobi_elliptic(u, k);
      CHECK(std::abs(v.sn * v.sn + v.cn * v.cn - 1.0) < 1e-13);
      CHECK(std::abs(v.dn * v.dn + k * k * v.sn * v.sn - 1.0) < 1e-13);
    }
  }
}

TEST_CASE("complete_elliptic_k against quadrature and frozen values") {
  CHECK(complete_elliptic_k(0.0) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(complete_elliptic_k(0.6) ==
        doctest::Approx(1.750753802915752529).epsilon(1e-14));
  CHECK(complete_elliptic_k(0.99) ==
        doctest::Approx(3.356600523361192376).epsilon(1e-14));

  QuadratureRule rule = gauss_legendre(200, 0.0, kPi / 2.0);
  for (double k : {0.5, 0.9}) {
    double integral = 0.0;
    for (int i = 0; i < rule.nodes.size(); ++i) {
      double s = std::sin(rule.nodes[i]);
      integral += rule.weights[i] / std::sqrt(1.0 - k * k * s * s);
    }
    CHECK(std::abs(complete_elliptic_k(k) - integral) < 1e-12);
  }
  CHECK_THROWS_AS(complete_elliptic_k(1.0), std::domain_error);
}

TEST_CASE("inverse_sn inverts sn on [0, K]") {
  CHECK(inverse_sn(0.5, 0.7) ==
        doctest::Approx(0.53536740275997133631).epsilon(1e-13));
  CHECK(inverse_sn(0.0, 0.3) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(inverse_sn(1.0, 0.3) ==
        doctest::Approx(complete_elliptic_k(0.3)).epsilon(1e-13));
  for (double k : {0.1, 0.5, 0.9}) {
    for (double x : {0.05, 0.3, 0.62, 0.9, 0.99}) {
      double u = inverse_sn(x, k);
      CHECK(jacobi_elliptic(u, k).sn == doctest::Approx(x).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(inverse_sn(1.5, 0.5), std::domain_error);
}

TEST_CASE("gauss_legendre nodes, exactness, usage errors") {
  QuadratureRule mid = gauss_legendre(1, -1.0, 1.0);
  CHECK(mid.nodes.size() == 1);
  CHECK(mid.nodes[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(mid.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

  QuadratureRule two = gauss_legendre(2, -1.0, 1.0);
  double xsq = 0.0;
  for (int i = 0; i < 2; ++i) xsq += two.weights[i] * two.nodes[i] * two.nodes[i];
  CHECK(xsq == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  QuadratureRule cosrule = gauss_legendre(40, 0.0, kPi / 2.0);
  double cosint = 0.0;
  for (int i = 0; i < 40; ++i) cosint += cosrule.weights[i] * std::cos(cosrule.nodes[i]);
  CHECK(std::abs(cosint - 1.0) < 1e-14);

  // Degree 2n-1 exactness: 8 nodes integrate x^15 on [0,1].
  QuadratureRule eight = gauss_legendre(8, 0.0, 1.0);
  double p15 = 0.0;
  for (int i = 0; i < 8; ++i) p15 += eight.weights[i] * std::pow(eight.nodes[i], 15);
  CHECK(p15 == doctest::Approx(1.0 / 16.0).epsilon(1e-14));

  CHECK_THROWS_AS(gauss_legendre(0, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_legendre(4, 1.0, 1.0), std::invalid_argument);
}
