#include "oscsphere/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace oscsphere::specfun {

namespace {

constexpr double kIntTol = 1e-9;  // tolerance for nonpositive-integer detection

bool near_integer(double x) { return std::abs(x - std::round(x)) <= kIntTol; }

bool nonpositive_integer(double x) { return x <= kIntTol && near_integer(x); }

// Signed logarithm of a real value: value = sign * exp(log_abs), with
// zero == true meaning the value is exactly 0.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;
  bool zero = false;
};

SignedLog slog_of(double x) {
  if (x == 0.0) return {0.0, 1, true};
  return {std::log(std::abs(x)), x > 0.0 ? 1 : -1, false};
}

// log |Gamma(x)| and sign for arbitrary real x; zero flags 1/Gamma(x) = 0
// (x a nonpositive integer). Negative non-integer x goes through reflection.
SignedLog slog_gamma(double x) {
  if (x > 0.0) return {std::lgamma(x), 1, false};
  if (nonpositive_integer(x)) return {0.0, 1, true};  // Gamma pole
  double s = std::sin(M_PI * x);
  return {std::log(M_PI) - std::log(std::abs(s)) - std::lgamma(1.0 - x),
          s > 0.0 ? 1 : -1, false};
}

// log |(a)_k| and sign; zero when the Pochhammer product vanishes.
SignedLog slog_pochhammer(double a, int k) {
  SignedLog r;
  for (int j = 0; j < k; ++j) {
    double factor = a + j;
    if (near_integer(factor) && std::abs(factor) <= kIntTol) {
      r.zero = true;
      return r;
    }
    r.log_abs += std::log(std::abs(factor));
    if (factor < 0.0) r.sign = -r.sign;
  }
  return r;
}

double kahan_total(const std::vector<double>& xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  return std::lgamma(x);
}

double log_double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("log_double_factorial: n < -1");
  if (n <= 0) return 0.0;
  if (n % 2 == 0) {
    double h = n / 2;
    return h * std::log(2.0) + std::lgamma(h + 1.0);
  }
  double h = (n - 1) / 2;
  return std::lgamma(n + 1.0) - h * std::log(2.0) - std::lgamma(h + 1.0);
}

double ScaledReal::value() const { return mantissa * std::exp(log_scale); }

double jacobi_p(int n, double alpha, double beta, double x) {
  if (n < 0) throw std::invalid_argument("jacobi_p: negative degree");
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::domain_error("jacobi_p: parameters must exceed -1");
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * x;
  for (int j = 2; j <= n; ++j) {
    double ab = alpha + beta;
    double c1 = 2.0 * j * (j + ab) * (2.0 * j + ab - 2.0);
    double c2 = (2.0 * j + ab - 1.0) *
                ((2.0 * j + ab) * (2.0 * j + ab - 2.0) * x +
                 alpha * alpha - beta * beta);
    double c3 = 2.0 * (j + alpha - 1.0) * (j + beta - 1.0) * (2.0 * j + ab);
    double next = (c2 * p - c3 * pm1) / c1;
    pm1 = p;
    p = next;
  }
  return p;
}

double classical_poly(PolyKind kind, int n, double param, double x) {
  if (n < 0) throw std::invalid_argument("classical_poly: negative degree");
  switch (kind) {
    case PolyKind::gegenbauer: {
      if (param <= -0.5)
        throw std::domain_error("classical_poly: gegenbauer needs param > -1/2");
      if (n == 0) return 1.0;
      double cm1 = 1.0, c = 2.0 * param * x;
      for (int j = 2; j <= n; ++j) {
        double next = (2.0 * x * (j + param - 1.0) * c -
                       (j + 2.0 * param - 2.0) * cm1) / j;
        cm1 = c;
        c = next;
      }
      return c;
    }
    case PolyKind::laguerre: {
      if (param <= -1.0)
        throw std::domain_error("classical_poly: laguerre needs param > -1");
      if (n == 0) return 1.0;
      double lm1 = 1.0, l = 1.0 + param - x;
      for (int j = 2; j <= n; ++j) {
        double next = ((2.0 * j - 1.0 + param - x) * l -
                       (j - 1.0 + param) * lm1) / j;
        lm1 = l;
        l = next;
      }
      return l;
    }
    case PolyKind::hermite: {
      if (n == 0) return 1.0;
      double hm1 = 1.0, h = 2.0 * x;
      for (int j = 2; j <= n; ++j) {
        double next = 2.0 * x * h - 2.0 * (j - 1.0) * hm1;
        hm1 = h;
        h = next;
      }
      return h;
    }
  }
  throw std::invalid_argument("classical_poly: unknown kind");
}

std::complex<double> spherical_harmonic(int l, int m, double theta,
                                        double phi) {
  if (l < 0 || std::abs(m) > l)
    throw std::domain_error("spherical_harmonic: need 0 <= |m| <= l");
  int am = std::abs(m);
  double ct = std::cos(theta), st = std::sin(theta);
  // Fully normalized associated Legendre with Condon-Shortley phase:
  // start from Pbar_{m}^{m} and climb in degree.
  double pmm = 1.0 / std::sqrt(4.0 * M_PI);
  for (int j = 1; j <= am; ++j)
    pmm *= -std::sqrt((2.0 * j + 1.0) / (2.0 * j)) * st;
  double p = pmm;
  if (l > am) {
    double pm1 = pmm;
    p = std::sqrt(2.0 * am + 3.0) * ct * pmm;
    for (int j = am + 2; j <= l; ++j) {
      double aj = std::sqrt((4.0 * j * j - 1.0) /
                            (static_cast<double>(j) * j - am * am));
      double ajm1 = std::sqrt((4.0 * (j - 1.0) * (j - 1.0) - 1.0) /
                              ((j - 1.0) * (j - 1.0) - am * am));
      double next = aj * (ct * p - pm1 / ajm1);
      pm1 = p;
      p = next;
    }
  }
  std::complex<double> azimuth(std::cos(am * phi), std::sin(am * phi));
  std::complex<double> y = p * azimuth;
  if (m < 0) y = (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
  return y;
}

ScaledReal hyp_terminating_scaled(const TerminatingSeriesSpec& spec) {
  const auto& as = spec.numerators;
  const auto& bs = spec.denominators;
  if (as.size() < 3 || as.size() > 4 || bs.size() < 2 || bs.size() > 3)
    throw std::invalid_argument("hyp_terminating: need 3-4 numerators, 2-3 denominators");

  int kmax = -1;
  for (double a : as)
    if (nonpositive_integer(a)) {
      int k = static_cast<int>(std::lround(-a));
      kmax = (kmax < 0) ? k : std::min(kmax, k);
    }
  if (kmax < 0)
    throw std::domain_error("hyp_terminating: no nonpositive-integer numerator");

  std::vector<bool> folded(bs.size(), spec.regularized);
  for (std::size_t idx : spec.plain_denominators)
    if (idx < bs.size()) folded[idx] = false;
  for (std::size_t j = 0; j < bs.size(); ++j)
    if (!folded[j] && nonpositive_integer(bs[j]) &&
        static_cast<int>(std::lround(-bs[j])) < kmax)
      throw std::domain_error(
          "hyp_terminating: denominator Pochhammer vanishes before termination");

  std::vector<double> log_terms(static_cast<std::size_t>(kmax) + 1);
  std::vector<int> signs(static_cast<std::size_t>(kmax) + 1);
  std::vector<bool> alive(static_cast<std::size_t>(kmax) + 1, false);
  double top = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kmax; ++k) {
    SignedLog t;
    for (double a : as) {
      SignedLog p = slog_pochhammer(a, k);
      if (p.zero) { t.zero = true; break; }
      t.log_abs += p.log_abs;
      t.sign *= p.sign;
    }
    if (!t.zero) {
      t.log_abs -= std::lgamma(k + 1.0);
      for (std::size_t j = 0; j < bs.size(); ++j) {
        if (folded[j]) {
          SignedLog g = slog_gamma(bs[j] + k);
          if (g.zero) { t.zero = true; break; }
          t.log_abs -= g.log_abs;
          t.sign *= g.sign;
        } else {
          SignedLog p = slog_pochhammer(bs[j], k);
          if (p.zero)
            throw std::domain_error(
                "hyp_terminating: zero plain denominator Pochhammer");
          t.log_abs -= p.log_abs;
          t.sign *= p.sign;
        }
      }
    }
    if (!t.zero) {
      alive[k] = true;
      log_terms[k] = t.log_abs;
      signs[k] = t.sign;
      top = std::max(top, t.log_abs);
    }
  }
  if (!std::isfinite(top)) return {0.0, 0.0};

  std::vector<double> scaled;
  scaled.reserve(log_terms.size());
  for (int k = 0; k <= kmax; ++k)
    if (alive[k]) scaled.push_back(signs[k] * std::exp(log_terms[k] - top));
  return {kahan_total(scaled), top};
}

double hyp_terminating(const TerminatingSeriesSpec& spec) {
  return hyp_terminating_scaled(spec).value();
}

double log_triangle_delta(double a, double b, double c) {
  double g1 = a + b - c + 1.0, g2 = a - b + c + 1.0, g3 = b + c - a + 1.0,
         g4 = a + b + c + 2.0;
  if (g1 <= 0.0 || g2 <= 0.0 || g3 <= 0.0 || g4 <= 0.0)
    throw std::domain_error("triangle_delta: gamma argument not positive");
  return 0.5 * (std::lgamma(g1) + std::lgamma(g2) + std::lgamma(g3) -
                std::lgamma(g4));
}

double triangle_delta(double a, double b, double c) {
  return std::exp(log_triangle_delta(a, b, c));
}

RacahArguments::RacahArguments(double a_, double b_, double e_, double d_,
                               double c_, double f_)
    : a(a_), b(b_), e(e_), d(d_), c(c_), f(f_) {
  const double triples[4][3] = {
      {a, b, c}, {c, d, e}, {a, e, f}, {b, d, f}};
  for (const auto& t : triples) {
    double g1 = t[0] + t[1] - t[2] + 1.0, g2 = t[0] - t[1] + t[2] + 1.0,
           g3 = t[1] + t[2] - t[0] + 1.0, g4 = t[0] + t[1] + t[2] + 2.0;
    if (g1 <= 0.0 || g2 <= 0.0 || g3 <= 0.0 || g4 <= 0.0)
      throw std::domain_error("RacahArguments: triangle gamma argument not positive");
  }
}

double racah_w(const RacahArguments& w) {
  const double a = w.a, b = w.b, e = w.e, d = w.d, c = w.c, f = w.f;
  double log_pref = log_triangle_delta(a, b, c) + log_triangle_delta(c, d, e) +
                    log_triangle_delta(a, e, f) + log_triangle_delta(b, d, f) -
                    std::lgamma(a + b - c + 1.0) -
                    std::lgamma(d + e - c + 1.0) -
                    std::lgamma(a - f + e + 1.0) -
                    std::lgamma(b - f + d + 1.0) +
                    std::lgamma(a + b + d + e + 2.0);
  TerminatingSeriesSpec series;
  series.numerators = {c - a - b, f - b - d, f - a - e, c - d - e};
  series.denominators = {-a - b - d - e - 1.0, c - a - d + f + 1.0,
                         c - b - e + f + 1.0};
  series.regularized = true;
  series.plain_denominators = {0};  // compensated by (a+b+d+e+1)! upstairs
  ScaledReal s = hyp_terminating_scaled(series);
  return s.mantissa * std::exp(s.log_scale + log_pref);
}

double clebsch_gordan(double a, double alpha, double b, double beta, double c,
                      double gamma) {
  if (std::abs(alpha + beta - gamma) > kIntTol) return 0.0;
  double n = a + b - c;
  if (!near_integer(n)) {
    // Half-odd-integer order is an ordinary selection-rule zero; anything
    // else leaves the terminating-sum domain.
    if (near_integer(2.0 * n)) return 0.0;
    throw std::domain_error("clebsch_gordan: a + b - c must be half-integer");
  }
  if (n < -kIntTol) return 0.0;
  if (2.0 * c + 1.0 <= 0.0)
    throw std::domain_error("clebsch_gordan: 2c + 1 must be positive");
  // Normalization evaluated through signed log-gammas so the arguments may
  // be continued off the angular-momentum grid. A pole in any numerator
  // gamma marks a saturated selection rule, hence a zero coefficient.
  const double numerator_args[9] = {
      a + b - c + 1.0, a - b + c + 1.0, -a + b + c + 1.0,
      a + alpha + 1.0, a - alpha + 1.0, b + beta + 1.0,
      b - beta + 1.0,  c + gamma + 1.0, c - gamma + 1.0};
  double log_norm = std::log(2.0 * c + 1.0);
  int norm_sign = 1;
  for (double arg : numerator_args) {
    SignedLog g = slog_gamma(arg);
    if (g.zero) return 0.0;
    log_norm += g.log_abs;
    norm_sign *= g.sign;
  }
  {
    SignedLog g = slog_gamma(a + b + c + 2.0);
    if (g.zero) return 0.0;
    log_norm -= g.log_abs;
    norm_sign *= g.sign;
  }
  if (norm_sign < 0)
    throw std::domain_error(
        "clebsch_gordan: normalization leaves the real domain");
  double log_pre = 0.5 * log_norm;

  int zmax = static_cast<int>(std::lround(n));
  std::vector<double> terms;
  terms.reserve(zmax + 1);
  double top = -std::numeric_limits<double>::infinity();
  std::vector<SignedLog> raw(zmax + 1);
  for (int z = 0; z <= zmax; ++z) {
    SignedLog t;
    t.sign = (z % 2 == 0) ? 1 : -1;
    t.log_abs = -std::lgamma(z + 1.0);
    const double args[5] = {a + b - c - z, a - alpha - z, b + beta - z,
                            c - b + alpha + z, c - a - beta + z};
    for (double arg : args) {
      SignedLog g = slog_gamma(arg + 1.0);
      if (g.zero) { t.zero = true; break; }
      t.log_abs -= g.log_abs;
      t.sign *= g.sign;
    }
    raw[z] = t;
    if (!t.zero) top = std::max(top, t.log_abs);
  }
  if (!std::isfinite(top)) return 0.0;
  for (const SignedLog& t : raw)
    if (!t.zero) terms.push_back(t.sign * std::exp(t.log_abs - top));
  return kahan_total(terms) * std::exp(top + log_pre);
}

namespace {

// B coefficient of the 6j recurrence in c; 0 at and beyond the triangle
// boundary it annihilates.
double recurrence_b(double a, double b, double d, double l, double cc) {
  const double factors[8] = {a + b + cc + 2.0, -a + b + cc + 1.0,
                             a - b + cc + 1.0, a + b - cc,
                             d - l + cc + 1.0, d + l - cc,
                             d + l + cc + 2.0, -d + l + cc + 1.0};
  double product = 1.0;
  for (double x : factors) {
    if (std::abs(x) <= kIntTol) return 0.0;
    product *= x;
  }
  if (product < 0.0)
    throw std::domain_error("racah_recurrence_residual: B coefficient out of domain");
  return std::sqrt(product);
}

}  // namespace

double racah_recurrence_residual(double a, double b, double c, double d,
                                 double l, double f) {
  double bc = recurrence_b(a, b, d, l, c);
  double bcm1 = recurrence_b(a, b, d, l, c - 1.0);
  double ac = (a * (a + 1.0) - b * (b + 1.0)) * (d * (d + 1.0) - l * (l + 1.0)) +
              c * (c + 1.0) * (a * (a + 1.0) + b * (b + 1.0) + d * (d + 1.0) +
                               l * (l + 1.0) - c * (c + 1.0)) -
              2.0 * c * (c + 1.0) * f * (f + 1.0);
  // Scale by |largest coefficient| * |largest symbol| rather than the largest
  // term: an accidental zero of a neighbouring symbol would otherwise leave
  // only rounding noise in the denominator.
  std::vector<double> terms;
  double coeff_max = 0.0, symbol_max = 0.0;
  auto add = [&](double coeff, double symbol) {
    terms.push_back(coeff * symbol);
    coeff_max = std::max(coeff_max, std::abs(coeff));
    symbol_max = std::max(symbol_max, std::abs(symbol));
  };
  if (c * bc != 0.0)
    add(c * bc, racah_w(RacahArguments(a, b, l, d, c + 1.0, f)));
  if ((c + 1.0) * bcm1 != 0.0)
    add((c + 1.0) * bcm1, racah_w(RacahArguments(a, b, l, d, c - 1.0, f)));
  add((2.0 * c + 1.0) * ac, racah_w(RacahArguments(a, b, l, d, c, f)));
  double scale = coeff_max * symbol_max;
  if (scale == 0.0) return 0.0;
  return kahan_total(terms) / scale;
}

JacobiElliptic jacobi_elliptic(double u, double k) {
  if (k < 0.0 || k > 1.0)
    throw std::domain_error("jacobi_elliptic: modulus must be in [0,1]");
  if (k == 0.0) return {std::sin(u), std::cos(u), 1.0};
  if (k == 1.0) {
    double sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech};
  }
  constexpr int kMaxIter = 64;
  double av[kMaxIter + 1], cv[kMaxIter + 1];
  double an = 1.0, bn = std::sqrt(1.0 - k * k), cn_ = k;
  av[0] = an;
  cv[0] = cn_;
  int n = 0;
  while (std::abs(cn_) > 1e-12 && n < kMaxIter) {
    double a_next = 0.5 * (an + bn);
    double b_next = std::sqrt(an * bn);
    cn_ = 0.5 * (an - bn);
    an = a_next;
    bn = b_next;
    ++n;
    av[n] = an;
    cv[n] = cn_;
  }
  double phi = std::ldexp(an * u, n);
  for (int i = n; i >= 1; --i) {
    double ratio = std::clamp(cv[i] / av[i] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(ratio));
  }
  double sn = std::sin(phi), cn = std::cos(phi);
  return {sn, cn, std::sqrt(1.0 - k * k * sn * sn)};
}

double complete_elliptic_k(double k) {
  if (k < 0.0 || k >= 1.0)
    throw std::domain_error("complete_elliptic_k: modulus must be in [0,1)");
  double a = 1.0, b = std::sqrt(1.0 - k * k);
  for (int i = 0; i < 64 && std::abs(a - b) > 4.0 * std::numeric_limits<double>::epsilon() * a; ++i) {
    double a_next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = a_next;
  }
  return M_PI / (2.0 * a);
}

namespace {

double carlson_rf(double x, double y, double z) {
  constexpr double errtol = 1e-3;
  for (int i = 0; i < 200; ++i) {
    double lam = std::sqrt(x * y) + std::sqrt(y * z) + std::sqrt(z * x);
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    double mu = (x + y + z) / 3.0;
    if (std::max({std::abs(x - mu), std::abs(y - mu), std::abs(z - mu)}) <
        errtol * mu)
      break;
  }
  double mu = (x + y + z) / 3.0;
  double dx = 1.0 - x / mu, dy = 1.0 - y / mu, dz = 1.0 - z / mu;
  double e2 = dx * dy + dy * dz + dz * dx;
  double e3 = dx * dy * dz;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 -
          3.0 * e2 * e3 / 44.0) / std::sqrt(mu);
}

}  // namespace

double inverse_sn(double x, double k) {
  if (x < 0.0 || x > 1.0)
    throw std::domain_error("inverse_sn: argument must be in [0,1]");
  if (k < 0.0 || k > 1.0)
    throw std::domain_error("inverse_sn: modulus must be in [0,1]");
  return x * carlson_rf(1.0 - x * x, 1.0 - k * k * x * x, 1.0);
}

QuadratureRule gauss_legendre(int npoints, double a, double b) {
  if (npoints < 1)
    throw std::invalid_argument("gauss_legendre: need at least one node");
  if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");
  QuadratureRule rule;
  rule.nodes.resize(npoints);
  rule.weights.resize(npoints);
  const int half = (npoints + 1) / 2;
  const double mid = 0.5 * (a + b), span = 0.5 * (b - a);
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (npoints + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p = 1.0, pm1 = 0.0;
      for (int j = 1; j <= npoints; ++j) {
        double next = ((2.0 * j - 1.0) * x * p - (j - 1.0) * pm1) / j;
        pm1 = p;
        p = next;
      }
      dp = npoints * (x * p - pm1) / (x * x - 1.0);
      double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - span * x;
    rule.nodes[npoints - 1 - i] = mid + span * x;
    rule.weights[i] = span * w;
    rule.weights[npoints - 1 - i] = span * w;
  }
  return rule;
}

}  // namespace oscsphere::specfun
