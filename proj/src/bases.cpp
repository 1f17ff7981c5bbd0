#include "oscsphere/bases.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oscsphere/specfun.hpp"

namespace oscsphere::bases {

namespace {

constexpr double kRangeTol = 1e-12;
constexpr double kHalfPi = 1.5707963267948966;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

void OscillatorParams::validate() const {
  if (!(R > 0.0) || !(mass > 0.0) || !(hbar > 0.0) || omega < 0.0)
    throw std::domain_error("OscillatorParams: need R, mass, hbar > 0 and omega >= 0");
}

double nu_of(const OscillatorParams& params) {
  params.validate();
  double t = 2.0 * params.mass * params.omega * params.R * params.R / params.hbar;
  // (sqrt(1+t^2)-1)/2 rewritten to stay accurate for small t
  return t * t / (2.0 * (1.0 + std::sqrt(1.0 + t * t)));
}

double flat_density(const OscillatorParams& params) {
  params.validate();
  return params.mass * params.omega / params.hbar;
}

OscillatorParams params_for_nu(double nu, double R, double mass, double hbar) {
  if (nu < 0.0) throw std::domain_error("params_for_nu: nu must be nonnegative");
  OscillatorParams params{R, mass,
                          hbar * std::sqrt(nu * (nu + 1.0)) / (mass * R * R),
                          hbar};
  params.validate();
  return params;
}

double energy(int N, const OscillatorParams& params) {
  require(N >= 0, "energy: N must be nonnegative");
  double nu = nu_of(params);
  return params.hbar * params.hbar / (2.0 * params.mass) *
         ((N + 1.0) * (N + 3.0) + 2.0 * nu * (N + 1.5)) / (params.R * params.R);
}

long long degeneracy(int N) {
  require(N >= 0, "degeneracy: N must be nonnegative");
  return static_cast<long long>(N + 1) * (N + 2) / 2;
}

SphericalQN::SphericalQN(int N_, int l_, int m_) : N(N_), l(l_), m(m_) {
  require(N >= 0 && l >= 0, "SphericalQN: N and l must be nonnegative");
  require(N - l >= 0 && (N - l) % 2 == 0, "SphericalQN: N - l must be even and nonnegative");
  require(std::abs(m) <= l, "SphericalQN: |m| must not exceed l");
}

CylindricalQN::CylindricalQN(int N_, int m_, int n3_) : N(N_), m(m_), n3(n3_) {
  require(N >= 0 && n3 >= 0, "CylindricalQN: N and n3 must be nonnegative");
  int r = N - std::abs(m) - n3;
  require(r >= 0 && r % 2 == 0, "CylindricalQN: N - |m| - n3 must be even and nonnegative");
}

SpherePoint SpherePoint::spherical(double chi, double theta, double phi) {
  SpherePoint p;
  p.system = CoordSystem::spherical;
  p.coords << chi, theta, phi, 0.0;
  return p;
}

SpherePoint SpherePoint::cylindrical(double alpha, double phi1, double phi2) {
  SpherePoint p;
  p.system = CoordSystem::cylindrical;
  p.coords << alpha, phi1, phi2, 0.0;
  return p;
}

SpherePoint SpherePoint::elliptic(double mu_e, double nu_e, double phi,
                                  double k) {
  SpherePoint p;
  p.system = CoordSystem::elliptic;
  p.coords << mu_e, nu_e, phi, 0.0;
  p.modulus = k;
  return p;
}

SpherePoint SpherePoint::ambient(double q0, double q1, double q2, double q3) {
  SpherePoint p;
  p.system = CoordSystem::ambient;
  p.coords << q0, q1, q2, q3;
  return p;
}

SpherePoint to_ambient(const SpherePoint& point, double R) {
  if (!(R > 0.0)) throw std::domain_error("to_ambient: R must be positive");
  switch (point.system) {
    case CoordSystem::ambient:
      return point;
    case CoordSystem::spherical: {
      double chi = point.coords[0], theta = point.coords[1],
             phi = point.coords[2];
      if (chi < -kRangeTol || chi > kHalfPi + kRangeTol)
        throw std::domain_error("to_ambient: chi outside [0, pi/2]");
      double sc = std::sin(chi), cc = std::cos(chi);
      return SpherePoint::ambient(R * cc, R * sc * std::sin(theta) * std::cos(phi),
                                  R * sc * std::sin(theta) * std::sin(phi),
                                  R * sc * std::cos(theta));
    }
    case CoordSystem::cylindrical: {
      double alpha = point.coords[0], phi1 = point.coords[1],
             phi2 = point.coords[2];
      if (alpha < -kRangeTol || alpha > kHalfPi + kRangeTol)
        throw std::domain_error("to_ambient: alpha outside [0, pi/2]");
      if (phi2 < -kHalfPi - kRangeTol || phi2 > kHalfPi + kRangeTol)
        throw std::domain_error("to_ambient: phi2 outside [-pi/2, pi/2]");
      double sa = std::sin(alpha), ca = std::cos(alpha);
      return SpherePoint::ambient(R * ca * std::cos(phi2),
                                  R * sa * std::cos(phi1),
                                  R * sa * std::sin(phi1),
                                  R * ca * std::sin(phi2));
    }
    case CoordSystem::elliptic: {
      double k = point.modulus;
      if (k < 0.0 || k >= 1.0)
        throw std::domain_error("to_ambient: elliptic modulus outside [0, 1)");
      double kp = std::sqrt(1.0 - k * k);
      auto em = specfun::jacobi_elliptic(point.coords[0], k);
      auto en = specfun::jacobi_elliptic(point.coords[1], kp);
      double phi = point.coords[2];
      return SpherePoint::ambient(R * em.dn * en.sn,
                                  R * em.sn * en.dn * std::cos(phi),
                                  R * em.sn * en.dn * std::sin(phi),
                                  R * em.cn * en.cn);
    }
  }
  throw std::invalid_argument("to_ambient: unknown coordinate system");
}

SpherePoint from_ambient(const SpherePoint& q, CoordSystem target, double k) {
  if (q.system != CoordSystem::ambient)
    throw std::invalid_argument("from_ambient: input must be ambient");
  if (target == CoordSystem::ambient) return q;
  double R = q.coords.norm();
  if (!(R > 0.0)) throw std::domain_error("from_ambient: zero ambient vector");
  Eigen::Vector4d u = q.coords / R;
  if (u[0] < -kRangeTol)
    throw std::domain_error("from_ambient: lower-hemisphere point (q0 < 0)");
  u[0] = std::max(u[0], 0.0);
  switch (target) {
    case CoordSystem::spherical: {
      double chi = std::acos(clamp_unit(u[0]));
      double s = std::hypot(u[1], u[2]);
      double theta = (s == 0.0 && u[3] == 0.0) ? 0.0 : std::atan2(s, u[3]);
      double phi = (u[1] == 0.0 && u[2] == 0.0) ? 0.0 : std::atan2(u[2], u[1]);
      return SpherePoint::spherical(chi, theta, phi);
    }
    case CoordSystem::cylindrical: {
      double sa = std::min(std::hypot(u[1], u[2]), 1.0);
      double alpha = std::asin(sa);
      double phi1 = (u[1] == 0.0 && u[2] == 0.0) ? 0.0 : std::atan2(u[2], u[1]);
      double phi2 = (u[0] == 0.0 && u[3] == 0.0) ? 0.0 : std::atan2(u[3], u[0]);
      return SpherePoint::cylindrical(alpha, phi1, phi2);
    }
    case CoordSystem::elliptic: {
      if (k < 0.0 || k >= 1.0)
        throw std::domain_error("from_ambient: elliptic modulus outside [0, 1)");
      double kp = std::sqrt(1.0 - k * k);
      double rho2 = u[1] * u[1] + u[2] * u[2];
      double t0 = u[0] * u[0];
      // sn^2(mu_e, k) solves k^2 s^2 - s (1 + k^2 rho^2 - k'^2 t0) + rho^2 = 0;
      // the smaller root keeps mu_e within [0, K].
      double minus_b = 1.0 + k * k * rho2 - kp * kp * t0;
      double disc = std::sqrt(std::max(0.0, minus_b * minus_b - 4.0 * k * k * rho2));
      double s = std::clamp(2.0 * rho2 / (minus_b + disc), 0.0, 1.0);
      double t = std::clamp(t0 / (1.0 - k * k * s), 0.0, 1.0);
      double mu_e = specfun::inverse_sn(std::sqrt(s), k);
      double nu_e = specfun::inverse_sn(std::sqrt(t), kp);
      if (u[3] < 0.0) {
        if (k == 0.0)
          throw std::domain_error("from_ambient: q3 < 0 unreachable at zero modulus");
        nu_e = 2.0 * specfun::complete_elliptic_k(kp) - nu_e;
      }
      double phi = (u[1] == 0.0 && u[2] == 0.0) ? 0.0 : std::atan2(u[2], u[1]);
      return SpherePoint::elliptic(mu_e, nu_e, phi, k);
    }
    default:
      throw std::invalid_argument("from_ambient: unknown target system");
  }
}

SpherePoint as_system(const SpherePoint& point, CoordSystem target,
                      const OscillatorParams& params, double k) {
  if (point.system == target) return point;
  SpherePoint amb = to_ambient(point, params.R);
  return from_ambient(amb, target, k);
}

double quasiradial_z(const SphericalQN& qn, double nu, double chi) {
  if (nu < 0.0) throw std::domain_error("quasiradial_z: nu must be nonnegative");
  const int N = qn.N, l = qn.l, nr = qn.n_r();
  double log_pref =
      0.5 * (std::log(2.0 * (N + nu + 2.0)) + std::lgamma(nr + 1.0) +
             std::lgamma(0.5 * (N + l) + nu + 2.0) -
             std::lgamma(0.5 * (N + l + 3.0)) -
             std::lgamma(0.5 * (N - l + 3.0) + nu));
  double s = std::max(std::sin(chi), 0.0), c = std::cos(chi);
  double radial = (l > 0) ? std::pow(s, l) : 1.0;
  double cosfac = (c > 0.0) ? std::exp((nu + 1.0) * std::log(c)) : 0.0;
  double poly = specfun::jacobi_p(nr, l + 0.5, nu + 0.5, std::cos(2.0 * chi));
  return std::exp(log_pref) * radial * cosfac * poly;
}

double cyl_phi(const CylindricalQN& qn, double nu, double alpha) {
  if (nu < 0.0) throw std::domain_error("cyl_phi: nu must be nonnegative");
  const int N = qn.N, am = std::abs(qn.m), n3 = qn.n3, n = qn.n();
  double log_pref =
      0.5 * (std::log(2.0 * (N + nu + 2.0)) + std::lgamma(n + 1.0) +
             std::lgamma(0.5 * (N + am + n3) + nu + 2.0) -
             std::lgamma(0.5 * (N + am - n3) + 1.0) -
             std::lgamma(0.5 * (N - am + n3) + nu + 2.0));
  double s = std::max(std::sin(alpha), 0.0), c = std::cos(alpha);
  double radial = (am > 0) ? std::pow(s, am) : 1.0;
  double cosfac = (c > 0.0) ? std::exp((n3 + nu + 1.0) * std::log(c)) : 0.0;
  double poly = specfun::jacobi_p(n, am, n3 + nu + 1.0, std::cos(2.0 * alpha));
  return std::exp(log_pref) * radial * cosfac * poly;
}

double cyl_k(int n3, double nu, double phi2) {
  require(n3 >= 0, "cyl_k: n3 must be nonnegative");
  if (nu < 0.0) throw std::domain_error("cyl_k: nu must be nonnegative");
  double log_pref =
      0.5 * (std::log(n3 + nu + 1.0) + std::lgamma(n3 + 2.0 * nu + 2.0) +
             std::lgamma(n3 + 1.0)) -
      (nu + 0.5) * std::log(2.0) - std::lgamma(n3 + nu + 1.5);
  double c = std::cos(phi2);
  double cosfac = (c > 0.0) ? std::exp((nu + 1.0) * std::log(c)) : 0.0;
  double poly = specfun::jacobi_p(n3, nu + 0.5, nu + 0.5, std::sin(phi2));
  return std::exp(log_pref) * cosfac * poly;
}

std::complex<double> wavefunction(const SphericalQN& qn,
                                  const OscillatorParams& params,
                                  const SpherePoint& point) {
  params.validate();
  SpherePoint p = as_system(point, CoordSystem::spherical, params);
  double nu = nu_of(params);
  double z = quasiradial_z(qn, nu, p.coords[0]);
  std::complex<double> y =
      specfun::spherical_harmonic(qn.l, qn.m, p.coords[1], p.coords[2]);
  return z * y / std::sqrt(params.R * params.R * params.R);
}

std::complex<double> wavefunction(const CylindricalQN& qn,
                                  const OscillatorParams& params,
                                  const SpherePoint& point) {
  params.validate();
  SpherePoint p = as_system(point, CoordSystem::cylindrical, params);
  double nu = nu_of(params);
  double phi_part = cyl_phi(qn, nu, p.coords[0]);
  double k_part = cyl_k(qn.n3, nu, p.coords[2]);
  std::complex<double> azimuth(std::cos(qn.m * p.coords[1]),
                               std::sin(qn.m * p.coords[1]));
  return phi_part * k_part * azimuth /
         std::sqrt(2.0 * M_PI * params.R * params.R * params.R);
}

double potential(const SpherePoint& point, const OscillatorParams& params) {
  params.validate();
  double pref = 0.5 * params.mass * params.omega * params.omega * params.R * params.R;
  double axis = 0.0;  // cos(chi) of the point, the distance factor to the equator
  switch (point.system) {
    case CoordSystem::spherical:
      axis = std::cos(point.coords[0]);
      break;
    case CoordSystem::cylindrical:
      axis = std::cos(point.coords[0]) * std::cos(point.coords[2]);
      break;
    case CoordSystem::elliptic: {
      double k = point.modulus;
      if (k < 0.0 || k >= 1.0)
        throw std::domain_error("potential: elliptic modulus outside [0, 1)");
      double kp = std::sqrt(1.0 - k * k);
      axis = specfun::jacobi_elliptic(point.coords[0], k).dn *
             specfun::jacobi_elliptic(point.coords[1], kp).sn;
      break;
    }
    case CoordSystem::ambient: {
      double norm = point.coords.norm();
      if (!(norm > 0.0))
        throw std::domain_error("potential: zero ambient vector");
      axis = point.coords[0] / norm;
      break;
    }
  }
  if (std::abs(axis) < 1e-12)
    throw std::domain_error("potential: singular on the equator");
  return pref * (1.0 / (axis * axis) - 1.0);
}

double limit_reference(LimitKind kind, const SphericalQN& qn,
                       const OscillatorParams& params, double coordinate) {
  const int N = qn.N, l = qn.l;
  switch (kind) {
    case LimitKind::flat_radial: {
      double lambda = flat_density(params);
      double r = coordinate;
      double log_pref = 0.25 * std::log(lambda / M_PI) +
                        0.5 * ((l + 2.0) * std::log(2.0) + std::log(lambda) +
                               specfun::log_double_factorial(N - l) -
                               specfun::log_double_factorial(N + l + 1));
      return std::exp(log_pref) * std::pow(std::sqrt(lambda) * r, l) *
             std::exp(-0.5 * lambda * r * r) *
             specfun::classical_poly(specfun::PolyKind::laguerre, qn.n_r(),
                                     l + 0.5, lambda * r * r);
    }
    case LimitKind::free_z: {
      int J = N + 1;
      double chi = coordinate;
      double log_pref = (l + 1.0) * std::log(2.0) + std::lgamma(l + 1.0) -
                        0.5 * std::log(M_PI) +
                        0.5 * (std::log(J + 1.0) + std::lgamma(J - l + 1.0) -
                               std::lgamma(J + l + 2.0));
      return std::exp(log_pref) * std::pow(std::sin(chi), l) *
             specfun::classical_poly(specfun::PolyKind::gegenbauer, J - l,
                                     l + 1.0, std::cos(chi));
    }
    default:
      throw std::invalid_argument(
          "limit_reference: kind requires cylindrical quantum numbers");
  }
}

double limit_reference(LimitKind kind, const CylindricalQN& qn,
                       const OscillatorParams& params, double coordinate) {
  const int N = qn.N, am = std::abs(qn.m), n3 = qn.n3, n = qn.n();
  switch (kind) {
    case LimitKind::flat_cyl_rho: {
      double lambda = flat_density(params);
      double rho = coordinate;
      double log_pref = 0.5 * (std::log(2.0 * lambda) + std::lgamma(n + 1.0) -
                               std::lgamma(0.5 * (N + am - n3) + 1.0));
      return std::exp(log_pref) * std::exp(-0.5 * lambda * rho * rho) *
             std::pow(std::sqrt(lambda) * rho, am) *
             specfun::classical_poly(specfun::PolyKind::laguerre, n, am,
                                     lambda * rho * rho);
    }
    case LimitKind::flat_cyl_z: {
      double lambda = flat_density(params);
      double z = coordinate;
      double log_pref = 0.25 * std::log(lambda / M_PI) -
                        0.5 * (n3 * std::log(2.0) + std::lgamma(n3 + 1.0));
      return std::exp(log_pref) * std::exp(-0.5 * lambda * z * z) *
             specfun::classical_poly(specfun::PolyKind::hermite, n3, 0.0,
                                     std::sqrt(lambda) * z);
    }
    case LimitKind::free_k:
      // Sign aligned with the phase convention of cyl_k.
      return (n3 % 2 == 0 ? 1.0 : -1.0) * std::sqrt(2.0 / M_PI) *
             std::sin((n3 + 1.0) * (coordinate + kHalfPi));
    case LimitKind::free_phi: {
      double alpha = coordinate;
      double log_pref =
          0.5 * (std::log(2.0 * (N + 2.0)) + std::lgamma(n + 1.0) +
                 std::lgamma(0.5 * (N + n3 + am) + 2.0) -
                 std::lgamma(0.5 * (N - am + n3) + 2.0) -
                 std::lgamma(0.5 * (N + am - n3) + 1.0));
      return std::exp(log_pref) * std::pow(std::sin(alpha), am) *
             std::pow(std::cos(alpha), n3 + 1.0) *
             specfun::jacobi_p(n, am, n3 + 1.0, std::cos(2.0 * alpha));
    }
    default:
      throw std::invalid_argument(
          "limit_reference: kind requires spherical quantum numbers");
  }
}

}  // namespace oscsphere::bases
