#pragma once

#include <complex>

#include <Eigen/Dense>

namespace oscsphere::bases {

struct OscillatorParams {
  double R = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  void validate() const;
};

// nu = (sqrt(1 + 4 mass^2 omega^2 R^4 / hbar^2) - 1) / 2; omega = 0 gives the
// free-motion value 0.
double nu_of(const OscillatorParams& params);

// Flat-limit density lambda = mass * omega / hbar.
double flat_density(const OscillatorParams& params);

// Parameters whose nu_of equals the requested nu, with omega solved from
// mass^2 omega^2 R^4 / hbar^2 = nu (nu + 1).
OscillatorParams params_for_nu(double nu, double R = 1.0, double mass = 1.0,
                               double hbar = 1.0);

// E_N = (hbar^2 / 2 mass) [(N+1)(N+3) + 2 nu (N + 3/2)] / R^2.
double energy(int N, const OscillatorParams& params);

// (N+1)(N+2)/2, the shared count of spherical and cylindrical states.
long long degeneracy(int N);

struct SphericalQN {
  int N, l, m;
  SphericalQN(int N_, int l_, int m_);
  int n_r() const { return (N - l) / 2; }
};

struct CylindricalQN {
  int N, m, n3;
  CylindricalQN(int N_, int m_, int n3_);
  int n() const { return (N - std::abs(m) - n3) / 2; }
};

enum class CoordSystem { spherical, cylindrical, elliptic, ambient };

// Point on the upper hemisphere. Coordinate layout by system:
//   spherical:   coords = (chi, theta, phi, 0), chi in [0, pi/2]
//   cylindrical: coords = (alpha, phi1, phi2, 0), alpha in [0, pi/2],
//                phi2 in [-pi/2, pi/2]
//   elliptic:    coords = (mu_e, nu_e, phi, 0) with modulus k;
//                mu_e in [0, K(k)], nu_e in [0, 2K(k')]
//   ambient:     coords = (q0, q1, q2, q3) on the sphere of radius R
struct SpherePoint {
  CoordSystem system = CoordSystem::spherical;
  Eigen::Vector4d coords = Eigen::Vector4d::Zero();
  double modulus = 0.0;

  static SpherePoint spherical(double chi, double theta, double phi);
  static SpherePoint cylindrical(double alpha, double phi1, double phi2);
  static SpherePoint elliptic(double mu_e, double nu_e, double phi, double k);
  static SpherePoint ambient(double q0, double q1, double q2, double q3);
};

SpherePoint to_ambient(const SpherePoint& point, double R);

// Inverts to_ambient on the upper hemisphere (q0 >= 0); the sphere radius is
// taken from the ambient norm. k supplies the elliptic modulus when the
// target is elliptic and is ignored otherwise.
SpherePoint from_ambient(const SpherePoint& q, CoordSystem target,
                         double k = 0.0);

// Converts to the target system through the ambient chart, using R from
// params for non-ambient input.
SpherePoint as_system(const SpherePoint& point, CoordSystem target,
                      const OscillatorParams& params, double k = 0.0);

// Quasiradial factor Z_{Nl}^nu(chi), orthonormal with weight sin^2(chi) on
// [0, pi/2]; the m component of qn is ignored.
double quasiradial_z(const SphericalQN& qn, double nu, double chi);

// Phi_{N|m|n3}^nu(alpha), orthonormal with weight sin(alpha) cos(alpha).
double cyl_phi(const CylindricalQN& qn, double nu, double alpha);

// K_{n3}^nu(phi2), orthonormal with unit weight on [-pi/2, pi/2].
double cyl_k(int n3, double nu, double phi2);

// Full wavefunctions including the 1/sqrt(R^3) and angular factors.
std::complex<double> wavefunction(const SphericalQN& qn,
                                  const OscillatorParams& params,
                                  const SpherePoint& point);
std::complex<double> wavefunction(const CylindricalQN& qn,
                                  const OscillatorParams& params,
                                  const SpherePoint& point);

// Oscillator potential evaluated in the point's own coordinate form; every
// form agrees for the same geometric point. Throws on the equatorial
// singular locus.
double potential(const SpherePoint& point, const OscillatorParams& params);

enum class LimitKind {
  flat_radial,
  flat_cyl_rho,
  flat_cyl_z,
  free_z,
  free_k,
  free_phi
};

// Closed-form limiting functions for convergence tests. Spherical kinds:
// flat_radial (coordinate r), free_z (coordinate chi). Cylindrical kinds:
// flat_cyl_rho (rho), flat_cyl_z (z), free_k (phi2), free_phi (alpha).
double limit_reference(LimitKind kind, const SphericalQN& qn,
                       const OscillatorParams& params, double coordinate);
double limit_reference(LimitKind kind, const CylindricalQN& qn,
                       const OscillatorParams& params, double coordinate);

}  // namespace oscsphere::bases
