#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oscsphere::verify {

// Outcome of one numerical check. `parameters` echoes the inputs (and any
// per-step diagnostics) as ordered key-value text so serialized reports are
// reproducible byte for byte; `runtime_ms` is the only field that varies
// between runs and is therefore left out of serialized output.
struct CheckReport {
  std::string check_name;
  std::vector<std::pair<std::string, std::string>> parameters;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;
};

// Deterministic 64-bit linear congruential generator
// (state <- state * 6364136223846793005 + 1442695040888963407),
// doubles taken from the top 53 bits. Seeded streams make every sampled
// check reproducible across platforms.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  double next_double();  // uniform in [0, 1)

 private:
  std::uint64_t state_;
};

enum class GramBasis { spherical_z, cyl_phi, cyl_k, full_3d };

// Gram matrix of a basis family against the exact identity.
//  spherical_z: quasiradial overlaps on [0, pi/2] with weight sin^2(chi),
//               families l in {0,1,2,3}, degrees up to max_index.
//  cyl_phi:     alpha overlaps with weight sin(alpha)cos(alpha), families
//               (|m|, n3) in {0,1,2}^2.
//  cyl_k:       phi2 overlaps on [-pi/2, pi/2], degrees up to max_index.
//  full_3d:     complete wavefunctions of both coordinate systems over the
//               hemisphere, every state with N <= min(max_index, 12).
// pre: 0 <= max_index <= 24, nu >= 0.
CheckReport check_orthonormality(GramBasis basis, int max_index, double nu);

// Residual of the quasiradial differential equation on a uniform grid over
// chi in [0.05, pi/2 - 0.05], derivatives taken with five-point central
// differences at h = 1e-4, scaled by the largest participating term.
// `energy_scale` multiplies the eigenvalue before forming the residual, so
// values away from 1 must push the residual above the tolerance.
// pre: gridpoints >= 32.
CheckReport check_ode_residual(int N, int l, double nu, int gridpoints,
                               double energy_scale = 1.0);

// Expands each spherical state of level N and azimuth m over the cylindrical
// states through the interbasis matrix and compares both sides at `npoints`
// seeded random hemisphere points.
// pre: 0 <= N <= 10, |m| <= N, npoints >= 1.
CheckReport check_reconstruction(int N, int m, double nu, int npoints,
                                 std::uint64_t seed);

enum class LimitCheck { flat_energy, flat_w, free_w, flat_basis, free_basis };

// Contraction limits along an ascending parameter schedule (radius R for the
// flat kinds, nu for flat_w; the free kinds take a single dummy entry).
// Errors must shrink along the schedule; any step growing by more than a
// factor of 3 reports max_error = DBL_MAX so the violation cannot pass.
// Per-step errors are recorded in `parameters`.
CheckReport check_limits(LimitCheck kind, const std::vector<double>& schedule);

// Relative deviation of 2*mu*R^2*E/hbar^2 + nu^2 + nu + 1 from (N+nu+2)^2
// over all N <= N_max and every nu in nu_list.
CheckReport check_spectrum_identity(int N_max, const std::vector<double>& nu_list);

// Agreement of the two tridiagonal routes to the elliptic basis over all
// N <= N_max, 0 <= m <= N and every a in a_list: eigenvalue mismatch,
// recurrence residuals of both operators, and the deviation of the
// cylindrical coefficients from the transported spherical ones.
// pre: N_max <= 16, every a >= -1.
CheckReport check_elliptic_consistency(int N_max, double nu,
                                       const std::vector<double>& a_list);

enum class Suite { all, bases, interbasis, elliptic, limits };

// Check batteries at default parameters, grouped by subject. `energy_scale`
// is forwarded to the differential-equation checks; anything away from 1
// must fail the suite.
std::vector<CheckReport> run_suite(Suite suite, double energy_scale = 1.0);
std::vector<CheckReport> default_suite(double energy_scale = 1.0);

}  // namespace oscsphere::verify
