#include "doctest.h"

#include <cfloat>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscsphere/verify.hpp"

using namespace oscsphere::verify;

namespace {

std::string param_of(const CheckReport& report, const std::string& key) {
  for (const auto& [k, v] : report.parameters)
    if (k == key) return v;
  return {};
}

}  // namespace

TEST_CASE("Lcg is the documented generator") {
  Lcg rng(42);
  std::uint64_t expected =
      42ull * 6364136223846793005ull + 1442695040888963407ull;
  CHECK(rng.next_u64() == expected);
  expected = expected * 6364136223846793005ull + 1442695040888963407ull;
  CHECK(rng.next_u64() == expected);

  Lcg a(7), b(7);
  for (int i = 0; i < 100; ++i) {
    double x = a.next_double();
    CHECK(x == b.next_double());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("orthonormality checks pass for every family") {
  for (GramBasis basis : {GramBasis::spherical_z, GramBasis::cyl_phi,
                          GramBasis::cyl_k}) {
    CheckReport report = check_orthonormality(basis, 16, 2.5);
    CHECK(report.passed);
    CHECK(report.max_error <= 1e-8);
    CHECK(report.tolerance == 1e-8);
  }
  CheckReport full = check_orthonormality(GramBasis::full_3d, 4, 1.0);
  CHECK(full.passed);
  CHECK(full.max_error <= 1e-7);
  CHECK(param_of(full, "basis") == "full_3d");
  CHECK(param_of(full, "nu") == "1");

  CHECK_THROWS_AS(check_orthonormality(GramBasis::spherical_z, 30, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_orthonormality(GramBasis::spherical_z, 16, -1.0),
                  std::invalid_argument);
}

TEST_CASE("ode residual is small exactly at the true eigenvalue") {
  CheckReport good = check_ode_residual(0, 0, 1.0, 64);
  CHECK(good.passed);
  CHECK(good.max_error < 1e-6);

  CheckReport shifted = check_ode_residual(8, 4, 0.618, 64, 1.01);
  CHECK_FALSE(shifted.passed);
  CHECK(shifted.max_error > 1e-3);

  CHECK_THROWS_AS(check_ode_residual(2, 0, 1.0, 16), std::invalid_argument);
  CHECK_THROWS_AS(check_ode_residual(3, 2, 1.0, 64), std::invalid_argument);
}

TEST_CASE("reconstruction collapses to one state when N equals |m|") {
  CheckReport single = check_reconstruction(3, 3, 1.5, 50, 99);
  CHECK(single.passed);
  CHECK(single.max_error < 1e-13);

  CheckReport general = check_reconstruction(6, 0, 2.0, 100, 20240601);
  CHECK(general.passed);
  CHECK(general.max_error < 1e-8);

  CheckReport repeat = check_reconstruction(6, 0, 2.0, 100, 20240601);
  CHECK(repeat.max_error == general.max_error);

  CheckReport other_seed = check_reconstruction(6, 0, 2.0, 100, 7);
  CHECK(other_seed.max_error != general.max_error);

  CHECK_THROWS_AS(check_reconstruction(12, 0, 1.0, 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_reconstruction(4, 5, 1.0, 10, 1),
                  std::invalid_argument);
}

TEST_CASE("limit checks shrink along their schedules") {
  CheckReport flat_e = check_limits(LimitCheck::flat_energy, {100.0, 1000.0});
  CHECK(flat_e.passed);
  CHECK(flat_e.max_error < 1e-4);
  double e0 = std::stod(param_of(flat_e, "error_0"));
  double e1 = std::stod(param_of(flat_e, "error_1"));
  CHECK(e1 < e0);

  CheckReport flat_w = check_limits(LimitCheck::flat_w, {1e4, 1e5, 1e6});
  CHECK(flat_w.passed);
  double w0 = std::stod(param_of(flat_w, "error_0"));
  double w1 = std::stod(param_of(flat_w, "error_1"));
  double w2 = std::stod(param_of(flat_w, "error_2"));
  CHECK(w0 / w1 > 3.0);
  CHECK(w0 / w1 < 30.0);
  CHECK(w1 / w2 > 3.0);
  CHECK(w1 / w2 < 30.0);

  CheckReport free_w = check_limits(LimitCheck::free_w, {0.0});
  CHECK(free_w.passed);
  CHECK(free_w.max_error < 1e-10);

  CheckReport free_b = check_limits(LimitCheck::free_basis, {0.0});
  CHECK(free_b.passed);
  CHECK(free_b.max_error < 1e-10);

  CHECK_THROWS_AS(check_limits(LimitCheck::flat_energy, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_limits(LimitCheck::flat_energy, {1000.0, 100.0}),
                  std::invalid_argument);
}

TEST_CASE("spectrum identity tightens as nu decreases") {
  CheckReport at_zero = check_spectrum_identity(30, {0.0});
  CHECK(at_zero.passed);
  CHECK(at_zero.max_error < 1e-14);

  CheckReport golden = check_spectrum_identity(30, {0.618});
  CHECK(golden.max_error < 1e-12);

  CheckReport large = check_spectrum_identity(30, {1000.0});
  CHECK(large.max_error < 1e-11);
}

TEST_CASE("elliptic consistency bundles its three sub-errors") {
  CheckReport report =
      check_elliptic_consistency(6, 2.0, {-0.5, 0.0, 0.25, 1.0});
  CHECK(report.passed);
  CHECK(!param_of(report, "lambda_mismatch").empty());
  CHECK(!param_of(report, "recurrence_residual").empty());
  CHECK(!param_of(report, "coefficient_deviation").empty());
  CHECK(std::stod(param_of(report, "lambda_mismatch")) < 1e-9);
  CHECK(std::stod(param_of(report, "recurrence_residual")) < 1e-10);
  CHECK(std::stod(param_of(report, "coefficient_deviation")) < 1e-8);
}

TEST_CASE("suites pass at scale 1 and fail under an energy bias") {
  std::vector<CheckReport> reports = default_suite();
  CHECK(reports.size() >= 15);
  for (const CheckReport& r : reports) {
    CHECK(r.passed);
    CHECK(r.passed == (r.max_error <= r.tolerance));
    CHECK(r.runtime_ms >= 0.0);
  }

  std::vector<CheckReport> biased = run_suite(Suite::bases, 1.01);
  bool any_failed = false;
  for (const CheckReport& r : biased) {
    if (!r.passed) {
      any_failed = true;
      CHECK(r.check_name == "ode_residual");
    }
  }
  CHECK(any_failed);

  std::vector<CheckReport> limits = run_suite(Suite::limits);
  for (const CheckReport& r : limits) {
    CHECK(r.check_name == "limits");
    CHECK(r.passed);
  }
}

TEST_CASE("reports are deterministic across repeated runs") {
  CheckReport first = check_orthonormality(GramBasis::spherical_z, 16, 0.0);
  CheckReport second = check_orthonormality(GramBasis::spherical_z, 16, 0.0);
  CHECK(first.max_error == second.max_error);
  CHECK(first.parameters == second.parameters);
  CHECK(first.check_name == second.check_name);
}
