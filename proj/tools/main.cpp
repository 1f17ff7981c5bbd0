#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "CLI11.hpp"

#include "oscsphere/bases.hpp"
#include "oscsphere/elliptic.hpp"
#include "oscsphere/interbasis.hpp"
#include "oscsphere/output.hpp"
#include "oscsphere/verify.hpp"

namespace {

using oscsphere::output::format_double;
using oscsphere::output::JsonWriter;
using KV = std::vector<std::pair<std::string, std::string>>;

struct Cell {
  std::string text;
  bool numeric = true;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

Cell num_cell(double v) { return {format_double(v), true}; }
Cell int_cell(long long v) { return {std::to_string(v), true}; }
Cell text_cell(std::string v) { return {std::move(v), false}; }

void write_json_cell(JsonWriter& w, const Cell& cell) {
  if (cell.numeric)
    w.value_raw(cell.text);
  else
    w.value_string(cell.text);
}

void json_table(JsonWriter& w, const Table& table) {
  w.begin_object();
  w.key("columns");
  w.begin_array();
  for (const auto& c : table.columns) w.value_string(c);
  w.end_array();
  w.key("rows");
  w.begin_array();
  for (const auto& row : table.rows) {
    w.begin_array();
    for (const auto& cell : row) write_json_cell(w, cell);
    w.end_array();
  }
  w.end_array();
  w.end_object();
}

// JSON emissions wrap the payload in the envelope; CSV emissions carry the
// same metadata as `# key=value` preamble lines before the header row.
void emit(const std::string& command, const KV& params,
          const std::string& format, const Table& csv_table,
          const std::function<void(JsonWriter&)>& json_data) {
  if (format == "csv") {
    std::string out = "# command=" + command + "\n# schema_version=1\n";
    for (const auto& [k, v] : params) out += "# " + k + "=" + v + "\n";
    std::vector<std::vector<std::string>> rows;
    rows.reserve(csv_table.rows.size());
    for (const auto& row : csv_table.rows) {
      std::vector<std::string> cells;
      cells.reserve(row.size());
      for (const auto& cell : row) cells.push_back(cell.text);
      rows.push_back(std::move(cells));
    }
    out += oscsphere::output::to_csv(csv_table.columns, rows);
    std::fputs(out.c_str(), stdout);
    return;
  }
  JsonWriter w;
  w.begin_object();
  w.key("command");
  w.value_string(command);
  w.key("parameters");
  w.begin_object();
  for (const auto& [k, v] : params) {
    w.key(k);
    w.value_string(v);
  }
  w.end_object();
  w.key("schema_version");
  w.value_string("1");
  w.key("data");
  json_data(w);
  w.end_object();
  std::fputs(w.str().c_str(), stdout);
}

void emit_table(const std::string& command, const KV& params,
                const std::string& format, const Table& table) {
  emit(command, params, format, table,
       [&](JsonWriter& w) { json_table(w, table); });
}

struct PhysicalFlags {
  double nu = 0.0;
  double R = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  CLI::Option* nu_opt = nullptr;
  CLI::Option* omega_opt = nullptr;

  void attach(CLI::App* cmd) {
    nu_opt = cmd->add_option("--nu", nu,
                             "Oscillator parameter nu (primary; mutually "
                             "exclusive with --omega)");
    cmd->add_option("--R", R, "Sphere radius");
    cmd->add_option("--mass", mass, "Particle mass mu");
    omega_opt = cmd->add_option("--omega", omega,
                                "Oscillator frequency; nu is derived via the "
                                "defining relation");
    cmd->add_option("--hbar", hbar, "Planck constant");
  }

  struct Resolved {
    oscsphere::bases::OscillatorParams params;
    double nu = 0.0;
  };

  Resolved resolve(KV& meta) const {
    if (nu_opt->count() > 0 && omega_opt->count() > 0)
      throw std::invalid_argument("pass either --nu or --omega, not both");
    Resolved out;
    if (omega_opt->count() > 0) {
      out.params = {R, mass, omega, hbar};
      out.params.validate();
      out.nu = oscsphere::bases::nu_of(out.params);
      meta.emplace_back("nu_source", "derived");
    } else {
      if (nu < 0.0) throw std::invalid_argument("--nu must be >= 0");
      out.params = oscsphere::bases::params_for_nu(nu, R, mass, hbar);
      out.nu = nu;
      meta.emplace_back("nu_source", "flag");
    }
    meta.emplace_back("nu", format_double(out.nu));
    meta.emplace_back("R", format_double(out.params.R));
    meta.emplace_back("mass", format_double(out.params.mass));
    meta.emplace_back("omega", format_double(out.params.omega));
    meta.emplace_back("hbar", format_double(out.params.hbar));
    return out;
  }
};

std::pair<int, int> parse_level_range(const std::string& text) {
  auto parse_int = [](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("--N: empty level value");
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (*end != '\0' || v < 0 || v > 1000)
      throw std::invalid_argument("--N: expected a level in [0, 1000], got '" +
                                  s + "'");
    return static_cast<int>(v);
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int n = parse_int(text);
    return {n, n};
  }
  int lo = parse_int(text.substr(0, dots));
  int hi = parse_int(text.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("--N: range must be ascending");
  return {lo, hi};
}

int quadrature_start_nodes() {
  const char* env = std::getenv("OSC_SPHERE_QUAD_NODES");
  if (env == nullptr) return 200;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*env == '\0' || *end != '\0' || v <= 0 || v > 100000)
    throw std::invalid_argument(
        "OSC_SPHERE_QUAD_NODES must be a positive integer");
  return static_cast<int>(v);
}

std::vector<double> parse_coord_list(const std::string& text, size_t expected) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(',', pos);
    std::string piece = text.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    if (piece.empty())
      throw std::invalid_argument("--coords: empty component in '" + text +
                                  "'");
    char* end = nullptr;
    double v = std::strtod(piece.c_str(), &end);
    if (*end != '\0')
      throw std::invalid_argument("--coords: bad number '" + piece + "'");
    out.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (out.size() != expected)
    throw std::invalid_argument("--coords: expected " +
                                std::to_string(expected) + " components, got " +
                                std::to_string(out.size()));
  return out;
}

int run_spectrum(const std::string& n_range, const PhysicalFlags& phys,
                 const std::string& format) {
  auto [lo, hi] = parse_level_range(n_range);
  KV params;
  params.emplace_back("N", n_range);
  auto resolved = phys.resolve(params);
  Table table;
  table.columns = {"N", "energy", "degeneracy"};
  for (int N = lo; N <= hi; ++N)
    table.rows.push_back({int_cell(N),
                          num_cell(oscsphere::bases::energy(N, resolved.params)),
                          int_cell(oscsphere::bases::degeneracy(N))});
  emit_table("spectrum", params, format, table);
  return 0;
}

int run_interbasis(int N, int m, const std::string& method,
                   const PhysicalFlags& phys, const std::string& format) {
  KV params;
  params.emplace_back("N", std::to_string(N));
  params.emplace_back("m", std::to_string(m));
  params.emplace_back("method", method);
  auto resolved = phys.resolve(params);
  oscsphere::interbasis::WMethod wm = oscsphere::interbasis::WMethod::f43;
  int start_nodes = 200;
  if (method == "racah") {
    wm = oscsphere::interbasis::WMethod::racah;
  } else if (method == "quadrature") {
    wm = oscsphere::interbasis::WMethod::quadrature;
    start_nodes = quadrature_start_nodes();
    params.emplace_back("quad_nodes", std::to_string(start_nodes));
  }
  auto block =
      oscsphere::interbasis::w_block(N, m, resolved.nu, wm, start_nodes);
  const auto& w = block.entries;
  Eigen::MatrixXd gram = w.transpose() * w;
  gram.diagonal().array() -= 1.0;
  double defect = gram.array().abs().maxCoeff();
  gram = w * w.transpose();
  gram.diagonal().array() -= 1.0;
  defect = std::max(defect, gram.array().abs().maxCoeff());
  params.emplace_back("unitarity_defect", format_double(defect));

  Table table;
  table.columns = {"l", "n3", "w"};
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = 0; j < w.cols(); ++j)
      table.rows.push_back({int_cell(block.l_index[i]),
                            int_cell(block.n3_index[j]), num_cell(w(i, j))});
  emit("interbasis", params, format, table, [&](JsonWriter& jw) {
    jw.begin_object();
    jw.key("l_index");
    jw.begin_array();
    for (int l : block.l_index) jw.value_int(l);
    jw.end_array();
    jw.key("n3_index");
    jw.begin_array();
    for (int n3 : block.n3_index) jw.value_int(n3);
    jw.end_array();
    jw.key("entries");
    jw.begin_array();
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      jw.begin_array();
      for (Eigen::Index j = 0; j < w.cols(); ++j) jw.value_number(w(i, j));
      jw.end_array();
    }
    jw.end_array();
    jw.end_object();
  });
  return 0;
}

std::string join_vector(const Eigen::VectorXd& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += format_double(v[i]);
  }
  return out;
}

int run_elliptic(int N, int m, double a, const PhysicalFlags& phys,
                 const std::string& format) {
  if (a < -1.0) throw std::invalid_argument("--a must be >= -1");
  KV params;
  params.emplace_back("N", std::to_string(N));
  params.emplace_back("m", std::to_string(m));
  params.emplace_back("a", format_double(a));
  auto resolved = phys.resolve(params);
  oscsphere::elliptic::EllipticParams ep(a, resolved.params.R);
  params.emplace_back("modulus_k", format_double(ep.k));

  auto sph = oscsphere::elliptic::solve_spherical_form(N, m, resolved.nu, ep);
  auto cyl =
      oscsphere::elliptic::solve_cylindrical_form(N, m, resolved.nu, ep);
  auto block = oscsphere::interbasis::w_block(
      N, m, resolved.nu, oscsphere::interbasis::WMethod::f43);
  auto matched = oscsphere::elliptic::match_solutions(sph, cyl, block);
  auto sop =
      oscsphere::elliptic::spherical_form_operator(N, m, resolved.nu, ep);
  auto cop =
      oscsphere::elliptic::cylindrical_form_operator(N, m, resolved.nu, ep);

  double mismatch = 0.0;
  for (size_t q = 0; q < sph.size(); ++q)
    mismatch = std::max(mismatch,
                        std::abs(sph[q].lambda_q - cyl[q].lambda_q));
  params.emplace_back("lambda_mismatch", format_double(mismatch));

  Table table;
  table.columns = {"q",
                   "lambda",
                   "residual_spherical",
                   "residual_cylindrical",
                   "T",
                   "U"};
  std::vector<std::pair<double, double>> residuals;
  for (const auto& sol : matched) {
    double rs = oscsphere::elliptic::recurrence_residual(sop, sol.lambda_q,
                                                         sol.T);
    double rc = oscsphere::elliptic::recurrence_residual(cop, sol.lambda_q,
                                                         sol.U);
    residuals.emplace_back(rs, rc);
    table.rows.push_back({int_cell(sol.q), num_cell(sol.lambda_q), num_cell(rs),
                          num_cell(rc), text_cell(join_vector(sol.T)),
                          text_cell(join_vector(sol.U))});
  }
  emit("elliptic", params, format, table, [&](JsonWriter& jw) {
    jw.begin_array();
    for (size_t q = 0; q < matched.size(); ++q) {
      const auto& sol = matched[q];
      jw.begin_object();
      jw.key("q");
      jw.value_int(sol.q);
      jw.key("lambda");
      jw.value_number(sol.lambda_q);
      jw.key("T");
      jw.begin_array();
      for (Eigen::Index i = 0; i < sol.T.size(); ++i)
        jw.value_number(sol.T[i]);
      jw.end_array();
      jw.key("U");
      jw.begin_array();
      for (Eigen::Index i = 0; i < sol.U.size(); ++i)
        jw.value_number(sol.U[i]);
      jw.end_array();
      jw.key("residual_spherical");
      jw.value_number(residuals[q].first);
      jw.key("residual_cylindrical");
      jw.value_number(residuals[q].second);
      jw.end_object();
    }
    jw.end_array();
  });
  return 0;
}

int run_verify(const std::string& suite, double perturb,
               const std::string& format) {
  oscsphere::verify::Suite s = oscsphere::verify::Suite::all;
  if (suite == "bases") s = oscsphere::verify::Suite::bases;
  else if (suite == "interbasis") s = oscsphere::verify::Suite::interbasis;
  else if (suite == "elliptic") s = oscsphere::verify::Suite::elliptic;
  else if (suite == "limits") s = oscsphere::verify::Suite::limits;
  else if (suite != "all") throw std::invalid_argument("--suite must be one of all, bases, interbasis, elliptic, limits");

  auto reports = oscsphere::verify::run_suite(s, 1.0 + perturb);
  KV params;
  params.emplace_back("suite", suite);
  params.emplace_back("perturb_energy", format_double(perturb));

  Table table;
  table.columns = {"check_name", "parameters", "max_error", "tolerance",
                   "passed"};
  for (const auto& report : reports) {
    std::string joined;
    for (const auto& [k, v] : report.parameters) {
      if (!joined.empty()) joined += ';';
      joined += k + "=" + v;
    }
    table.rows.push_back({text_cell(report.check_name), text_cell(joined),
                          num_cell(report.max_error),
                          num_cell(report.tolerance),
                          text_cell(report.passed ? "true" : "false")});
  }
  emit("verify", params, format, table, [&](JsonWriter& jw) {
    jw.begin_array();
    for (const auto& report : reports) {
      jw.begin_object();
      jw.key("check_name");
      jw.value_string(report.check_name);
      jw.key("parameters");
      jw.begin_object();
      for (const auto& [k, v] : report.parameters) {
        jw.key(k);
        jw.value_string(v);
      }
      jw.end_object();
      jw.key("max_error");
      jw.value_number(report.max_error);
      jw.key("tolerance");
      jw.value_number(report.tolerance);
      jw.key("passed");
      jw.value_bool(report.passed);
      jw.end_object();
    }
    jw.end_array();
  });
  for (const auto& report : reports)
    if (!report.passed) return 1;
  return 0;
}

struct WavefunctionArgs {
  std::string basis;
  int N = 0;
  int l = 0;
  int m = 0;
  int n3 = 0;
  int q = 0;
  double a = 0.0;
  std::string point_system;
  std::vector<std::string> coords;
  CLI::Option* l_opt = nullptr;
  CLI::Option* n3_opt = nullptr;
  CLI::Option* a_opt = nullptr;
};

int run_wavefunction(const WavefunctionArgs& args, const PhysicalFlags& phys,
                     const std::string& format) {
  namespace bases = oscsphere::bases;
  KV params;
  params.emplace_back("basis", args.basis);
  params.emplace_back("N", std::to_string(args.N));
  params.emplace_back("m", std::to_string(args.m));
  auto resolved = phys.resolve(params);

  std::string point_system =
      args.point_system.empty()
          ? (args.basis == "cylindrical" ? "cylindrical"
             : args.basis == "elliptic" ? "elliptic"
                                        : "spherical")
          : args.point_system;
  double modulus = 0.0;
  if (args.basis == "elliptic" || point_system == "elliptic") {
    if (args.a_opt->count() == 0)
      throw std::invalid_argument(
          "--a is required for the elliptic basis or elliptic points");
    if (args.a < -1.0) throw std::invalid_argument("--a must be >= -1");
    modulus = oscsphere::elliptic::EllipticParams(args.a, resolved.params.R).k;
  }

  std::function<std::complex<double>(const bases::SpherePoint&)> evaluate;
  if (args.basis == "spherical") {
    if (args.l_opt->count() == 0)
      throw std::invalid_argument("--l is required for the spherical basis");
    bases::SphericalQN qn(args.N, args.l, args.m);
    params.emplace_back("l", std::to_string(args.l));
    evaluate = [qn, resolved](const bases::SpherePoint& point) {
      return bases::wavefunction(qn, resolved.params, point);
    };
  } else if (args.basis == "cylindrical") {
    if (args.n3_opt->count() == 0)
      throw std::invalid_argument("--n3 is required for the cylindrical basis");
    bases::CylindricalQN qn(args.N, args.m, args.n3);
    params.emplace_back("n3", std::to_string(args.n3));
    evaluate = [qn, resolved](const bases::SpherePoint& point) {
      return bases::wavefunction(qn, resolved.params, point);
    };
  } else {
    oscsphere::elliptic::EllipticParams ep(args.a, resolved.params.R);
    auto sph =
        oscsphere::elliptic::solve_spherical_form(args.N, args.m, resolved.nu,
                                                  ep);
    auto cyl = oscsphere::elliptic::solve_cylindrical_form(args.N, args.m,
                                                           resolved.nu, ep);
    auto block = oscsphere::interbasis::w_block(
        args.N, args.m, resolved.nu, oscsphere::interbasis::WMethod::f43);
    auto matched = oscsphere::elliptic::match_solutions(sph, cyl, block);
    if (args.q < 0 || static_cast<size_t>(args.q) >= matched.size())
      throw std::invalid_argument("--q must index a solution in [0, " +
                                  std::to_string(matched.size()) + ")");
    params.emplace_back("a", format_double(args.a));
    params.emplace_back("q", std::to_string(args.q));
    params.emplace_back("lambda", format_double(matched[args.q].lambda_q));
    auto sol = matched[args.q];
    int N = args.N, m = args.m;
    evaluate = [sol, N, m, resolved](const bases::SpherePoint& point) {
      return oscsphere::elliptic::elliptic_wavefunction(sol, N, m,
                                                        resolved.params, point);
    };
  }
  params.emplace_back("point_system", point_system);

  std::vector<std::string> coord_names;
  bases::CoordSystem system = bases::CoordSystem::spherical;
  if (point_system == "spherical") {
    coord_names = {"chi", "theta", "phi"};
  } else if (point_system == "cylindrical") {
    coord_names = {"alpha", "phi1", "phi2"};
    system = bases::CoordSystem::cylindrical;
  } else if (point_system == "elliptic") {
    coord_names = {"mu_e", "nu_e", "phi"};
    system = bases::CoordSystem::elliptic;
  } else if (point_system == "ambient") {
    coord_names = {"q0", "q1", "q2", "q3"};
    system = bases::CoordSystem::ambient;
  } else {
    throw std::invalid_argument(
        "--point-system must be one of spherical, cylindrical, elliptic, "
        "ambient");
  }
  if (args.coords.empty())
    throw std::invalid_argument("pass at least one --coords value");

  Table table;
  table.columns = coord_names;
  table.columns.push_back("re");
  table.columns.push_back("im");
  table.columns.push_back("abs");
  for (const auto& text : args.coords) {
    auto c = parse_coord_list(text, coord_names.size());
    bases::SpherePoint point;
    switch (system) {
      case bases::CoordSystem::spherical:
        point = bases::SpherePoint::spherical(c[0], c[1], c[2]);
        break;
      case bases::CoordSystem::cylindrical:
        point = bases::SpherePoint::cylindrical(c[0], c[1], c[2]);
        break;
      case bases::CoordSystem::elliptic:
        point = bases::SpherePoint::elliptic(c[0], c[1], c[2], modulus);
        break;
      case bases::CoordSystem::ambient:
        point = bases::SpherePoint::ambient(c[0], c[1], c[2], c[3]);
        break;
    }
    auto psi = evaluate(point);
    std::vector<Cell> row;
    for (double v : c) row.push_back(num_cell(v));
    row.push_back(num_cell(psi.real()));
    row.push_back(num_cell(psi.imag()));
    row.push_back(num_cell(std::abs(psi)));
    table.rows.push_back(std::move(row));
  }
  emit_table("wavefunction", params, format, table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantum isotropic oscillator on the three-sphere: spectra, basis "
      "wavefunctions, interbasis expansions, elliptic bases, verification"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "csv"};

  auto* sp = app.add_subcommand("spectrum", "Energy levels and degeneracies");
  std::string sp_range = "0..8";
  std::string sp_format = "json";
  PhysicalFlags sp_phys;
  sp->add_option("--N", sp_range, "Level N or inclusive range A..B");
  sp_phys.attach(sp);
  sp->add_option("--format", sp_format, "Output format")
      ->check(CLI::IsMember(formats));

  auto* ib = app.add_subcommand("interbasis",
                                "Spherical-cylindrical expansion block");
  int ib_N = 0, ib_m = 0;
  std::string ib_method = "f43";
  std::string ib_format = "json";
  PhysicalFlags ib_phys;
  ib->add_option("--N", ib_N, "Level")->required();
  ib->add_option("--m", ib_m, "Azimuthal quantum number")->required();
  ib->add_option("--method", ib_method, "Evaluation route")
      ->check(CLI::IsMember({"f43", "racah", "quadrature"}));
  ib_phys.attach(ib);
  ib->add_option("--format", ib_format, "Output format")
      ->check(CLI::IsMember(formats));

  auto* el = app.add_subcommand("elliptic",
                                "Elliptic basis eigenvalues and coefficients");
  int el_N = 0, el_m = 0;
  double el_a = 0.0;
  std::string el_format = "json";
  PhysicalFlags el_phys;
  el->add_option("--N", el_N, "Level")->required();
  el->add_option("--m", el_m, "Azimuthal quantum number")->required();
  el->add_option("--a", el_a, "Elliptic mixing parameter, a >= -1")
      ->required();
  el_phys.attach(el);
  el->add_option("--format", el_format, "Output format")
      ->check(CLI::IsMember(formats));

  auto* vf = app.add_subcommand("verify", "Run verification check suites");
  std::string vf_suite = "all";
  std::string vf_format = "json";
  double vf_perturb = 0.0;
  vf->add_option("--suite", vf_suite, "Check battery to run")
      ->check(CLI::IsMember({"all", "bases", "interbasis", "elliptic",
                             "limits"}));
  vf->add_option("--format", vf_format, "Output format")
      ->check(CLI::IsMember(formats));
  vf->add_option("--perturb-energy", vf_perturb,
                 "Fractional eigenvalue perturbation injected into the "
                 "differential-equation checks")
      ->group("");

  auto* wf = app.add_subcommand("wavefunction",
                                "Evaluate basis wavefunctions at points");
  WavefunctionArgs wf_args;
  std::string wf_format = "json";
  PhysicalFlags wf_phys;
  wf->add_option("--basis", wf_args.basis, "Which basis to evaluate")
      ->required()
      ->check(CLI::IsMember({"spherical", "cylindrical", "elliptic"}));
  wf->add_option("--N", wf_args.N, "Level")->required();
  wf->add_option("--m", wf_args.m, "Azimuthal quantum number");
  wf_args.l_opt = wf->add_option("--l", wf_args.l, "Orbital quantum number");
  wf_args.n3_opt = wf->add_option("--n3", wf_args.n3, "Axial quantum number");
  wf->add_option("--q", wf_args.q,
                 "Elliptic solution index (ascending eigenvalue)");
  wf_args.a_opt =
      wf->add_option("--a", wf_args.a, "Elliptic mixing parameter");
  wf->add_option("--point-system", wf_args.point_system,
                 "Coordinate system of --coords (defaults to the basis's own)")
      ->check(CLI::IsMember({"spherical", "cylindrical", "elliptic",
                             "ambient"}));
  wf->add_option("--coords", wf_args.coords,
                 "Comma-separated point, repeatable for tables")
      ->required();
  wf_phys.attach(wf);
  wf->add_option("--format", wf_format, "Output format")
      ->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sp->parsed()) return run_spectrum(sp_range, sp_phys, sp_format);
    if (ib->parsed())
      return run_interbasis(ib_N, ib_m, ib_method, ib_phys, ib_format);
    if (el->parsed()) return run_elliptic(el_N, el_m, el_a, el_phys, el_format);
    if (vf->parsed()) return run_verify(vf_suite, vf_perturb, vf_format);
    if (wf->parsed()) return run_wavefunction(wf_args, wf_phys, wf_format);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
