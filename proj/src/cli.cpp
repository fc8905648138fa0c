#include "metaracah/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "metaracah/algebra.hpp"
#include "metaracah/diffmodel.hpp"
#include "metaracah/eigenbases.hpp"
#include "metaracah/errors.hpp"
#include "metaracah/matrixreps.hpp"
#include "metaracah/racahpoly.hpp"
#include "metaracah/rationalfns.hpp"
#include "metaracah/suites.hpp"

namespace metaracah {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kOutputDirEnv = "METARACAH_OUTPUT_DIR";

struct RunConfig {
  int N = 5;
  std::string alpha = "1/3";
  std::string beta = "1/5";
  std::string zeta = "1/7";
  std::string rho = "1/13";
  std::string suite = "all";
  std::uint64_t seed = 0;
  int sweeps = 0;
  std::string format = "json";
  int precision = 12;
  std::string out;
  bool inject_fault = false;
  std::string which;
  bool exact = false;
};

struct Parsed {
  Params params;
  Rational rho;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + ": not a rational: " + text);
  }
}

Parsed parse_params(const RunConfig& cfg) {
  Parsed r;
  r.params.N = cfg.N;
  r.params.alpha = parse_rational("alpha", cfg.alpha);
  r.params.beta = parse_rational("beta", cfg.beta);
  r.params.zeta = parse_rational("zeta", cfg.zeta);
  r.rho = parse_rational("rho", cfg.rho);
  const auto v = validate_params(r.params, r.rho);
  if (!v) throw DegenerateParameters(v.offenders);
  return r;
}

Json params_json(const Params& p, const Rational& rho) {
  Json j;
  j["N"] = p.N;
  j["alpha"] = p.alpha.str();
  j["beta"] = p.beta.str();
  j["zeta"] = p.zeta.str();
  j["rho"] = rho.str();
  return j;
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json coeffs_json(const TridiagonalCoeffs& c) {
  Json j;
  j["sup"] = vector_json(c.sup);
  j["diag"] = vector_json(c.diag);
  j["sub"] = vector_json(c.sub);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// Relative paths land under $METARACAH_OUTPUT_DIR when it is set.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::filesystem::path path(cfg.out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') path = std::filesystem::path(dir) / path;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + path.string());
  f << text;
}

// ---------------------------------------------------------------------------
// verify

VerificationReport fault_report(const Params& p) {
  Generators g = build_generators(p);
  g.Z(0, 0) += Rational(1);
  VerificationReport r;
  r.append(check_defining_relations(g, p.zeta, central_params(p)), "fault.");
  return r;
}

std::string render_report(const RunConfig& cfg, const VerificationReport& report, const Parsed& explicit_params,
                          const Json& sweeps) {
  if (cfg.format == "csv") {
    std::ostringstream s;
    s << "id,paperRef,status,detail\n";
    for (const auto& c : report.checks) {
      s << csv_field(c.id) << ',' << csv_field(c.ref) << ',' << to_string(c.status) << ',' << csv_field(c.detail)
        << '\n';
    }
    return s.str();
  }
  Json j;
  j["suite"] = report.suite;
  j["params"] = params_json(explicit_params.params, explicit_params.rho);
  Json checks = Json::array();
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  for (const auto& c : report.checks) {
    Json e;
    e["id"] = c.id;
    e["paperRef"] = c.ref;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
    switch (c.status) {
      case CheckStatus::kPass: ++passed; break;
      case CheckStatus::kFail: ++failed; break;
      case CheckStatus::kSkippedDegenerate: ++skipped; break;
    }
  }
  j["checks"] = std::move(checks);
  j["summary"] = Json{{"pass", passed}, {"fail", failed}, {"skipped", skipped}};
  j["sweeps"] = sweeps;
  return j.dump(2) + "\n";
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Parsed explicit_params = parse_params(cfg);
  VerificationReport report = run_suite(cfg.suite, explicit_params.params, explicit_params.rho);
  report.suite = cfg.suite;

  Json sweeps;
  sweeps["seed"] = cfg.seed;
  sweeps["count"] = cfg.sweeps;
  Json draws = Json::array();
  int total_resamples = 0;
  int skipped = 0;
  ParamSampler sampler(cfg.seed);
  for (int i = 0; i < cfg.sweeps; ++i) {
    char prefix[32];
    std::snprintf(prefix, sizeof prefix, "sweep%03d.", i);
    const auto draw = sampler.next(cfg.N);
    total_resamples += draw.resamples;
    Json d;
    d["params"] = params_json(draw.params, draw.rho);
    d["resamples"] = draw.resamples;
    if (draw.degenerate) {
      ++skipped;
      report.add_skipped(std::string(prefix) + "draw", "random generic parameter set",
                         "no generic draw within the attempt budget");
      d["status"] = "skipped-degenerate";
    } else {
      try {
        VerificationReport sub = run_suite(cfg.suite, draw.params, draw.rho);
        d["status"] = sub.all_passed() ? "pass" : "fail";
        report.append(sub, prefix);
      } catch (const DegenerateParameters& e) {
        ++skipped;
        report.add_skipped(std::string(prefix) + "draw", "random generic parameter set", e.what());
        d["status"] = "skipped-degenerate";
      }
    }
    draws.push_back(std::move(d));
  }
  sweeps["resamples"] = total_resamples;
  sweeps["skipped"] = skipped;
  sweeps["draws"] = std::move(draws);

  if (cfg.inject_fault) report.append(fault_report(explicit_params.params));

  report.sort();
  emit(cfg, render_report(cfg, report, explicit_params, sweeps), out);
  return report.failures() == 0 ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// table

using GridFn = std::function<Rational(int, int)>;

GridFn table_function(const std::string& which, const Params& p, const Rational& rho) {
  if (which == "racah") {
    const RacahParams rp = racah_params(p, rho);
    return [rp](int m, int n) { return racah(m, n, rp); };
  }
  if (which == "S") return [p, rho](int m, int n) { return overlap_S_closed(m, n, p, rho); };
  if (which == "Stilde") return [p, rho](int m, int n) { return overlap_Stilde_closed(m, n, p, rho); };
  if (which == "calU") return [p](int m, int n) { return calU(m, n, p); };
  if (which == "calUtilde") return [p](int m, int n) { return calU_tilde(m, n, p); };
  if (which == "U") return [p](int m, int n) { return overlap_U_closed(m, n, p); };
  if (which == "Utilde") return [p](int m, int n) { return overlap_Utilde_closed(m, n, p); };
  if (which == "dualHahn") return [p](int m, int n) { return dual_hahn(m, n, p); };
  throw UsageError("unknown table: " + which);
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const Parsed in = parse_params(cfg);
  const GridFn fn = table_function(cfg.which, in.params, in.rho);
  const int dim = in.params.dim();
  if (cfg.format == "csv") {
    std::ostringstream s;
    s << "m,n,value" << (cfg.exact ? ",exact" : "") << '\n';
    for (int m = 0; m < dim; ++m) {
      for (int n = 0; n < dim; ++n) {
        const Rational v = fn(m, n);
        s << m << ',' << n << ',' << v.to_decimal(cfg.precision);
        if (cfg.exact) s << ',' << v.str();
        s << '\n';
      }
    }
    emit(cfg, s.str(), out);
    return kExitPass;
  }
  RationalMatrix grid(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) grid(m, n) = fn(m, n);
  }
  Json j;
  j["which"] = cfg.which;
  j["params"] = params_json(in.params, in.rho);
  j["values"] = matrix_json(grid);
  emit(cfg, j.dump(2) + "\n", out);
  return kExitPass;
}

// ---------------------------------------------------------------------------
// matrix

BasisLabel require_label(const std::string& text) {
  const auto label = parse_basis_label(text);
  if (!label) throw UsageError("unknown basis label: " + text);
  return *label;
}

Json coefficient_json(const std::string& basis, const Params& p, const Rational& rho) {
  Json j;
  if (basis == "e") {
    j["Z"] = coeffs_json(coeffs_Z_on_e(p));
    j["X"] = coeffs_json(coeffs_X_on_e(p));
  } else if (basis == "f") {
    j["V"] = coeffs_json(coeffs_V_on_f(p, rho));
  } else if (basis == "d" || basis == "dStar") {
    const DCoeffs c = basis == "d" ? coeffs_on_d(p) : coeffs_on_dstar(p);
    j["Z"] = coeffs_json(c.Z);
    j["X"] = coeffs_json(c.X);
    j["VZ"] = coeffs_json(c.VZ);
  } else if (basis == "z") {
    const ZCoeffs c = coeffs_on_z(p);
    j["V"] = coeffs_json(c.V);
    j["X"] = coeffs_json(c.X);
    j["Vtilde"] = coeffs_json(c.Vtilde);
  } else {
    throw UsageError("no coefficient table for basis: " + basis);
  }
  return j;
}

int cmd_matrix(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Parsed in = parse_params(cfg);
  const Params& p = in.params;
  const std::string& which = cfg.which;
  Json j;
  if (which == "X" || which == "V" || which == "Z") {
    const Generators g = build_generators(p);
    j = matrix_json(which == "X" ? g.X : (which == "V" ? g.V : g.Z));
  } else if (which == "Xt" || which == "Vt" || which == "Zt") {
    const Transposes t = build_transposes(p);
    j = matrix_json(which == "Xt" ? t.Xt : (which == "Vt" ? t.Vt : t.Zt));
  } else if (which == "C") {
    const Generators g = build_generators(p);
    const RationalMatrix C = casimir(p);
    for (const auto* gen : {&g.X, &g.V, &g.Z}) {
      if (!commutator(C, *gen).is_zero()) {
        err << "casimir does not commute with the generators\n";
        return kExitFail;
      }
    }
    j = matrix_json(C);
  } else if (which.rfind("basis:", 0) == 0) {
    const BasisLabel label = require_label(which.substr(6));
    const BasisFamily family = build_basis(p, in.rho, label);
    const VerificationReport eig = check_eigenbases(p, in.rho);
    const Check* c = eig.find("eigen." + to_string(label));
    if (c == nullptr || !c->passed()) {
      err << "basis " << to_string(label) << " fails its eigen-equation"
          << (c != nullptr ? ": " + c->detail : std::string()) << '\n';
      return kExitFail;
    }
    j["label"] = to_string(label);
    j["vectors"] = matrix_json(family.vectors);
    j["eigenvalues"] = vector_json(family.eigenvalues);
  } else if (which.rfind("coeffs:", 0) == 0) {
    j = coefficient_json(which.substr(7), p, in.rho);
  } else if (which.rfind("model:", 0) == 0) {
    const BasisLabel label = require_label(which.substr(6));
    j = Json::array();
    for (const auto& f : model_basis(label, p, in.rho)) {
      Json terms = Json::object();
      for (const auto& [e, c] : f.terms()) terms[std::to_string(e)] = c.str();
      j.push_back(std::move(terms));
    }
  } else {
    throw UsageError("unknown matrix: " + which);
  }
  emit(cfg, j.dump(2) + "\n", out);
  return kExitPass;
}

void add_param_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--N", cfg.N, "representation dimension minus one")->capture_default_str();
  sub->add_option("--alpha", cfg.alpha, "alpha as p/q")->capture_default_str();
  sub->add_option("--beta", cfg.beta, "beta as p/q")->capture_default_str();
  sub->add_option("--zeta", cfg.zeta, "zeta as p/q")->capture_default_str();
  sub->add_option("--rho", cfg.rho, "rho as p/q")->capture_default_str();
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--precision", cfg.precision, "decimal digits in csv output")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--out", cfg.out, std::string("output file; relative paths resolve under $") + kOutputDirEnv);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact verification of the meta Racah algebra representation", "metaracah"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_param_options(verify, cfg);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", cfg.suite, "suite to run")->check(CLI::IsMember(suites))->capture_default_str();
  verify->add_option("--seed", cfg.seed, "seed for random parameter sweeps")->capture_default_str();
  verify->add_option("--sweeps", cfg.sweeps, "number of random parameter sets")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_flag("--inject-fault", cfg.inject_fault)->group("");

  CLI::App* table = app.add_subcommand("table", "emit an (m, n) grid of values");
  add_param_options(table, cfg);
  table->add_option("--which", cfg.which, "function to tabulate")
      ->required()
      ->check(CLI::IsMember({"racah", "S", "Stilde", "calU", "calUtilde", "U", "Utilde", "dualHahn"}));
  table->add_flag("--exact", cfg.exact, "add the exact p/q value as a csv column");

  CLI::App* matrix = app.add_subcommand("matrix", "emit a matrix, basis or coefficient table as JSON");
  add_param_options(matrix, cfg);
  matrix->add_option("--which", cfg.which, "X|V|Z|Xt|Vt|Zt|C|basis:<label>|coeffs:<basis>|model:<label>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(cfg, out);
    if (*table) return cmd_table(cfg, out);
    return cmd_matrix(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionViolated& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateParameters& e) {
    err << "degenerate parameters:";
    for (const auto& o : e.offenders()) err << "\n  " << o;
    err << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("metaracah");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace metaracah
