#include "wphase/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "wphase/distributions.hpp"
#include "wphase/errors.hpp"
#include "wphase/radial_oracle.hpp"
#include "wphase/state_spec.hpp"
#include "wphase/verify.hpp"
#include "wphase/wigner_op.hpp"

namespace wphase {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.out) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open output file '" + *cfg.out + "'");
  f << text;
  if (!f) throw UsageError("failed writing '" + *cfg.out + "'");
}

ElementForm parse_form(const std::string& s) {
  if (s == "double") return ElementForm::DoubleSum;
  if (s == "hyp") return ElementForm::Hypergeometric;
  if (s == "fock") return ElementForm::FockDecomposition;
  throw UsageError("unknown form '" + s + "'");
}

int cmd_opmat(const RunConfig& cfg, double theta, const std::string& form_text, std::ostream& out) {
  const ElementForm form = parse_form(form_text);
  const WignerPhaseMatrix m = build_matrix(theta, cfg.dim, form);
  std::string text;
  if (cfg.format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["dim"] = cfg.dim;
    j["theta"] = theta;
    j["form"] = std::string(form_name(form));
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int s = 0; s < cfg.dim; ++s) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int r = 0; r < cfg.dim; ++r) row.push_back({m.op(s, r).real(), m.op(s, r).imag()});
      rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    text = j.dump() + "\n";
  } else {
    std::ostringstream os;
    os << "s,r,re,im\n";
    for (int s = 0; s < cfg.dim; ++s) {
      for (int r = 0; r < cfg.dim; ++r) {
        os << s << ',' << r << ',' << fmt17(m.op(s, r).real()) << ',' << fmt17(m.op(s, r).imag()) << '\n';
      }
    }
    text = os.str();
  }
  emit(cfg, text, out);
  return kExitOk;
}

int cmd_dist(const RunConfig& cfg, const std::string& state_text, const std::string& method, std::ostream& out,
             std::ostream& err) {
  const StateSpec spec = parse_state_spec(state_text);
  PhaseDistribution dist;
  double tolerance = 1e-8;
  if (method == "closed") {
    const auto alpha = spec.coherent_amplitude();
    if (!alpha) throw UsageError("method 'closed' needs a coherent state, got '" + state_text + "'");
    dist = coherent_distribution(*alpha, cfg.n_grid);
  } else if (method == "trace") {
    if (cfg.n_grid < 2 * cfg.dim + 1) {
      throw UsageError("--grid " + std::to_string(cfg.n_grid) + " must be at least 2*dim+1 = " +
                       std::to_string(2 * cfg.dim + 1));
    }
    if (cfg.dim > kStabilityCeiling) throw DomainError("--dim exceeds " + std::to_string(kStabilityCeiling));
    const auto rho = DensityOperator::pure(materialize(spec, cfg.dim));
    dist = phase_distribution(rho, cfg.n_grid, cfg.dim);
  } else if (method == "oracle") {
    if (cfg.dim > kOracleMaxIndex) throw DomainError("oracle method supports --dim up to 40");
    const FockVector full = materialize(spec, cfg.dim);
    // Amplitudes above the highest occupied level are exactly zero.
    const int support = spec.max_level() ? *spec.max_level() + 1 : cfg.dim;
    const FockVector psi(Eigen::VectorXcd(full.amps().head(support)));
    dist = radial_phase_distribution(psi, make_polar_quadrature(support - 1), cfg.n_grid);
    tolerance = 1e-6;
  } else {
    throw UsageError("unknown method '" + method + "'");
  }
  const double integral = dist.integral();
  std::ostringstream os;
  os << "theta,p\n";
  for (int k = 0; k < dist.n_grid; ++k) os << fmt17(dist.theta(k)) << ',' << fmt17(dist.values[k]) << '\n';
  char tol[16];
  std::snprintf(tol, sizeof tol, "%.3g", tolerance);
  os << "# integral=" << fmt17(integral) << " tolerance=" << tol << '\n';
  emit(cfg, os.str(), out);
  if (!(std::fabs(integral - 1.0) <= tolerance)) {
    err << "dist: integral " << fmt17(integral) << " deviates from 1 by more than " << fmt17(tolerance) << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, bool has_dim, const std::vector<std::string>& overrides,
               std::ostream& out, std::ostream& err) {
  VerifyConfig vc;
  vc.suite = suite;
  if (has_dim) {
    if (cfg.dim > kStabilityCeiling) throw DomainError("--dim exceeds " + std::to_string(kStabilityCeiling));
    vc.dim = cfg.dim;
  }
  const auto& known = default_tolerances();
  for (const auto& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tol-override expects NAME=VAL, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    if (!known.contains(name)) throw UsageError("--tol-override: unknown check '" + name + "'");
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      throw UsageError("--tol-override: bad value in '" + item + "'");
    }
    if (used != item.size() - eq - 1 || !(value >= 0.0)) throw UsageError("--tol-override: bad value in '" + item + "'");
    vc.tolerance_overrides[name] = value;
  }
  checks_in_suite(suite);
  const VerifyReport rep = run_verify(vc);
  emit(cfg, rep.to_json().dump(2) + "\n", out);
  for (const auto& c : rep.checks) {
    err << (c.report_only ? "[report] " : (c.pass ? "[pass]   " : "[FAIL]   ")) << c.name
        << " max_defect=" << fmt17(c.max_defect) << " tolerance=" << fmt17(c.tolerance) << '\n';
  }
  return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wigner phase operator toolkit", "wigner_phase"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string out_path;

  auto* opmat = app.add_subcommand("opmat", "write rho_w(theta) in the Fock basis");
  double theta = 0.0;
  std::string form = "double", format = "csv";
  opmat->add_option("--dim", cfg.dim, "truncation dimension")->required()->check(CLI::PositiveNumber);
  opmat->add_option("--theta", theta, "phase angle in radians");
  opmat->add_option("--form", form, "element evaluator")->check(CLI::IsMember({"double", "hyp", "fock"}));
  opmat->add_option("--out", out_path, "output file (default stdout)");
  opmat->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* dist = app.add_subcommand("dist", "write a phase distribution as theta,p CSV");
  std::string state, method = "trace";
  dist->add_option("--state", state, "fock:N | coherent:RE+IMi | phase:THETA0:S | super:N=C,...")->required();
  dist->add_option("--method", method, "closed, trace or oracle")->check(CLI::IsMember({"closed", "trace", "oracle"}));
  dist->add_option("--grid", cfg.n_grid, "number of angles")->check(CLI::PositiveNumber);
  dist->add_option("--dim", cfg.dim, "truncation dimension")->check(CLI::PositiveNumber);
  dist->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the identity checks and write a JSON report");
  std::string suite = "all";
  std::vector<std::string> overrides;
  verify->add_option("--suite", suite, "check suite")->check(CLI::IsMember(suite_names()));
  auto* verify_dim = verify->add_option("--dim", cfg.dim, "override check dimensions")->check(CLI::PositiveNumber);
  verify->add_option("--tol-override", overrides, "NAME=VAL tolerance override")->take_all();
  verify->add_option("--out", out_path, "report file (default stdout)");

  std::vector<std::string> argv_store{"wigner_phase"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* failing = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << failing->help();
    return kExitBadFlags;
  }
  if (!out_path.empty()) cfg.out = out_path;
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;

  try {
    if (opmat->parsed()) return cmd_opmat(cfg, theta, form, out);
    if (dist->parsed()) return cmd_dist(cfg, state, method, out, err);
    return cmd_verify(cfg, suite, verify_dim->count() > 0, overrides, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const std::domain_error& e) {
    err << "numeric range error: " << e.what() << "\n";
    return kExitNumericRange;
  } catch (const std::overflow_error& e) {
    err << "numeric range error: " << e.what() << "\n";
    return kExitNumericRange;
  }
}

}  // namespace wphase
