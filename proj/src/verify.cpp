#include "wphase/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "wphase/distributions.hpp"
#include "wphase/errors.hpp"
#include "wphase/pegg_barnett.hpp"
#include "wphase/radial_oracle.hpp"
#include "wphase/wigner_op.hpp"
#include "wphase/zm_family.hpp"

namespace wphase {

namespace {

using json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
const double kUniform = 1.0 / kTwoPi;

struct Context {
  std::optional<int> dim;
  double tolerance;
  std::uint64_t seed;

  int dim_or(int fallback) const { return dim.value_or(fallback); }
};

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

// Partial check outcome; run_check adds the name, timing and verdict.
struct Outcome {
  double max_defect = 0.0;
  json details = json::object();
};

Outcome fock_uniformity(const Context& ctx) {
  const int dim = ctx.dim_or(40);
  Outcome out;
  for (double theta : {0.0, 0.7, 3.9}) {
    const auto m = build_matrix(theta, dim).op;
    for (int n = 0; n < dim; ++n) out.max_defect = std::max(out.max_defect, std::abs(m(n, n) - kUniform));
  }
  out.details["dim"] = dim;
  out.details["thetas"] = {0.0, 0.7, 3.9};
  return out;
}

Outcome hermiticity(const Context& ctx) {
  const int dim = ctx.dim_or(40);
  Outcome out;
  json per_form = json::object();
  for (ElementForm form : {ElementForm::DoubleSum, ElementForm::Hypergeometric, ElementForm::FockDecomposition}) {
    double worst = 0.0;
    for (double theta : {0.0, 0.7, 3.9}) worst = std::max(worst, build_matrix(theta, dim, form).op.hermiticity_defect());
    per_form[std::string(form_name(form))] = worst;
    out.max_defect = std::max(out.max_defect, worst);
  }
  out.details["dim"] = dim;
  out.details["frobenius_defect"] = per_form;
  return out;
}

// Entries evaluated literally at theta, compared with R(theta) M(0) R(theta)^dagger.
Outcome phase_covariance(const Context& ctx) {
  const int dim = ctx.dim_or(40);
  const auto m0 = build_matrix(0.0, dim).op;
  Outcome out;
  for (double theta : {0.7, 2.3, 5.1}) {
    const auto rot = number_rotation(theta, dim);
    const auto rotated = rot * m0 * rot.adjoint();
    for (ElementForm form : {ElementForm::DoubleSum, ElementForm::Hypergeometric, ElementForm::FockDecomposition}) {
      for (int s = 0; s < dim; ++s) {
        for (int r = 0; r < dim; ++r) {
          out.max_defect = std::max(out.max_defect, std::abs(element(form, s, r, theta) - rotated(s, r)));
        }
      }
    }
  }
  out.details["dim"] = dim;
  out.details["norm"] = "max";
  return out;
}

Outcome non_idempotence(const Context& ctx) {
  const int dim = ctx.dim_or(32);
  Outcome out;
  out.max_defect = idempotence_defect(0.0, dim);
  out.details["dim"] = dim;
  out.details["norm"] = "frobenius";
  return out;
}

Outcome completeness(const Context& ctx) {
  std::vector<int> dims = ctx.dim ? std::vector<int>{*ctx.dim} : std::vector<int>{16, 32};
  Outcome out;
  json per_dim = json::object();
  for (int dim : dims) {
    const auto integral = completeness_integral(dim, 2 * dim + 1);
    const double defect = (integral - FockOperator::identity(dim)).max_abs();
    per_dim[std::to_string(dim)] = defect;
    out.max_defect = std::max(out.max_defect, defect);
  }
  out.details["trapezoid_points"] = "2*dim+1";
  out.details["entrywise_defect"] = per_dim;
  return out;
}

Outcome form_equivalence(const Context& ctx) {
  const int dim = ctx.dim_or(31);
  Outcome out;
  for (double theta : {0.0, 0.7}) {
    for (int s = 0; s < dim; ++s) {
      for (int r = 0; r < dim; ++r) {
        const Complex a = element_double_sum(s, r, theta);
        const Complex b = element_hypergeometric(s, r, theta);
        const Complex c = element_fock_decomposition(s, r, theta);
        out.max_defect = std::max({out.max_defect, std::abs(a - b), std::abs(a - c), std::abs(b - c)});
      }
    }
  }
  out.details["max_index"] = dim - 1;
  return out;
}

const std::vector<Complex>& coherent_alphas() {
  static const std::vector<Complex> v{0.5, std::polar(1.2, 0.8), 2.0};
  return v;
}

Outcome coherent_closed_form(const Context& ctx) {
  const int dim = ctx.dim_or(48);
  const int n_grid = std::max(256, 2 * dim + 1);
  Outcome out;
  json per_alpha = json::array();
  for (Complex alpha : coherent_alphas()) {
    const auto rho = DensityOperator::pure(coherent_state(alpha, dim));
    const auto trace = phase_distribution(rho, n_grid, dim);
    const auto closed = coherent_distribution(alpha, n_grid);
    double worst = 0.0;
    for (int k = 0; k < n_grid; ++k) worst = std::max(worst, std::fabs(trace.values[k] - closed.values[k]));
    per_alpha.push_back({{"alpha", complex_json(alpha)}, {"max_pointwise", worst}});
    out.max_defect = std::max(out.max_defect, worst);
  }
  out.details["dim"] = dim;
  out.details["n_grid"] = n_grid;
  out.details["alphas"] = per_alpha;
  return out;
}

Outcome coherent_normalization(const Context& ctx) {
  const int dim = ctx.dim_or(48);
  const int n_grid = std::max(256, 2 * dim + 1);
  Outcome out;
  double min_value = 1.0;
  for (Complex alpha : coherent_alphas()) {
    const auto rho = DensityOperator::pure(coherent_state(alpha, dim));
    for (const auto& d : {phase_distribution(rho, n_grid, dim), coherent_distribution(alpha, n_grid)}) {
      out.max_defect = std::max(out.max_defect, std::fabs(d.integral() - 1.0));
      min_value = std::min(min_value, d.min_value());
    }
  }
  // Negative values count as a normalization failure of the same size.
  if (min_value < 0.0) out.max_defect = std::max(out.max_defect, 1.0 - min_value);
  out.details["dim"] = dim;
  out.details["min_value"] = min_value;
  out.details["positive"] = min_value > 0.0;
  return out;
}

Outcome moment_identity(const Context&) {
  const int n_grid = 2048;
  Outcome out;
  for (double mod : {0.3, 1.0, 2.0, 3.0}) {
    const Complex alpha = std::polar(mod, 0.6 * mod - 1.0);
    const auto dist = coherent_distribution(alpha, n_grid);
    for (int m = 0; m <= 6; ++m) {
      out.max_defect = std::max(out.max_defect, std::abs(coherent_phase_moment(alpha, m) - dist.trig_moment(m)));
    }
  }
  out.details["orders"] = "0..6";
  out.details["moduli"] = {0.3, 1.0, 2.0, 3.0};
  out.details["n_grid"] = n_grid;
  return out;
}

Outcome moment_zero(const Context&) {
  Outcome out;
  for (double mod : {0.0, 0.5, 1.0, 3.0, 7.0}) {
    out.max_defect = std::max(out.max_defect, std::abs(coherent_phase_moment(std::polar(mod, 1.1), 0) - 1.0));
  }
  return out;
}

Outcome delta_limit(const Context&) {
  const double phase = 0.9;
  const int n_grid = 1024;
  Outcome out;
  json variances = json::array();
  double previous = 2.0;
  bool decreasing = true;
  double mean_error = 0.0;
  for (double mod : {0.5, 1.0, 2.0, 4.0}) {
    const auto stats = circular_stats(coherent_distribution(std::polar(mod, phase), n_grid));
    variances.push_back({{"modulus", mod}, {"circular_variance", stats.circular_variance}});
    if (!(stats.circular_variance < previous)) decreasing = false;
    previous = stats.circular_variance;
    mean_error = std::fabs(std::remainder(stats.mean_angle - phase, kTwoPi));
  }
  out.max_defect = decreasing ? mean_error : std::max(mean_error, 1.0);
  out.details["variances"] = variances;
  out.details["strictly_decreasing"] = decreasing;
  out.details["mean_angle_error_at_4"] = mean_error;
  return out;
}

Outcome weak_equivalence(const Context& ctx) {
  const int dim = ctx.dim_or(32);
  std::mt19937_64 rng(ctx.seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<AngleQuadruple> quads{{0.4, 0.1, 1.4, 1.1}, {0.1, 6.0, 2.1, 8.0}};
  while (quads.size() < 52) {
    const double theta = angle(rng), phi = angle(rng), shift = angle(rng);
    quads.push_back({theta, phi, theta + shift, phi + shift});
  }
  const auto rep = weak_equivalence_scan(quads, dim, dim);
  Outcome out;
  out.max_defect = rep.invalid.empty() ? rep.max_defect : std::max(1.0, rep.max_defect);
  out.details["dim"] = dim;
  out.details["quadruples"] = quads.size();
  out.details["invalid"] = rep.invalid.size();
  return out;
}

Outcome phase_state_shift(const Context& ctx) {
  const int dim = ctx.dim_or(32);
  Outcome out;
  for (double theta : {0.3, 2.2, 5.9}) {
    for (double phi : {0.0, 1.7, 4.4}) {
      const double a = wigner_phase_of_phase_state(phi, theta, dim, dim);
      const double b = wigner_phase_of_phase_state(0.0, theta - phi, dim, dim);
      out.max_defect = std::max(out.max_defect, std::fabs(a - b));
    }
  }
  out.details["dim"] = dim;
  return out;
}

Outcome phase_state_convergence_check(const Context& ctx) {
  const int dim = ctx.dim_or(33);
  std::vector<int> s_dims;
  for (int s : {8, 16, 32}) {
    if (s + 1 <= dim) s_dims.push_back(s + 1);
  }
  Outcome out;
  if (s_dims.size() < 2) {
    out.details["skipped"] = "dim too small for s = 8, 16";
    return out;
  }
  const auto rep = phase_state_convergence(0.0, s_dims, dim, 4, 256);
  out.max_defect = rep.moment_defect.back();
  out.details["s_dims"] = rep.s_dims;
  out.details["moment_defect"] = rep.moment_defect;
  out.details["moment_step"] = rep.moment_step;
  out.details["sup_step"] = rep.sup_step;
  out.details["moments_converging"] = rep.moments_converging;
  bool sup_decreasing = true;
  for (std::size_t i = 1; i < rep.sup_step.size(); ++i) sup_decreasing &= rep.sup_step[i] < rep.sup_step[i - 1];
  out.details["sup_step_decreasing"] = sup_decreasing;
  return out;
}

Outcome projector_reconstruction_check(const Context& ctx) {
  const int dim = ctx.dim_or(20);
  const auto rule = make_radial_rule(2 * (dim - 1));
  Outcome out;
  for (double theta : {0.0, 0.9, 4.2}) {
    const auto rec = projector_reconstruction(theta, dim, rule);
    out.max_defect = std::max(out.max_defect, (rec - build_matrix(theta, dim).op).max_abs());
  }
  out.details["dim"] = dim;
  out.details["thetas"] = {0.0, 0.9, 4.2};
  return out;
}

Outcome zm_norm(const Context&) {
  Outcome out;
  json rows = json::array();
  bool any = false;
  for (Complex z : {Complex(0.5, 0.0), Complex(1.0, 0.0), Complex(1.0, 1.0), Complex(2.0, 0.0)}) {
    for (int m : {0, 1, 2}) {
      const auto rep = zm_norm_report(z, m, 64);
      rows.push_back({{"z", complex_json(z)},
                      {"m", m},
                      {"direct", rep.direct},
                      {"sqrt_I0", rep.sqrt_i0},
                      {"relative_difference", rep.relative_difference},
                      {"discrepancy", rep.discrepancy}});
      any |= rep.discrepancy;
      out.max_defect = std::max(out.max_defect, rep.relative_difference);
    }
  }
  out.details["norms"] = rows;
  out.details["discrepancy_flagged"] = any;
  return out;
}

Outcome zm_inner(const Context&) {
  Outcome out;
  json rows = json::array();
  struct Case {
    Complex z1;
    int m1;
    Complex z2;
    int m2;
  };
  for (const Case& c : {Case{1.0, 0, 1.0, 0}, Case{{0.5, 0.5}, 1, {0.8, -0.2}, 0}, Case{0.7, 2, 0.7, 2}}) {
    const auto rep = zm_inner_direct(c.z1, c.m1, c.z2, c.m2, 64);
    const double rel = rep.difference / std::max(std::abs(rep.direct), 1e-300);
    rows.push_back({{"z1", complex_json(c.z1)},
                    {"m1", c.m1},
                    {"z2", complex_json(c.z2)},
                    {"m2", c.m2},
                    {"direct", complex_json(rep.direct)},
                    {"formula", complex_json(rep.formula)},
                    {"relative_difference", rel},
                    {"discrepancy", rel > 1e-6}});
    out.max_defect = std::max(out.max_defect, rel);
  }
  out.details["inner_products"] = rows;
  return out;
}

Outcome unity_constant(const Context& ctx) {
  const int dim = std::min(ctx.dim_or(12), 32);
  Outcome out;
  json rows = json::array();
  for (double kappa : {1.0, 0.5}) {
    const auto rep = unity_resolution_check(dim, {kappa, 0, -1});
    rows.push_back({{"gaussian_weight_kappa", kappa},
                    {"constant", rep.constant},
                    {"constant_over_pi", rep.ratio_to_pi},
                    {"offdiag_sup", rep.offdiag_sup},
                    {"diagonal_spread", rep.diagonal_spread},
                    {"diagonal_first", rep.diagonal.front()},
                    {"diagonal_last", rep.diagonal.back()},
                    {"proportional_to_identity", rep.proportional_to_identity}});
    if (kappa == 1.0) out.max_defect = rep.diagonal_spread;
  }
  out.details["dim"] = dim;
  out.details["measure"] = "2 rho d rho d phi";
  out.details["weights"] = rows;
  return out;
}

Outcome oracle_elements(const Context& ctx) {
  const int dim = ctx.dim_or(13);
  if (dim > kOracleMaxIndex) throw DomainError("oracle_elements: dim exceeds 40");
  const auto quad = make_polar_quadrature(dim - 1);
  Outcome out;
  for (double theta : {0.0, 1.3}) {
    const auto oracle = radial_phase_matrix(theta, dim, quad);
    out.max_defect = std::max(out.max_defect, (oracle - build_matrix(theta, dim).op).max_abs());
  }
  out.details["max_index"] = dim - 1;
  out.details["thetas"] = {0.0, 1.3};
  return out;
}

Outcome oracle_coherent(const Context&) {
  const int n_theta = 24;
  Outcome out;
  json rows = json::array();
  for (Complex alpha : {Complex(0.5, 0.0), std::polar(1.0, 0.4), std::polar(1.5, -2.1)}) {
    const int dim = coherent_min_dim(alpha);
    const auto psi = coherent_state(alpha, dim);
    const auto quad = make_polar_quadrature(dim - 1);
    const auto oracle = radial_phase_distribution(psi, quad, n_theta);
    double worst = 0.0;
    for (int k = 0; k < n_theta; ++k) {
      worst = std::max(worst, std::fabs(oracle.values[k] - coherent_phase_closed(alpha, oracle.theta(k))));
    }
    rows.push_back({{"alpha", complex_json(alpha)}, {"dim", dim}, {"max_pointwise", worst}});
    out.max_defect = std::max(out.max_defect, worst);
  }
  out.details["n_theta"] = n_theta;
  out.details["alphas"] = rows;
  return out;
}

struct CheckSpec {
  std::string suite;
  double tolerance;
  bool report_only;
  std::string direction;
  std::function<Outcome(const Context&)> run;
};

const std::map<std::string, CheckSpec>& registry() {
  static const std::map<std::string, CheckSpec> r{
      {"fock_uniformity", {"hermiticity", 1e-12, false, "max", fock_uniformity}},
      {"hermiticity", {"hermiticity", 1e-11, false, "max", hermiticity}},
      {"phase_covariance", {"hermiticity", 1e-12, false, "max", phase_covariance}},
      {"non_idempotence", {"hermiticity", 1e-3, false, "min", non_idempotence}},
      {"completeness", {"completeness", 1e-12, false, "max", completeness}},
      {"form_equivalence", {"forms", 1e-9, false, "max", form_equivalence}},
      {"coherent_closed_form", {"coherent", 1e-6, false, "max", coherent_closed_form}},
      {"coherent_normalization", {"coherent", 1e-8, false, "max", coherent_normalization}},
      {"moment_identity", {"coherent", 1e-8, false, "max", moment_identity}},
      {"moment_zero", {"coherent", 1e-12, false, "max", moment_zero}},
      {"delta_limit", {"coherent", 1e-3, false, "max", delta_limit}},
      {"weak_equivalence", {"weakequiv", 1e-11, false, "max", weak_equivalence}},
      {"phase_state_shift", {"weakequiv", 1e-12, false, "max", phase_state_shift}},
      {"phase_state_convergence", {"weakequiv", 0.05, true, "max", phase_state_convergence_check}},
      {"projector_reconstruction", {"projector", 1e-6, false, "max", projector_reconstruction_check}},
      {"zm_norm", {"zm", 1e-6, true, "max", zm_norm}},
      {"zm_inner", {"zm", 1e-6, true, "max", zm_inner}},
      {"unity_constant", {"zm", 1e-8, true, "max", unity_constant}},
      {"oracle_elements", {"oracle", 1e-6, false, "max", oracle_elements}},
      {"oracle_coherent", {"oracle", 1e-5, false, "max", oracle_coherent}},
  };
  return r;
}

const std::vector<std::string>& execution_order() {
  static const std::vector<std::string> order{
      "fock_uniformity",   "hermiticity",        "phase_covariance",     "non_idempotence",
      "completeness",      "form_equivalence",   "coherent_closed_form", "coherent_normalization",
      "moment_identity",   "moment_zero",        "delta_limit",          "weak_equivalence",
      "phase_state_shift", "phase_state_convergence", "projector_reconstruction", "zm_norm",
      "zm_inner",          "unity_constant",     "oracle_elements",      "oracle_coherent"};
  return order;
}

void validate(const VerifyConfig& config) {
  if (config.dim && (*config.dim < 1 || *config.dim > kStabilityCeiling)) {
    throw DomainError("verify: dim " + std::to_string(*config.dim) + " outside [1, 64]");
  }
  for (const auto& [name, value] : config.tolerance_overrides) {
    if (!registry().contains(name)) throw DomainError("verify: unknown check '" + name + "' in tolerance override");
    if (!(value >= 0.0)) throw DomainError("verify: tolerance for '" + name + "' must be non-negative");
  }
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.report_only || c.pass; });
}

nlohmann::ordered_json VerifyReport::to_json() const {
  json out = json::object();
  for (const auto& c : checks) {
    out[c.name] = {{"pass", c.pass},
                   {"max_defect", c.max_defect},
                   {"tolerance", c.tolerance},
                   {"seconds", c.seconds},
                   {"report_only", c.report_only},
                   {"direction", c.direction},
                   {"details", c.details}};
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",       "hermiticity", "completeness", "forms", "coherent",
                                              "weakequiv", "projector",   "zm",           "oracle"};
  return names;
}

std::vector<std::string> checks_in_suite(const std::string& suite) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw DomainError("verify: unknown suite '" + suite + "'");
  }
  std::vector<std::string> out;
  for (const auto& name : execution_order()) {
    if (suite == "all" || registry().at(name).suite == suite) out.push_back(name);
  }
  return out;
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t = [] {
    std::map<std::string, double> m;
    for (const auto& [name, spec] : registry()) m[name] = spec.tolerance;
    return m;
  }();
  return t;
}

CheckResult run_check(const std::string& name, const VerifyConfig& config) {
  validate(config);
  const auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("verify: unknown check '" + name + "'");
  const CheckSpec& spec = it->second;
  CheckResult res;
  res.name = name;
  res.report_only = spec.report_only;
  res.direction = spec.direction;
  const auto ov = config.tolerance_overrides.find(name);
  res.tolerance = ov != config.tolerance_overrides.end() ? ov->second : spec.tolerance;
  const Context ctx{config.dim, res.tolerance, config.seed};
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = spec.run(ctx);
    res.max_defect = o.max_defect;
    res.details = std::move(o.details);
    res.pass = spec.direction == "min" ? res.max_defect > res.tolerance : res.max_defect <= res.tolerance;
  } catch (const std::exception& e) {
    res.pass = false;
    res.max_defect = std::nan("");
    res.details["error"] = e.what();
  }
  if (config.record_timing) {
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return res;
}

VerifyReport run_verify(const VerifyConfig& config) {
  validate(config);
  VerifyReport rep;
  for (const auto& name : checks_in_suite(config.suite)) rep.checks.push_back(run_check(name, config));
  return rep;
}

}  // namespace wphase
