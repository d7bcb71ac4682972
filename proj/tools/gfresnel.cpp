#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfresnel.hpp"

using namespace gfresnel;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* schema_version = "gfresnel-report/1";
constexpr const char* csv_header = "lambda,oracle_re,oracle_im,partial_re,partial_im,abs_remainder";

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_nonconvergence = 3;

const char* amplitude_help =
    "amplitude spec: gaussian | poly:c0,c1,...;gaussian | bump:lo,hi";

json cvalue(complex v, const char* provenance) {
  return json{{"re", v.real()}, {"im", v.imag()}, {"provenance", provenance}};
}

json rvalue(double v, const char* provenance) { return json{{"value", v}, {"provenance", provenance}}; }

json schedule_json(const EpsilonSchedule& s) {
  json j;
  j["values"] = s.values;
  j["order"] = s.order;
  return j;
}

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

/// Worker count for sweeps; GFRESNEL_THREADS overrides the hardware default.
unsigned thread_count() {
  if (const char* env = std::getenv("GFRESNEL_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

/// Runs job(i) for i < n on a few threads. Results are stored by index, so
/// the output order never depends on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& job) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> failures(n);
  const unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        try {
          out[i] = job(i);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  return out;
}

struct Run {
  json report;
  int code = exit_ok;
};

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int fail(const std::string& command, int code, const std::string& kind, const std::string& message,
          json extra = json::object()) {
  json r;
  r["schema_version"] = schema_version;
  r["command"] = command;
  r["error"] = {{"kind", kind}, {"message", message}};
  for (auto& [k, v] : extra.items()) r["error"][k] = v;
  r["exit_code"] = code;
  emit(r);
  std::cerr << "gfresnel " << command << ": " << message << "\n";
  return code;
}

// ---------------------------------------------------------------------------

struct FresnelFlags {
  double p = 1.0;
  double q = 1.0;
  double q_im = 0.0;
  std::string sign = "plus";
  std::string method = "closed";
  std::string chi = "gaussian";
  double tol = 1e-6;
  double pole_warning = 1e-2;
};

Run cmd_fresnel(const FresnelFlags& f) {
  Run run;
  const Sign sign = parse_sign(f.sign);
  const FresnelParams params{f.p, complex(f.q, f.q_im)};
  json& r = run.report;
  r["inputs"] = {{"p", f.p},           {"q", {{"re", f.q}, {"im", f.q_im}}}, {"sign", to_string(sign)},
                 {"method", f.method}, {"chi", f.chi},                       {"tol", f.tol}};
  json diag = json::object();

  if (!(f.p > 0.0)) throw domain_error("p must be > 0");
  const PoleReport near = nearest_pole_in_q(f.p, params.q, sign);
  const double distance = std::abs(params.q - near.location);
  if (distance < f.pole_warning) {
    diag["near_pole"] = {{"location", {{"re", near.location.real()}, {"im", near.location.imag()}}},
                         {"order", near.order},
                         {"residue", {{"re", near.residue.real()}, {"im", near.residue.imag()}}},
                         {"distance", distance}};
    std::cerr << "warning: q is " << distance << " from the pole q = " << near.location.real()
              << " (residue " << near.residue.real() + 0.0 << (near.residue.imag() < 0 ? " - " : " + ")
              << std::abs(near.residue.imag()) << "i)\n";
  }

  if (f.method == "closed") {
    r["outputs"]["value"] = cvalue(closed_form(params, sign), "closed_form");
    r["diagnostics"] = diag;
    return run;
  }

  const complex exact = closed_form(params, sign);
  r["outputs"]["closed_form"] = cvalue(exact, "closed_form");
  complex value;
  if (f.method == "rotated") {
    value = rotated_contour_oracle(params, sign);
    r["outputs"]["value"] = cvalue(value, "quadrature");
  } else if (f.method == "oscillatory" || f.method == "abel") {
    QuadratureOutcome o;
    if (f.method == "oscillatory") {
      o = regularized_integral(params, sign, CutoffFunction::from_name(f.chi));
    } else {
      if (f.p != 1.0) throw domain_error("the abel method requires p = 1");
      if (f.q_im != 0.0) throw domain_error("the abel method requires real q");
      o = abel_oracle(f.q, sign);
    }
    value = o.value;
    r["outputs"]["value"] = cvalue(value, "extrapolated");
    diag["error_estimate"] = o.error_estimate;
    diag["converged"] = o.converged;
    json samples = json::array();
    for (const auto& [eps, v] : o.per_epsilon_values) samples.push_back({{"parameter", eps}, {"re", v.real()}, {"im", v.imag()}});
    diag["per_parameter_values"] = samples;
    if (!o.converged) run.code = exit_nonconvergence;
  } else {
    throw domain_error("method must be closed, rotated, oscillatory or abel");
  }
  const double deviation = std::abs(value - exact);
  diag["deviation_from_closed_form"] = deviation;
  diag["within_tol"] = deviation <= f.tol;
  r["diagnostics"] = diag;
  r["defaults"] = {{"epsilon_schedule", schedule_json(EpsilonSchedule::geometric())},
                   {"extrapolation_rel_tol", 1e-8},
                   {"quadrature_rel_tol", EngineOptions{}.rel_tol}};
  return run;
}

// ---------------------------------------------------------------------------

struct ExpandFlags {
  double power = 2.0;
  std::string domain = "line";
  std::string amplitude = "gaussian";
  std::string sign = "plus";
  unsigned order = 2;
  double lambda = 100.0;
};

AsymptoticExpansion build_expansion(Domain domain, double power, const Amplitude& a, Sign sign, unsigned N) {
  if (domain == Domain::halfline) return half_line_expansion(power, a, sign, N);
  if (power != std::floor(power) || power < 1.0) throw domain_error("line domain needs an integer phase power >= 1");
  return full_line_expansion(static_cast<unsigned>(power), a, sign, N);
}

Run cmd_expand(const ExpandFlags& f) {
  Run run;
  const Sign sign = parse_sign(f.sign);
  const Domain domain = parse_domain(f.domain);
  const Amplitude a = parse_amplitude(f.amplitude);
  if (!(f.lambda >= 1.0)) throw domain_error("lambda must be >= 1");
  json& r = run.report;
  r["inputs"] = {{"phase_power", f.power}, {"domain", f.domain}, {"amplitude", a.description()},
                 {"sign", to_string(sign)}, {"order", f.order},  {"lambda", f.lambda}};
  const AsymptoticExpansion e = build_expansion(domain, f.power, a, sign, f.order);
  json terms = json::array();
  for (std::size_t k = 0; k < e.terms.size(); ++k) {
    terms.push_back({{"k", k}, {"exponent", e.terms[k].exponent}, {"coefficient", cvalue(e.terms[k].coefficient, "closed_form")}});
  }
  r["outputs"]["terms"] = terms;
  r["outputs"]["remainder_exponent"] = e.remainder_exponent;
  const complex partial = e.partial_sum(f.lambda);
  r["outputs"]["partial_sum"] = cvalue(partial, "closed_form");
  std::string kind;
  const PhaseIntegral o = expansion_oracle(domain, f.power, a, sign, f.lambda, &kind);
  r["outputs"]["oracle"] = cvalue(o.value, kind == "closed_form" ? "closed_form" : "quadrature");
  r["diagnostics"] = {{"abs_remainder", std::abs(o.value - partial)}, {"oracle_error", o.error}};
  r["defaults"] = {{"quadrature_rel_tol", EngineOptions{}.rel_tol}, {"panel_budget", EngineOptions{}.panel_budget}};
  return run;
}

// ---------------------------------------------------------------------------

struct SweepFlags {
  std::string experiment = "remainder";
  double power = 2.0;
  double q = 1.0;
  std::string domain = "line";
  std::string amplitude = "gaussian";
  std::string sign = "plus";
  unsigned order = 2;
  double lambda_start = 1e2;
  double lambda_end = 1e4;
  unsigned points = 5;
  std::string out;
  bool censored = false;
};

struct Row {
  double lambda = 0.0;
  complex oracle{};
  complex partial{};
  double abs_remainder = 0.0;
  double noise = 0.0;
};

Run cmd_sweep(const SweepFlags& f) {
  Run run;
  const Sign sign = parse_sign(f.sign);
  if (f.points < 4) throw domain_error("sweeps need at least 4 points");
  const std::vector<double> grid = lambda_grid(f.lambda_start, f.lambda_end, f.points);
  json& r = run.report;
  r["inputs"] = {{"experiment", f.experiment}, {"phase_power", f.power}, {"q", f.q},
                 {"domain", f.domain},         {"amplitude", f.amplitude}, {"sign", to_string(sign)},
                 {"order", f.order},           {"lambda_start", f.lambda_start}, {"lambda_end", f.lambda_end},
                 {"points", f.points},         {"out", f.out},           {"censored", f.censored}};
  r["defaults"] = {{"lambda_grid", grid}, {"epsilon_schedule", schedule_json(EpsilonSchedule::geometric())},
                   {"quadrature_rel_tol", EngineOptions{}.rel_tol}, {"threads", thread_count()}};

  std::vector<Row> rows;
  json diag;
  if (f.experiment == "remainder") {
    const Domain domain = parse_domain(f.domain);
    const Amplitude a = parse_amplitude(f.amplitude);
    const AsymptoticExpansion e = build_expansion(domain, f.power, a, sign, f.order);
    std::string kind;
    rows = parallel_map<Row>(grid.size(), [&](std::size_t i) {
      const PhaseIntegral o = expansion_oracle(domain, f.power, a, sign, grid[i]);
      const complex partial = e.partial_sum(grid[i]);
      return Row{grid[i], o.value, partial, std::abs(o.value - partial), o.error};
    });
    expansion_oracle(domain, f.power, a, sign, grid.front(), &kind);
    std::vector<DecaySample> samples;
    for (const auto& row : rows) samples.push_back({row.lambda, row.abs_remainder, row.noise});
    const SlopeFit fit = decay_slope_fit(samples, f.censored);
    const double threshold = -e.remainder_exponent + 0.1;
    diag = {{"oracle", kind},
            {"remainder_exponent", e.remainder_exponent},
            {"fitted_slope", rvalue(fit.slope, "quadrature")},
            {"threshold", threshold},
            {"censored_points", fit.censored},
            {"pass", fit.slope <= threshold}};
  } else if (f.experiment == "decay") {
    const Amplitude a = parse_amplitude(f.amplitude);
    if (!(f.q > f.power)) std::cerr << "warning: the decay bound is stated for q > p\n";
    rows = parallel_map<Row>(grid.size(), [&](std::size_t i) {
      const PhaseIntegral o = weighted_half_line_value(f.power, f.q, a, sign, grid[i]);
      return Row{grid[i], o.value, complex{}, std::abs(o.value), o.error};
    });
    std::vector<DecaySample> samples;
    for (const auto& row : rows) samples.push_back({row.lambda, row.abs_remainder, row.noise});
    const SlopeFit fit = decay_slope_fit(samples, f.censored);
    const double threshold = -f.q / f.power + 1.0 + 0.1;
    diag = {{"fitted_slope", rvalue(fit.slope, "quadrature")},
            {"threshold", threshold},
            {"censored_points", fit.censored},
            {"pass", fit.slope <= threshold}};
  } else if (f.experiment == "chi-independence") {
    // Rows are ordered by lambda, then by cutoff in the order listed below.
    const std::vector<CutoffFunction> chis{CutoffFunction::gaussian(), CutoffFunction::sech(), CutoffFunction::bump()};
    const FresnelParams params{f.power, f.q};
    const complex unit = closed_form(params, sign);
    const std::size_t nchi = chis.size();
    std::vector<QuadratureOutcome> outcomes = parallel_map<QuadratureOutcome>(grid.size() * nchi, [&](std::size_t i) {
      return regularized_integral(params, sign, chis[i % nchi], EpsilonSchedule::geometric(), grid[i / nchi]);
    });
    double max_pairwise = 0.0;
    bool converged = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const complex exact = unit * std::pow(grid[i], -f.q / f.power);
      for (std::size_t c = 0; c < nchi; ++c) {
        const auto& o = outcomes[i * nchi + c];
        converged = converged && o.converged;
        rows.push_back({grid[i], exact, o.value, std::abs(o.value - exact), o.error_estimate});
        for (std::size_t d = 0; d < c; ++d) {
          max_pairwise = std::max(max_pairwise, std::abs(o.value - outcomes[i * nchi + d].value));
        }
      }
    }
    json names = json::array();
    for (const auto& c : chis) names.push_back(c.name());
    diag = {{"cutoff_order", names},
            {"max_pairwise_deviation", rvalue(max_pairwise, "extrapolated")},
            {"threshold", 2e-6},
            {"converged", converged},
            {"pass", max_pairwise < 2e-6}};
    if (!converged) run.code = exit_nonconvergence;
  } else {
    throw domain_error("experiment must be remainder, decay or chi-independence");
  }

  std::ostringstream csv;
  csv << csv_header << "\n";
  for (const auto& row : rows) {
    csv << csv_number(row.lambda) << ',' << csv_number(row.oracle.real()) << ',' << csv_number(row.oracle.imag())
        << ',' << csv_number(row.partial.real()) << ',' << csv_number(row.partial.imag()) << ','
        << csv_number(row.abs_remainder) << "\n";
  }
  if (!f.out.empty()) {
    std::ofstream file(f.out);
    if (!file) throw domain_error("cannot open " + f.out + " for writing");
    file << csv.str();
  }
  json table = json::array();
  for (const auto& row : rows) {
    table.push_back({{"lambda", row.lambda},
                     {"oracle", cvalue(row.oracle, f.experiment == "chi-independence" ? "closed_form" : "quadrature")},
                     {"partial", cvalue(row.partial, f.experiment == "chi-independence" ? "extrapolated" : "closed_form")},
                     {"abs_remainder", row.abs_remainder}});
  }
  r["outputs"]["rows"] = table;
  r["diagnostics"] = diag;
  return run;
}

// ---------------------------------------------------------------------------

struct PolesFlags {
  std::string variable = "q";
  double fixed = 1.0;
  double lo = -5.0;
  double hi = 0.0;
  std::string sign = "plus";
};

Run cmd_poles(const PolesFlags& f) {
  Run run;
  const Sign sign = parse_sign(f.sign);
  std::vector<PoleReport> poles;
  if (f.variable == "q") {
    poles = poles_in_q(f.fixed, f.lo, f.hi, sign);
  } else if (f.variable == "p") {
    poles = poles_in_p(f.fixed, f.lo, f.hi, sign);
  } else {
    throw domain_error("--in must be q or p");
  }
  run.report["inputs"] = {{"in", f.variable}, {"fixed", f.fixed}, {"lo", f.lo}, {"hi", f.hi}, {"sign", to_string(sign)}};
  json list = json::array();
  for (const auto& pole : poles) {
    list.push_back({{"location", pole.location.real()}, {"order", pole.order}, {"residue", cvalue(pole.residue, "closed_form")}});
  }
  run.report["outputs"]["poles"] = list;
  return run;
}

// ---------------------------------------------------------------------------

struct QuadraticFlags {
  std::string matrix = "1,0,0,1";
  std::string amplitude = "gaussian";
  unsigned order = 2;
  double lambda = 100.0;
};

Run cmd_quadratic(const QuadraticFlags& f) {
  Run run;
  const SymmetricMatrix A = SymmetricMatrix::from_rows(detail::parse_number_list(f.matrix));
  if (f.amplitude != "gaussian") throw domain_error("quadratic amplitudes: only 'gaussian' (e^{-|x|^2/2}) is supported");
  if (!(f.lambda >= 1.0)) throw domain_error("lambda must be >= 1");
  const MultivariateAmplitude a = MultivariateAmplitude::gaussian(A.dimension(), std::max(12u, 2 * f.order));
  const SignatureDet sd = signature_and_det(A);
  const QuadExpansion e = quadratic_expansion(A, a, f.order);
  run.report["inputs"] = {{"matrix", f.matrix}, {"dimension", A.dimension()}, {"amplitude", f.amplitude},
                          {"order", f.order},   {"lambda", f.lambda}};
  json coeffs = json::array();
  for (std::size_t k = 0; k < e.coefficients.size(); ++k) {
    coeffs.push_back({{"k", k}, {"exponent", k + 0.5 * e.dimension}, {"coefficient", cvalue(e.coefficients[k], "closed_form")}});
  }
  const complex partial = e.partial_sum(f.lambda);
  const PhaseIntegral o = quadratic_oracle(A, a, f.lambda);
  run.report["outputs"] = {{"signature", sd.signature},
                           {"determinant", rvalue(sd.determinant, "closed_form")},
                           {"prefactor", cvalue(e.prefactor, "closed_form")},
                           {"terms", coeffs},
                           {"partial_sum", cvalue(partial, "closed_form")},
                           {"oracle", cvalue(o.value, "quadrature")}};
  run.report["diagnostics"] = {{"abs_remainder", std::abs(o.value - partial)}, {"oracle_error", o.error}};
  return run;
}

struct FourierFlags {
  std::string sign = "plus";
  double xi = 0.0;
};

Run cmd_fourier(const FourierFlags& f) {
  Run run;
  const Sign sign = parse_sign(f.sign);
  const FourierCheck c = fresnel_fourier_check(sign, f.xi);
  run.report["inputs"] = {{"sign", to_string(sign)}, {"xi", f.xi}};
  run.report["outputs"] = {{"lhs", cvalue(c.lhs, "extrapolated")}, {"rhs", cvalue(c.rhs, "closed_form")}};
  run.report["diagnostics"] = {{"deviation", std::abs(c.lhs - c.rhs)}, {"error_estimate", c.error_estimate},
                               {"pass", std::abs(c.lhs - c.rhs) < 1e-5}};
  run.report["defaults"] = {{"epsilon_schedule", schedule_json(EpsilonSchedule::geometric())}, {"chi", "gaussian"}};
  return run;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Fresnel integrals, their regularization and stationary phase expansions.\n" +
               std::string(amplitude_help)};
  app.require_subcommand(1);

  FresnelFlags ff;
  auto* fresnel = app.add_subcommand("fresnel", "evaluate Os-int_0^inf e^{+-ix^p} x^{q-1} dx");
  fresnel->add_option("--p", ff.p, "phase power p > 0")->required();
  fresnel->add_option("--q", ff.q, "weight exponent q (real part)")->required();
  fresnel->add_option("--q-im", ff.q_im, "imaginary part of q (closed method)");
  fresnel->add_option("--sign", ff.sign, "plus | minus")->capture_default_str();
  fresnel->add_option("--method", ff.method, "closed | rotated | oscillatory | abel")->capture_default_str();
  fresnel->add_option("--chi", ff.chi, "cutoff for the oscillatory method: gaussian | sech | bump")->capture_default_str();
  fresnel->add_option("--tol", ff.tol, "tolerance for the deviation from the closed form")->capture_default_str();
  fresnel->add_option("--pole-warning", ff.pole_warning, "warn when q is closer than this to a pole")->capture_default_str();

  ExpandFlags ef;
  auto* expand = app.add_subcommand("expand", "stationary phase expansion of int e^{+-i lambda x^p} a(x) dx");
  expand->add_option("--phase-power", ef.power, "p (halfline) or integer m (line)")->required();
  expand->add_option("--domain", ef.domain, "halfline | line")->capture_default_str();
  expand->add_option("--amplitude", ef.amplitude, amplitude_help)->capture_default_str();
  expand->add_option("--sign", ef.sign, "plus | minus")->capture_default_str();
  expand->add_option("--order", ef.order, "number of terms N (needs N + 1 > p)")->capture_default_str();
  expand->add_option("--lambda", ef.lambda, "lambda >= 1")->capture_default_str();

  SweepFlags sf;
  auto* sweep = app.add_subcommand("sweep", "lambda sweeps with CSV output: " + std::string(csv_header));
  sweep->add_option("--experiment", sf.experiment, "remainder | decay | chi-independence")->capture_default_str();
  sweep->add_option("--phase-power", sf.power, "phase power p or m")->capture_default_str();
  sweep->add_option("--q", sf.q, "weight exponent (decay, chi-independence)")->capture_default_str();
  sweep->add_option("--domain", sf.domain, "halfline | line (remainder)")->capture_default_str();
  sweep->add_option("--amplitude", sf.amplitude, amplitude_help)->capture_default_str();
  sweep->add_option("--sign", sf.sign, "plus | minus")->capture_default_str();
  sweep->add_option("--order", sf.order, "expansion order N (remainder)")->capture_default_str();
  sweep->add_option("--lambda-start", sf.lambda_start)->capture_default_str();
  sweep->add_option("--lambda-end", sf.lambda_end)->capture_default_str();
  sweep->add_option("--points", sf.points, "log-spaced grid points (>= 4)")->capture_default_str();
  sweep->add_option("--out", sf.out, "CSV output file");
  sweep->add_flag("--censored", sf.censored, "clamp values below the quadrature noise floor instead of failing");

  PolesFlags pf;
  auto* poles = app.add_subcommand("poles", "poles and residues of the closed form in q or in p");
  poles->add_option("--in", pf.variable, "q | p")->capture_default_str();
  poles->add_option("--fixed", pf.fixed, "the other parameter (p when --in q, q when --in p)")->capture_default_str();
  poles->add_option("--lo", pf.lo)->capture_default_str();
  poles->add_option("--hi", pf.hi)->capture_default_str();
  poles->add_option("--sign", pf.sign, "plus | minus")->capture_default_str();

  QuadraticFlags qf;
  auto* quadratic = app.add_subcommand("quadratic", "expansion of int e^{i lambda <Ax,x>/2} a(x) dx, n <= 3");
  quadratic->add_option("--matrix", qf.matrix, "row-major symmetric matrix, e.g. 1,0,0,-1")->capture_default_str();
  quadratic->add_option("--amplitude", qf.amplitude, "gaussian")->capture_default_str();
  quadratic->add_option("--order", qf.order)->capture_default_str();
  quadratic->add_option("--lambda", qf.lambda)->capture_default_str();

  FourierFlags of;
  auto* fourier = app.add_subcommand("fourier", "Fourier transform of e^{+-ix^2/2} at xi");
  fourier->add_option("--sign", of.sign, "plus | minus")->capture_default_str();
  fourier->add_option("--xi", of.xi, "|xi| <= 10")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_validation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    Run run;
    if (fresnel->parsed()) run = cmd_fresnel(ff);
    else if (expand->parsed()) run = cmd_expand(ef);
    else if (sweep->parsed()) run = cmd_sweep(sf);
    else if (poles->parsed()) run = cmd_poles(pf);
    else if (quadratic->parsed()) run = cmd_quadratic(qf);
    else run = cmd_fourier(of);

    json report;
    report["schema_version"] = schema_version;
    report["command"] = command;
    for (auto& [k, v] : run.report.items()) report[k] = v;
    report["exit_code"] = run.code;
    report["wall_time"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(report);
    return run.code;
  } catch (const pole_error& e) {
    const auto& pole = e.pole();
    return fail(command, exit_validation, "pole", e.what(),
                {{"pole", {{"location", pole.location.real()},
                           {"order", pole.order},
                           {"residue", {{"re", pole.residue.real()}, {"im", pole.residue.imag()}}}}}});
  } catch (const domain_error& e) {
    return fail(command, exit_validation, "validation", e.what());
  } catch (const convergence_error& e) {
    return fail(command, exit_nonconvergence, "convergence", e.what());
  } catch (const quadrature_error& e) {
    return fail(command, exit_nonconvergence, "quadrature", e.what());
  } catch (const overflow_error& e) {
    return fail(command, exit_nonconvergence, "overflow", e.what());
  } catch (const std::exception& e) {
    return fail(command, 1, "internal", e.what());
  }
}
