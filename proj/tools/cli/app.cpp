#include "cli/app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/checks.hpp"
#include "cli/output.hpp"
#include "cli/ranges.hpp"
#include "cylbif/analysis.hpp"
#include "cylbif/bifurcation.hpp"
#include "cylbif/delaunay.hpp"
#include "cylbif/pdecheck.hpp"
#include "cylbif/spectrum.hpp"

namespace cylbif::cli {

namespace {

struct Sink {
  std::string format = "csv";
  std::string path = "-";
};

struct Batch {
  std::vector<std::string> columns;
  std::vector<OutputRecord> records;
  bool failed = false;  ///< a reported check did not pass
};

const std::vector<std::string> kCheckColumns{"suite", "property", "status", "value", "limit", "detail"};

void add_sink_options(CLI::App& cmd, Sink& sink) {
  cmd.add_option("--format", sink.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--out", sink.path, "Output file, '-' for stdout");
}

void emit(const Sink& sink, const Batch& batch, std::ostream& out) {
  const Format format = sink.format == "json" ? Format::Json : Format::Csv;
  if (sink.path == "-") {
    write_records(out, format, batch.columns, batch.records);
    return;
  }
  std::ofstream file(sink.path);
  if (!file) throw UsageError("cannot open '" + sink.path + "' for writing");
  write_records(file, format, batch.columns, batch.records);
  if (!file) throw std::runtime_error("write to '" + sink.path + "' failed");
}

OutputRecord check_record(const std::string& suite, const std::string& property, const std::string& status,
                          double value, std::optional<double> limit, const std::string& detail) {
  OutputRecord r{Schema::CheckResult, {}};
  r.add("suite", suite).add("property", property).add("status", status).add("value", value).add("limit", limit);
  r.add("detail", detail);
  return r;
}

// ---------------------------------------------------------------- commands

Batch cmd_table(const std::string& two_nu) {
  Batch b{{"two_nu", "n", "j_nu", "rho_nu", "T_nu", "T_lower", "T_upper"}, {}};
  const std::vector<int> values = parse_int_list(two_nu);
  if (std::any_of(values.begin(), values.end(), [](int v) { return v < 0; }))
    throw UsageError("--two-nu entries must be >= 0");
  for (const auto& p : bifurcation::table(values)) {
    OutputRecord r{Schema::TableRow, {}};
    r.add("two_nu", p.n - 2).add("n", p.n).add("j_nu", p.j_nu).add("rho_nu", p.rho_nu).add("T_nu", p.T_nu);
    r.add("T_lower", p.T_lower).add("T_upper", p.T_upper);
    b.records.push_back(std::move(r));
  }
  return b;
}

Batch cmd_sigma(int n, const std::string& T_text, int samples, bool oracle) {
  if (n < 1) throw UsageError("--n must be >= 1");
  const RealRange range = parse_real_range(T_text);
  if (range.start <= 0) throw UsageError("--T must be positive");
  Batch b{{"T", "sigma1"}, {}};
  if (oracle) b.columns.insert(b.columns.end(), {"sigma1_ode", "abs_diff"});
  const auto& data = spectrum::eigen_data(n);
  for (double T : sample_range(range, samples)) {
    OutputRecord r{Schema::SigmaSample, {}};
    const double s = spectrum::sigma1(data, T);
    r.add("T", T).add("sigma1", s);
    if (oracle) {
      const double ode = spectrum::sigma1_via_ode(n, T);
      r.add("sigma1_ode", ode).add("abs_diff", std::fabs(s - ode));
    }
    b.records.push_back(std::move(r));
  }
  return b;
}

Batch cmd_profile(int n, double s, int periods, int samples) {
  if (n < 1) throw UsageError("--n must be >= 1");
  Batch b{{"t", "R", "order"}, {}};
  for (const auto& p : bifurcation::profile(n, s, periods, samples).samples) {
    OutputRecord r{Schema::ProfileSample, {}};
    r.add("t", p.t).add("R", p.R).add("order", "first-order");
    b.records.push_back(std::move(r));
  }
  return b;
}

Batch cmd_delaunay(double sigma, int samples) {
  Batch b{{"t", "y", "z"}, {}};
  for (const auto& p : delaunay::delaunay_profile(sigma, samples).samples) {
    OutputRecord r{Schema::DelaunaySample, {}};
    r.add("t", p.t).add("y", p.y).add("z", p.z);
    b.records.push_back(std::move(r));
  }
  return b;
}

Batch cmd_verify_pde(int n, int k, double eps, int nr, int nt) {
  if (n < 1 || k < 1) throw UsageError("--n and --k must be >= 1");
  const std::string S = "verify-pde";
  const double T = bifurcation::t_nu(n).T_nu;
  const double closed = spectrum::sigma_k(n, k, T);
  const auto resp = pdecheck::linearized_response(n, k, T, eps, nr, nt);

  // sigma_1 vanishes at T_nu; measure its error against the next eigenvalue.
  const double zero_tol = 1e-8 * std::max(1.0, std::fabs(spectrum::eigen_data(n).phi1_prime_at_1));
  const bool at_kernel = std::fabs(closed) <= zero_tol;
  const double scale = at_kernel ? std::fabs(spectrum::sigma_k(n, k + 1, T)) : std::fabs(closed);
  const double error = std::fabs(resp.coefficient - closed) / scale;

  double leak = 0.0;
  for (std::size_t m = 1; m < resp.modes.size(); ++m)
    if (static_cast<int>(m) != k) leak = std::max(leak, std::fabs(resp.modes[m]));
  const double leak_rel = leak / std::max(std::fabs(resp.coefficient), scale);

  const std::string grid = std::to_string(nr) + "x" + std::to_string(nt);
  Batch b{kCheckColumns, {}};
  b.records.push_back(check_record(S, "T_nu", "info", T, std::nullopt, "n = " + std::to_string(n)));
  b.records.push_back(check_record(S, "closed-form sigma_k(T_nu)", "info", closed, std::nullopt,
                                   "k = " + std::to_string(k)));
  b.records.push_back(check_record(S, "PDE estimate", "info", resp.coefficient, std::nullopt, "grid " + grid));
  b.records.push_back(check_record(S, "normalisation factor", "info", resp.normalization, std::nullopt,
                                   "v = 0 boundary derivative matched to phi_1'(1)"));
  b.records.push_back(check_record(S, "discrete eigenvalue", "info", resp.lambda, std::nullopt,
                                   "straight cylinder: " + format_real(resp.lambda_straight)));
  const bool err_ok = error <= 0.05;
  b.records.push_back(check_record(S, "relative error", err_ok ? "pass" : "fail", error, 0.05,
                                   at_kernel ? "|estimate| / |sigma_{k+1}(T_nu)|, sigma_k(T_nu) = 0"
                                             : "|estimate - sigma_k| / |sigma_k|"));
  const bool leak_ok = leak_rel <= 0.05;
  b.records.push_back(check_record(S, "leakage into other modes", leak_ok ? "pass" : "fail", leak_rel, 0.05,
                                   "max other mode relative to the mode-k scale"));
  b.failed = !err_ok || !leak_ok;
  return b;
}

Batch cmd_check(const std::string& suite) {
  Batch b{kCheckColumns, {}};
  for (const auto& c : run_suite(suite)) {
    b.records.push_back(check_record(c.suite, c.property, c.passed ? "pass" : "fail", c.value, c.limit, c.detail));
    b.failed = b.failed || !c.passed;
  }
  return b;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bifurcation periods, spectra and verification data for extremal domains in B^n x R.", "cylbif"};
  app.require_subcommand(1);

  Sink sink;
  std::function<Batch()> action;

  auto* table = app.add_subcommand("table", "Bifurcation periods T_nu with bounds");
  std::string two_nu = "0..20,40,200,2000";
  table->add_option("--two-nu", two_nu, "List of 2 nu values, e.g. 0..7,40");
  add_sink_options(*table, sink);
  table->callback([&] { action = [&] { return cmd_table(two_nu); }; });

  auto* sigma = app.add_subcommand("sigma", "First eigenvalue sigma_1(T) of the linearised operator");
  int sigma_n = 0, sigma_samples = 1;
  std::string sigma_T;
  bool oracle = false;
  sigma->add_option("--n", sigma_n, "Dimension of the ball")->required();
  sigma->add_option("--T", sigma_T, "Period or start:end range")->required();
  sigma->add_option("--samples", sigma_samples, "Points across the range");
  sigma->add_flag("--oracle", oracle, "Also evaluate the ODE oracle");
  add_sink_options(*sigma, sink);
  sigma->callback([&] { action = [&] { return cmd_sigma(sigma_n, sigma_T, sigma_samples, oracle); }; });

  auto* profile = app.add_subcommand("profile", "First-order bifurcating boundary R(t)");
  int profile_n = 0, periods = 1, profile_samples = 64;
  double amplitude = 0.0;
  profile->add_option("--n", profile_n, "Dimension of the ball")->required();
  profile->add_option("--s", amplitude, "Amplitude, |s| < 1")->required();
  profile->add_option("--periods", periods, "Number of periods");
  profile->add_option("--samples", profile_samples, "Samples per period");
  add_sink_options(*profile, sink);
  profile->callback([&] { action = [&] { return cmd_profile(profile_n, amplitude, periods, profile_samples); }; });

  auto* dl = app.add_subcommand("delaunay", "Generating curve of a Delaunay surface");
  double dl_sigma = 0.0;
  int dl_samples = 256;
  dl->add_option("--sigma", dl_sigma, "Parameter in (0, 1]")->required();
  dl->add_option("--samples", dl_samples, "Samples over one period");
  add_sink_options(*dl, sink);
  dl->callback([&] { action = [&] { return cmd_delaunay(dl_sigma, dl_samples); }; });

  auto* pde = app.add_subcommand("verify-pde", "Compare the PDE linearisation with sigma_k at T_nu");
  int pde_n = 2, pde_k = 2, nr = 96, nt = 96;
  double eps = 1e-3;
  pde->add_option("--n", pde_n, "Dimension of the ball");
  pde->add_option("--k", pde_k, "Perturbation mode");
  pde->add_option("--eps", eps, "Perturbation amplitude");
  pde->add_option("--nr", nr, "Radial intervals");
  pde->add_option("--nt", nt, "Periodic intervals");
  add_sink_options(*pde, sink);
  pde->callback([&] { action = [&] { return cmd_verify_pde(pde_n, pde_k, eps, nr, nt); }; });

  auto* check = app.add_subcommand("check", "Run numerical property suites");
  std::string suite = "all";
  std::vector<std::string> choices = suite_names();
  choices.insert(choices.begin(), "all");
  check->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(choices));
  add_sink_options(*check, sink);
  check->callback([&] { action = [&] { return cmd_check(suite); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const bool help = e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success);
    app.exit(e, help ? out : err, err);
    return help ? 0 : 2;
  }

  try {
    const Batch batch = action();
    emit(sink, batch, out);
    return batch.failed ? 1 : 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cylbif::cli
