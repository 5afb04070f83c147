#include "lbverify/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "lbverify/errors.hpp"
#include "lbverify/suites.hpp"

namespace lb::cli {

namespace {

struct Options {
  double lambda = 3.0;
  double xi = 1.0;
  double e_tilde = 2.0;
  std::optional<double> r_min;
  std::optional<double> r_max;
  std::size_t samples = 4096;
  std::optional<double> b;
  std::string format = "csv";
  std::string out_path;
  std::string lambda_axis, xi_axis, e_axis;
};

void add_common(CLI::App& sub, Options& o) {
  sub.add_option("--lambda", o.lambda, "cosmological constant (> 0)");
  sub.add_option("--xi", o.xi, "integration constant xi");
  sub.add_option("--r-min", o.r_min, "window start (default -2a)");
  sub.add_option("--r-max", o.r_max, "window end (default 2a)");
  sub.add_option("--samples", o.samples, "grid points (>= 2)");
  sub.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--out", o.out_path, "output file (default stdout)");
}

// "start:stop:count" or a single value.
suites::SweepAxis parse_axis(const std::string& text, double fallback) {
  if (text.empty()) return {fallback, fallback, 1};
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ParameterError("bad sweep axis: " + text);
    }
    if (used != s.size()) throw ParameterError("bad sweep axis: " + text);
    return v;
  };
  if (parts.size() == 1) {
    const double v = num(parts[0]);
    return {v, v, 1};
  }
  if (parts.size() != 3) throw ParameterError("sweep axis must be start:stop:count: " + text);
  const double count = num(parts[2]);
  if (count < 1 || count != std::floor(count)) throw ParameterError("sweep count must be a positive integer");
  return {num(parts[0]), num(parts[1]), static_cast<std::size_t>(count)};
}

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LBVERIFY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

suites::Window window_of(const Options& o, const SolutionParams& p) {
  suites::Window w = suites::default_window(p, o.samples);
  if (o.r_min) w.r_min = *o.r_min;
  if (o.r_max) w.r_max = *o.r_max;
  if (!std::isfinite(w.r_min) || !std::isfinite(w.r_max) || !(w.r_min < w.r_max))
    throw ParameterError("r-min must be below r-max");
  if (o.samples < 2) throw ParameterError("samples must be at least 2");
  return w;
}

int write_report(const VerificationReport& rep, const ReportMeta& meta, const Options& o, std::ostream& out,
                 std::ostream& err) {
  std::ostringstream body;
  if (o.format == "json")
    emit_json(rep, meta, body);
  else
    emit_csv(rep, body);
  if (o.out_path.empty()) {
    out << body.str();
    out.flush();
    if (!out) {
      err << "lbverify: write to stdout failed\n";
      return kExitInternalFailure;
    }
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    file << body.str();
    file.close();
    if (!file) {
      err << "lbverify: cannot write " << o.out_path << "\n";
      return kExitInternalFailure;
    }
  }
  return rep.internal_ok() ? kExitOk : kExitInternalFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification suites for the LB cylindrical solution", "lbverify"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  Options o;
  auto* verify = app.add_subcommand("verify", "field equations, scalar field, ODE oracle");
  auto* stab = app.add_subcommand("stability", "fixed point and Jacobian spectrum");
  auto* energy = app.add_subcommand("energy", "energy-condition margins");
  auto* cong = app.add_subcommand("congruence", "timelike and null congruences");
  auto* tort = app.add_subcommand("tortoise", "tortoise coordinate");
  auto* sweep = app.add_subcommand("sweep", "grid over (lambda, xi, E~)");
  for (auto* s : {verify, stab, energy, cong, tort}) add_common(*s, o);
  cong->add_option("--e-tilde", o.e_tilde, "geodesic energy per unit mass (|E~| >= 1)");
  cong->add_option("--b", o.b, "Phi_b parameter for the root scan");

  sweep->add_option("--lambda", o.lambda_axis, "start:stop:count");
  sweep->add_option("--xi", o.xi_axis, "start:stop:count");
  sweep->add_option("--e-tilde", o.e_axis, "start:stop:count");
  sweep->add_option("--samples", o.samples, "grid points per parameter point (>= 2)");
  sweep->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", o.out_path, "output file (default stdout)");

  if (!args.empty() && !args.front().starts_with("-") && app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "lbverify: unknown subcommand '" << args.front() << "'\n" << app.help();
    return kExitInvalid;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (e.get_exit_code() != static_cast<int>(CLI::ExitCodes::Success)) err << app.help();
    return kExitInvalid;
  }

  try {
    if (sweep->parsed()) {
      const auto la = parse_axis(o.lambda_axis, 3.0);
      const auto xa = parse_axis(o.xi_axis, 1.0);
      const auto ea = parse_axis(o.e_axis, 2.0);
      if (o.samples < 2) throw ParameterError("samples must be at least 2");
      const auto rep = suites::sweep_suite(la, xa, ea, o.samples, thread_cap());
      const ReportMeta meta{la.start, xa.start, de_sitter_radius(la.start), tool_version()};
      return write_report(rep, meta, o, out, err);
    }

    const SolutionParams p = make_params(o.lambda, o.xi);
    const ReportMeta meta{p.lambda, p.xi, p.a, tool_version()};
    VerificationReport rep;
    if (verify->parsed()) {
      rep = suites::verify_suite(p, window_of(o, p));
    } else if (stab->parsed()) {
      (void)window_of(o, p);
      rep = suites::stability_suite(p.lambda);
    } else if (energy->parsed()) {
      rep = suites::energy_suite(p, window_of(o, p));
    } else if (cong->parsed()) {
      const auto cfg = congruence::make_config(o.e_tilde);
      if (o.b && !(*o.b >= 0.0 && *o.b <= 0.5)) throw ParameterError("b must lie in [0, 1/2]");
      rep = suites::congruence_suite(p, cfg, window_of(o, p), o.b);
    } else if (tort->parsed()) {
      rep = suites::tortoise_suite(p, window_of(o, p));
    }
    return write_report(rep, meta, o, out, err);
  } catch (const ParameterError& e) {
    err << "lbverify: invalid parameters: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "lbverify: " << e.what() << "\n";
    return kExitInternalFailure;
  }
}

}  // namespace lb::cli
