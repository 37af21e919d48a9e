// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scatter/cli/commands.hpp"
#include "scatter/cli/config.hpp"
#include "scatter/cli/table.hpp"

// `scatter` command-line front end. Exit status: 0 success, 1 check failure,
// 2 configuration error.

namespace scatter::cli {

namespace detail {

struct Flags {
  double tau{}, alpha{}, mass{}, k{}, s{};
  std::string theta, range, format{"csv"}, config;
  std::vector<std::string> tol;
};

inline void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty() || cfg.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file '" + cfg.out + "'");
  file << text;
}

inline bool truthy(const std::string& v) {
  return v == "1" || v == "true" || v == "yes" || v == "on";
}

/// Locate --config PATH / --config=PATH among the user arguments.
inline std::optional<std::string> find_config_flag(const std::vector<std::string>& args) {
  for (std::size_t n = 0; n < args.size(); ++n) {
    if (args[n] == "--config" && n + 1 < args.size()) return args[n + 1];
    if (args[n].rfind("--config=", 0) == 0) return args[n].substr(9);
  }
  return std::nullopt;
}

}  // namespace detail

/// Runs the CLI on `args` (program name excluded). Config-file keys are injected
/// before the user's flags, so flags win. `env_config` is the SCATTER_CONFIG value.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                   std::optional<std::string> env_config = std::nullopt) {
  CLI::App app{"Relativistic two-body scattering from SO(3,1) intertwining relations", "scatter"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  detail::Flags f;
  RunConfig cfg;
  std::string out_path, dump_path, axis, mode{"amplitude"};
  bool partial = false, units = false;
  int l_max = 30, s_lmax = 200, jobs = 0;

  struct Sub {
    CLI::App* app;
    CLI::Option *tau{}, *alpha{}, *mass{}, *k{}, *s{}, *theta{};
  };
  auto add_physics = [&](CLI::App* sub, bool with_tau, bool with_alpha) {
    Sub out{sub};
    if (with_tau) out.tau = sub->add_option("--tau", f.tau, "Principal-series parameter tau");
    if (with_alpha) {
      out.alpha = sub->add_option("--alpha", f.alpha, "Coupling strength alpha");
      out.mass = sub->add_option("--mass", f.mass, "Particle mass (equal masses)");
    }
    out.k = sub->add_option("--k", f.k, "Relative momentum |k|");
    out.s = sub->add_option("--s", f.s, "Mandelstam s (needs --mass)");
    out.theta = sub->add_option("--theta", f.theta, "Angle grid MIN:MAX:COUNT in degrees");
    sub->add_option("--out", out_path, "Output file (default stdout)");
    sub->add_option("--format", f.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    sub->add_flag("--units", units, "Annotate CSV columns with units");
    sub->add_option("--config", f.config, "Flat key = value config file");
    return out;
  };

  CLI::App* verify = app.add_subcommand("verify", "Run the algebraic verification suite");
  Sub v{verify};
  v.tau = verify->add_option("--tau", f.tau, "Principal-series parameter tau")->required();
  verify->add_option("--lmax", l_max, "Truncation l_max of the representation matrices");
  verify->add_option("--smatrix-lmax", s_lmax, "Largest l for the S-matrix checks");
  verify->add_option("--tol", f.tol, "Tolerance override NAME=VALUE")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  verify->add_option("--dump", dump_path, "Write the generator matrices to this file");
  verify->add_option("--out", out_path, "Also write the report to this file");
  verify->add_option("--config", f.config, "Flat key = value config file");

  CLI::App* amplitude = app.add_subcommand("amplitude", "Tabulate the c.m. amplitude f(theta)");
  Sub a = add_physics(amplitude, true, true);
  amplitude->add_flag("--partial-wave", partial, "Add the regularised partial-wave sum");

  CLI::App* xsec = app.add_subcommand("xsec", "Tabulate Coulomb/Mott cross sections");
  Sub x = add_physics(xsec, false, true);

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep k, alpha or tau; json-lines output");
  Sub w = add_physics(sweep, true, true);
  sweep->add_option("--axis", axis, "k, alpha or tau");
  sweep->add_option("--range", f.range, "Sweep MIN:MAX:COUNT");
  sweep->add_option("--mode", mode, "amplitude or xsec");
  sweep->add_flag("--partial-wave", partial, "Add the regularised partial-wave sum");
  sweep->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");

  try {
    // Merge the config file ahead of the user's flags.
    const auto is_sub = [&](const std::string& a) {
      return a == "verify" || a == "amplitude" || a == "xsec" || a == "sweep";
    };
    const auto cmd_it = std::find_if(args.begin(), args.end(), is_sub);
    std::optional<std::string> config_path = detail::find_config_flag(args);
    if (!config_path && env_config && !env_config->empty()) config_path = env_config;
    if (cmd_it != args.end() && config_path) {
      CLI::App* sub = app.get_subcommand(*cmd_it);
      std::set<std::string> known;
      for (CLI::App* s : app.get_subcommands([](CLI::App*) { return true; })) {
        for (const CLI::Option* o : s->get_options()) {
          for (const auto& name : o->get_lnames()) known.insert(name);
        }
      }
      std::vector<std::string> injected;
      for (const auto& [key, value] : read_flat_config_file(*config_path)) {
        if (key.rfind("tol.", 0) == 0) {
          if (*cmd_it == "verify") injected.insert(injected.end(), {"--tol", key.substr(4) + "=" + value});
          continue;
        }
        if (key == "config" || !known.count(key)) throw ConfigError("unknown config key '" + key + "'");
        const CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr) continue;  // belongs to another subcommand
        if (opt->get_expected_max() == 0) {
          if (detail::truthy(value)) injected.push_back("--" + key);
        } else {
          injected.insert(injected.end(), {"--" + key, value});
        }
      }
      args.insert(cmd_it + 1, injected.begin(), injected.end());
    }

    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  } catch (const ConfigError& e) {
    err << "scatter: config error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    auto pick = [](CLI::Option* o, double value) -> std::optional<double> {
      if (o != nullptr && o->count() > 0) return value;
      return std::nullopt;
    };
    const Sub& active = verify->parsed() ? v : amplitude->parsed() ? a : xsec->parsed() ? x : w;
    cfg.command = active.app->get_name();
    cfg.tau = pick(active.tau, f.tau);
    cfg.alpha = pick(active.alpha, f.alpha);
    cfg.mass = pick(active.mass, f.mass);
    cfg.k = pick(active.k, f.k);
    cfg.s = pick(active.s, f.s);
    if (active.theta != nullptr && active.theta->count() > 0) cfg.theta_deg = parse_range(f.theta, "--theta", 2);
    cfg.l_max = l_max;
    cfg.smatrix_l_max = s_lmax;
    cfg.out = out_path;
    cfg.dump = dump_path;
    cfg.format = f.format == "jsonl" ? OutputFormat::JsonLines : OutputFormat::Csv;
    cfg.partial_wave = partial;
    cfg.units = units;
    cfg.axis = axis;
    cfg.mode = mode;
    cfg.jobs = jobs;
    for (const auto& t : f.tol) {
      const auto eq = t.find('=');
      double value = 0;
      if (eq == std::string::npos || !parse_double(t.substr(eq + 1), value) || !(value >= 0.0)) {
        throw ConfigError("--tol expects NAME=VALUE, got '" + t + "'");
      }
      const std::string name = t.substr(0, eq);
      if (!cfg.tolerances.count(name)) throw ConfigError("unknown tolerance '" + name + "'");
      cfg.tolerances[name] = value;
    }

    if (cfg.command == "verify") {
      const VerifyOutcome outcome = run_verify(cfg);
      out << outcome.report;
      if (!cfg.out.empty() && cfg.out != "-") detail::write_output(cfg, outcome.report, out);
      return outcome.passed ? kSuccess : kCheckFailure;
    }

    std::ostringstream text;
    if (cfg.command == "sweep") {
      if (active.app->get_option("--format")->count() == 0) cfg.format = OutputFormat::JsonLines;
      if (cfg.axis.empty()) throw ConfigError("sweep needs --axis");
      if (w.app->get_option("--range")->count() == 0) throw ConfigError("sweep needs --range");
      cfg.sweep = parse_range(f.range, "--range", 1);
      for (const auto& line : run_sweep(cfg)) text << line << '\n';
    } else if (cfg.command == "amplitude") {
      validate_interaction(cfg);
      const double k = resolve_k(cfg);
      validate_theta(cfg, cfg.partial_wave);
      write_table(text, amplitude_table(resolve_tau(cfg, k), k, cfg.theta_deg, cfg.partial_wave),
                  cfg.format, cfg.units);
    } else {
      if (!cfg.alpha || !cfg.mass) throw ConfigError("xsec needs --alpha and --mass");
      validate_interaction(cfg);
      const double k = resolve_k(cfg);
      validate_theta(cfg, true);
      write_table(text, xsec_table(*cfg.alpha, *cfg.mass, k, cfg.theta_deg), cfg.format, cfg.units);
    }
    detail::write_output(cfg, text.str(), out);
    return kSuccess;
  } catch (const ConfigError& e) {
    err << "scatter: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ConvergenceError& e) {
    err << "scatter: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return kCheckFailure;
  } catch (const std::exception& e) {
    err << "scatter: error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace scatter::cli
