// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "scatter/amplitude.hpp"
#include "scatter/cli/config.hpp"
#include "scatter/cli/table.hpp"
#include "scatter/kinematics.hpp"
#include "scatter/matrix_dump.hpp"
#include "scatter/smatrix.hpp"
#include "scatter/so31.hpp"

namespace scatter::cli {

inline std::string format_sci(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 3);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Parameter resolution shared by amplitude, xsec and sweep.

inline void require_positive(const std::optional<double>& v, const char* name) {
  if (v && !(*v > 0.0)) throw ConfigError(std::string("--") + name + " must be positive");
}

inline void validate_interaction(const RunConfig& cfg) {
  if (cfg.tau && (cfg.alpha || cfg.mass)) {
    throw ConfigError("give either --tau or --alpha with --mass, not both");
  }
  if (!cfg.tau && !(cfg.alpha && cfg.mass)) {
    throw ConfigError("an interaction is required: --tau, or --alpha with --mass");
  }
  if (cfg.tau && !std::isfinite(*cfg.tau)) throw ConfigError("--tau must be finite");
  require_positive(cfg.mass, "mass");
}

/// k from --k, or from --s with equal masses --mass.
inline double resolve_k(const RunConfig& cfg) {
  if (cfg.k && cfg.s) throw ConfigError("give either --k or --s, not both");
  if (cfg.k) {
    require_positive(cfg.k, "k");
    return *cfg.k;
  }
  if (cfg.s) {
    if (!cfg.mass) throw ConfigError("--s needs --mass");
    try {
      const double k = k_from_s(*cfg.s, *cfg.mass, *cfg.mass);
      if (!(k > 0.0)) throw ConfigError("--s is at threshold; k would vanish");
      return k;
    } catch (const ThresholdError& e) {
      throw ConfigError(e.what());
    }
  }
  throw ConfigError("a kinematic point is required: --k or --s");
}

inline double resolve_tau(const RunConfig& cfg, double k) {
  return cfg.tau ? *cfg.tau : coulomb_tau(*cfg.alpha, *cfg.mass, k);
}

inline void validate_theta(const RunConfig& cfg, bool symmetric) {
  const double lo = kDefaultThetaMin / kDegree;
  const double hi = symmetric ? 180.0 - lo : 180.0;
  if (cfg.theta_deg.min < lo - 1e-9 || cfg.theta_deg.max > hi + 1e-9) {
    throw ConfigError("--theta must lie inside [" + format_double(lo) + ", " + format_double(hi) +
                      "] degrees");
  }
}

// ---------------------------------------------------------------------------
// amplitude

/// theta, Re f, Im f, |f|, dsigma/dOmega and optionally the regularised partial-wave f.
inline Table amplitude_table(double tau, double k, const Range& theta_deg, bool partial_wave) {
  Table table;
  table.columns = {{"theta_deg", "deg"},           {"f_re", "1/momentum"},
                   {"f_im", "1/momentum"},         {"f_abs", "1/momentum"},
                   {"dsigma_domega", "area/sr"}};
  if (partial_wave) {
    table.columns.push_back({"pw_re", "1/momentum"});
    table.columns.push_back({"pw_im", "1/momentum"});
    table.columns.push_back({"rel_dev", "1"});
  }
  const RegularizationSpec reg;
  std::optional<PartialWaveSMatrix> s;
  if (partial_wave) s = sl_closed_form_sequence(tau, reg.max_l());
  for (double deg : theta_deg.values()) {
    const double theta = deg * kDegree;
    const Complex f = closed_form_amplitude(tau, k, theta);
    std::vector<double> row = {deg, f.real(), f.imag(), std::abs(f), dsigma_domega(f)};
    if (partial_wave) {
      const Complex pw = partial_wave_amplitude(*s, k, theta, reg);
      const double dev = std::abs(f) > 0.0 ? std::abs(pw - f) / std::abs(f) : std::abs(pw);
      row.insert(row.end(), {pw.real(), pw.imag(), dev});
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

// ---------------------------------------------------------------------------
// xsec

/// theta, t, dsigma/dOmega, identical-particle dsigma/dOmega, dsigma/dt and the
/// dsigma/dt over (pi/k^2)|f|^2 diagnostic.
inline Table xsec_table(double alpha, double m, double k, const Range& theta_deg) {
  Table table;
  table.columns = {{"theta_deg", "deg"},          {"t", "momentum^2"},
                   {"dsigma_domega", "area/sr"},  {"dsigma_domega_sym", "area/sr"},
                   {"dsigma_dt", "area/momentum^2"}, {"dsigma_dt_ratio", "momentum^2"}};
  const auto [p1, p2] = from_cm_at_rest(Vec3{0.0, 0.0, k}, m, m);
  const double s = mandelstam_s(p1, p2);
  for (double deg : theta_deg.values()) {
    const double theta = deg * kDegree;
    const FourMomentum p1_out = FourMomentum::on_shell(m, Vec3{k * std::sin(theta), 0.0, k * std::cos(theta)});
    const Complex f = coulomb_amplitude(alpha, m, k, theta);
    const double dsdt = dsigma_dt(p1, p2, invariant_amplitude(s, f));
    table.rows.push_back({deg, momentum_transfer_t(p1, p1_out), dsigma_domega(f),
                          mott_cross_section(alpha, m, k, theta), dsdt,
                          dsigma_dt_ratio(dsdt, f, k)});
  }
  return table;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOutcome {
  std::string report;
  bool passed{true};
};

inline VerifyOutcome run_verify(const RunConfig& cfg) {
  if (!cfg.tau) throw ConfigError("verify needs --tau");
  if (!std::isfinite(*cfg.tau)) throw ConfigError("--tau must be finite");
  if (cfg.l_max < 2) throw ConfigError("size error: --lmax must be at least 2");
  if (cfg.smatrix_l_max < 0) throw ConfigError("--smatrix-lmax must be non-negative");
  const double tau = *cfg.tau;

  std::ostringstream os;
  VerifyOutcome outcome;
  int checks = 0;
  int failed = 0;
  auto line = [&](const std::string& name, double value, const std::string& tol_name, bool gated) {
    const double tol = cfg.tolerances.at(tol_name);
    const bool ok = value <= tol;
    std::string status = "INFO";
    if (gated) {
      ++checks;
      status = ok ? "PASS" : "FAIL";
      if (!ok) ++failed;
    }
    os << status << "  " << name << "  residual=" << format_sci(value) << "  tol=" << format_sci(tol)
       << '\n';
  };

  os << "# verify tau=" << format_double(tau) << " l_max=" << cfg.l_max
     << " smatrix_l_max=" << cfg.smatrix_l_max << '\n';

  const TruncatedRep rep = build_rep(RepLabel{tau, 0}, cfg.l_max);
  const TruncatedRep dual = build_rep(weyl_dual(rep.label()), cfg.l_max);

  const ResidualReport algebra = commutator_residuals(rep);
  for (const auto& e : algebra.entries()) {
    line("commutator/" + e.family + " " + e.name, e.value, "commutator", e.gated);
  }

  const Casimirs c = casimirs(rep);
  const CasimirDeviation dev = casimir_deviation(rep, c);
  line("casimir/C1 diagonal vs " + format_double(dev.expected_c1), dev.c1_diagonal, "casimir", true);
  line("casimir/C1 off-diagonal", dev.c1_off_diagonal, "casimir", true);
  line("casimir/C2", dev.c2, "casimir", true);
  {
    const Casimirs cd = casimirs(dual);
    const int dim = interior_dimension(cfg.l_max, 2);
    double worst = 0.0;
    for (int n = 0; n < dim; ++n) worst = std::max(worst, std::abs(c.c1(n, n) - cd.c1(n, n)));
    line("casimir/C1 Weyl pair", worst, "weyl", true);
  }

  const int s_lmax = std::max(cfg.smatrix_l_max, cfg.l_max);
  const PartialWaveSMatrix closed = sl_closed_form_sequence(tau, s_lmax);
  const PartialWaveSMatrix recurrence = sl_recurrence(tau, s_lmax);
  line("smatrix/unitarity closed form", unitarity_deviation(closed), "unitarity", true);
  line("smatrix/unitarity recurrence", unitarity_deviation(recurrence), "unitarity", true);
  line("smatrix/recurrence vs closed form", max_difference(recurrence, closed), "recurrence", true);

  const ResidualReport intertwining = verify_intertwining(rep, dual, closed);
  for (const auto& e : intertwining.entries()) {
    line("intertwining/" + e.name, e.value, "intertwining", e.gated);
  }

  outcome.passed = failed == 0;
  os << "# " << checks << " checks, " << failed << " failed: " << (outcome.passed ? "PASS" : "FAIL")
     << '\n';
  outcome.report = os.str();

  if (!cfg.dump.empty()) {
    std::ofstream dump(cfg.dump);
    if (!dump) throw ConfigError("cannot write matrix dump '" + cfg.dump + "'");
    write_matrix_dump(dump, rep);
  }
  return outcome;
}

// ---------------------------------------------------------------------------
// sweep

inline std::string sweep_record(const RunConfig& base, int index, double value) {
  RunConfig cfg = base;
  if (cfg.axis == "k") {
    cfg.k = value;
    cfg.s.reset();
  } else if (cfg.axis == "alpha") {
    cfg.alpha = value;
  } else {
    cfg.tau = value;
  }
  const double k = resolve_k(cfg);
  const double tau = resolve_tau(cfg, k);
  const Table table = cfg.mode == "xsec" ? xsec_table(*cfg.alpha, *cfg.mass, k, cfg.theta_deg)
                                         : amplitude_table(tau, k, cfg.theta_deg, cfg.partial_wave);
  std::ostringstream os;
  os << "{\"index\":" << index << ",\"axis\":\"" << cfg.axis << "\",\"value\":" << json_number(value)
     << ",\"mode\":\"" << cfg.mode << "\",\"k\":" << json_number(k) << ",\"tau\":" << json_number(tau);
  if (cfg.alpha) os << ",\"alpha\":" << json_number(*cfg.alpha);
  if (cfg.mass) os << ",\"mass\":" << json_number(*cfg.mass);
  os << ",\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (r) os << ',';
    os << json_row(table, table.rows[r]);
  }
  os << "]}";
  return os.str();
}

inline void validate_sweep(const RunConfig& cfg) {
  if (cfg.axis != "k" && cfg.axis != "alpha" && cfg.axis != "tau") {
    throw ConfigError("invalid sweep axis '" + cfg.axis + "' (expected k, alpha or tau)");
  }
  if (cfg.mode != "amplitude" && cfg.mode != "xsec") {
    throw ConfigError("invalid sweep mode '" + cfg.mode + "' (expected amplitude or xsec)");
  }
  if (cfg.format != OutputFormat::JsonLines) throw ConfigError("sweep writes json-lines only");
  if (cfg.sweep.count < 1) throw ConfigError("sweep needs --range MIN:MAX:COUNT");

  if (cfg.axis == "k") {
    if (cfg.k || cfg.s) throw ConfigError("--axis k conflicts with --k / --s");
    if (!(cfg.sweep.min > 0.0)) throw ConfigError("k sweep must stay positive");
  }
  if (cfg.axis == "alpha") {
    if (cfg.tau || cfg.alpha) throw ConfigError("--axis alpha conflicts with --tau / --alpha");
    if (!cfg.mass) throw ConfigError("--axis alpha needs --mass");
    require_positive(cfg.mass, "mass");
  }
  if (cfg.axis == "tau") {
    if (cfg.tau || cfg.alpha) throw ConfigError("--axis tau conflicts with --tau / --alpha");
    if (cfg.mode == "xsec") throw ConfigError("--axis tau needs --mode amplitude");
  }
  if (cfg.axis != "alpha" && cfg.axis != "tau") validate_interaction(cfg);
  if (cfg.mode == "xsec" && !(cfg.alpha || cfg.axis == "alpha")) {
    throw ConfigError("--mode xsec needs --alpha and --mass");
  }
  if (cfg.axis != "k") resolve_k(cfg);
  validate_theta(cfg, cfg.mode == "xsec" || cfg.partial_wave);
}

/// One json-lines record per sweep point, ordered by index whatever the completion order.
inline std::vector<std::string> run_sweep(const RunConfig& cfg) {
  validate_sweep(cfg);
  const std::vector<double> values = cfg.sweep.values();
  std::vector<std::string> lines(values.size());
  std::vector<std::exception_ptr> errors(values.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t n = next++; n < values.size(); n = next++) {
      try {
        lines[n] = sweep_record(cfg, static_cast<int>(n), values[n]);
      } catch (...) {
        errors[n] = std::current_exception();
      }
    }
  };
  unsigned jobs = cfg.jobs > 0 ? static_cast<unsigned>(cfg.jobs) : std::thread::hardware_concurrency();
  jobs = std::clamp<unsigned>(jobs, 1u, static_cast<unsigned>(values.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return lines;
}

}  // namespace scatter::cli
