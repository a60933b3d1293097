#include "optomech/cli/commands.hpp"

#include "optomech/bistability.hpp"
#include "optomech/errors.hpp"
#include "optomech/mean_field.hpp"
#include "optomech/quantum.hpp"
#include "optomech/response.hpp"
#include "optomech/static_potential.hpp"
#include "optomech/steady_state.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace optomech::cli {

namespace {

double flag(bool b) { return b ? 1.0 : 0.0; }

// 1 stable, 0 unstable, 2 marginal, -1 absent.
double verdict_code(Stability s) {
  switch (s) {
  case Stability::stable: return 1.0;
  case Stability::unstable: return 0.0;
  case Stability::marginal: return 2.0;
  }
  return -1.0;
}

double branch_code(Branch b) { return static_cast<double>(static_cast<int>(b)); }

double interaction_code(InteractionKind k) { return static_cast<double>(static_cast<int>(k)); }

template <typename Fn>
void annotate(const std::string& cell, Fn&& fn) {
  try {
    fn();
  } catch (const NumericalError& e) {
    throw NumericalError(cell + ": " + e.what());
  }
}

std::string cell_label(const char* grid, std::size_t index, double value) {
  return std::string(grid) + "[" + std::to_string(index) + "]=" + format_number(value);
}

/// Enhanced coupling taken from the options or, failing that, from the
/// lowest classical fixed point of the configured parameters.
double coupling_option(const RunSpec& spec) {
  if (spec.has_option("g_s")) return spec.options.at("g_s");
  const auto states = steady_states(spec.params);
  return spec.params.g0 * std::abs(states.front().alpha_s);
}

std::vector<ResultTable> run_steady(const RunSpec& spec) {
  const SystemParams& p = spec.params;
  ResultTable t("steady", {"root_index", "branch", "N_o", "alpha_re", "alpha_im", "beta_re", "beta_im",
                           "Delta_eff", "g_s", "stable", "a_out_re", "a_out_im", "gamma_om",
                           "delta_omega_m"});
  const auto states = steady_states(p);
  const auto labels = branch_labels(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    const double g_s = p.g0 * std::abs(s.alpha_s);
    const auto out = mean_output_field(s.alpha_s, p.kappa);
    t.add_row({static_cast<double>(i), branch_code(labels[i]), s.N_o, s.alpha_s.real(),
               s.alpha_s.imag(), s.beta_s.real(), s.beta_s.imag(), s.Delta_eff, g_s,
               verdict_code(s.verdict), out.real(), out.imag(),
               optomechanical_damping(s.Delta_eff, p.kappa, g_s, p.omega_m),
               optical_spring_shift(s.Delta_eff, p.kappa, g_s, p.omega_m)});
  }
  return {t};
}

std::vector<ResultTable> run_bistability(const RunSpec& spec) {
  const auto grid = spec.grid("Delta0").values();
  BistabilityBranch sweep;
  annotate("Delta0 sweep", [&] { sweep = sweep_bistability(spec.params, grid); });
  ResultTable t("bistability", {"Delta0", "root_count", "root_index", "branch", "N_o", "Delta_eff", "stable"});
  const double C = collapse_constant(spec.params);
  for (const auto& pt : sweep.points) {
    for (std::size_t i = 0; i < pt.roots.size(); ++i) {
      t.add_row({pt.Delta0, static_cast<double>(pt.roots.size()), static_cast<double>(i),
                 branch_code(pt.labels[i]), pt.roots[i], pt.Delta0 + C * pt.roots[i],
                 verdict_code(pt.stability[i])});
    }
  }
  ResultTable edges("bistability_edges", {"Delta0_edge"});
  for (double e : sweep.window_edges) edges.add_row({e});
  return {t, edges};
}

std::vector<ResultTable> run_hysteresis(const RunSpec& spec) {
  const auto grid = spec.grid("Delta0").values();
  std::vector<double> up;
  std::vector<double> down;
  annotate("Delta0 up-sweep", [&] { up = hysteresis_sweep(spec.params, grid, SweepDirection::up); });
  annotate("Delta0 down-sweep", [&] { down = hysteresis_sweep(spec.params, grid, SweepDirection::down); });
  ResultTable t("hysteresis", {"Delta0", "root_count", "N_up", "N_down"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SystemParams p = spec.params;
    p.Delta0 = grid[i];
    std::size_t count = 0;
    annotate(cell_label("Delta0", i, grid[i]),
             [&] { count = solve_intracavity_occupancy(intracavity_cubic(p)).size(); });
    t.add_row({grid[i], static_cast<double>(count), up[i], down[i]});
  }
  return {t};
}

std::vector<ResultTable> run_stability_map(const RunSpec& spec) {
  const auto detunings = spec.grid("Delta0").values();
  const auto amplitudes = spec.grid("A_l").values();
  ResultTable t("stability_map", {"Delta0", "A_l", "root_count", "occupied_N", "occupied_stable",
                                  "verdict_0", "verdict_1", "verdict_2"});
  for (std::size_t ia = 0; ia < amplitudes.size(); ++ia) {
    for (std::size_t id = 0; id < detunings.size(); ++id) {
      StabilityMap cell_map;
      annotate(cell_label("A_l", ia, amplitudes[ia]) + ", " + cell_label("Delta0", id, detunings[id]), [&] {
        cell_map = stability_map(spec.params, std::span(&detunings[id], 1), std::span(&amplitudes[ia], 1));
      });
      const StabilityCell& c = cell_map.cells.front();
      std::vector<double> row = {c.Delta0, c.A_l, static_cast<double>(c.roots.size()),
                                 c.roots[c.occupied], flag(c.occupied_stable())};
      for (std::size_t k = 0; k < 3; ++k) {
        row.push_back(k < c.stability.size() ? verdict_code(c.stability[k]) : -1.0);
      }
      t.add_row(row);
    }
  }
  return {t};
}

std::vector<ResultTable> run_damping(const RunSpec& spec) {
  const SystemParams& p = spec.params;
  const double g_s = coupling_option(spec);
  ResultTable t("damping", {"Delta", "gamma_om", "total_damping", "self_oscillation"});
  for (double Delta : spec.grid("Delta").values()) {
    const double g_om = optomechanical_damping(Delta, p.kappa, g_s, p.omega_m);
    const auto flags = classify_regime(g_om, 0.0, p);
    t.add_row({Delta, g_om, flags.total_damping, flag(flags.self_oscillation)});
  }
  return {t};
}

std::vector<ResultTable> run_spring(const RunSpec& spec) {
  const SystemParams& p = spec.params;
  const double g_s = coupling_option(spec);
  ResultTable t("spring", {"Delta", "delta_omega_m", "parametric_instability"});
  for (double Delta : spec.grid("Delta").values()) {
    const double shift = optical_spring_shift(Delta, p.kappa, g_s, p.omega_m);
    t.add_row({Delta, shift, flag(classify_regime(0.0, shift, p).parametric_instability)});
  }
  return {t};
}

std::vector<ResultTable> run_regime(const RunSpec& spec) {
  const SystemParams& p = spec.params;
  const double g_s = coupling_option(spec);
  const double tol = spec.option("tol_res", p.kappa / 2.0);
  ResultTable t("regime", {"Delta", "interaction_kind", "resolved_sideband", "g_s"});
  for (double Delta : spec.grid("Delta").values()) {
    const auto r = rwa_interaction(Delta, p.omega_m, p.kappa, g_s, tol);
    t.add_row({Delta, interaction_code(r.interaction_kind), flag(r.resolved_sideband), r.g_s});
  }
  return {t};
}

std::vector<ResultTable> run_mean_field(const RunSpec& spec) {
  const std::complex<double> alpha0(spec.option("alpha0_re", 0.0), spec.option("alpha0_im", 0.0));
  const std::complex<double> beta0(spec.option("beta0_re", 0.0), spec.option("beta0_im", 0.0));
  const auto stride = static_cast<int>(spec.option("stride", 1.0));
  const auto series = integrate_mean_field(spec.params, alpha0, beta0, spec.options.at("t_end"),
                                           spec.options.at("dt"), stride);
  ResultTable t("mean_field", {"t", "alpha_re", "alpha_im", "beta_re", "beta_im", "N_o"});
  for (const auto& s : series) {
    t.add_row({s.t, s.alpha.real(), s.alpha.imag(), s.beta.real(), s.beta.imag(), std::norm(s.alpha)});
  }
  return {t};
}

const std::vector<std::string> kCovarianceColumns = {"V_XX", "V_XY", "V_XQ", "V_XP", "V_YY",
                                                     "V_YQ", "V_YP", "V_QQ", "V_QP", "V_PP"};

void append_upper_triangle(std::vector<double>& row, const Matrix4& V) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) row.push_back(V(i, j));
  }
}

std::vector<ResultTable> run_covariance(const RunSpec& spec) {
  const SystemParams& p = spec.params;
  DriftMatrix A;
  if (spec.has_option("Delta") || spec.has_option("g_s")) {
    if (!spec.has_option("Delta") || !spec.has_option("g_s")) {
      throw ConfigError("options Delta and g_s must be given together");
    }
    A = drift_matrix(FluctuationCoefficients{p.kappa, p.gamma, p.omega_m, spec.options.at("Delta"),
                                             spec.options.at("g_s")});
  } else {
    const auto states = steady_states(p);
    const double branch = spec.option("branch", 0.0);
    if (branch < 0.0 || branch != std::floor(branch) || branch >= static_cast<double>(states.size())) {
      throw ConfigError("options.branch must index one of the " + std::to_string(states.size()) +
                        " fixed points");
    }
    A = drift_matrix(p, states[static_cast<std::size_t>(branch)]);
  }
  const DiffusionMatrix D = diffusion_matrix(p);
  const auto stride = static_cast<int>(spec.option("stride", 1.0));

  CovarianceMatrix V_ss;
  annotate("steady covariance", [&] { V_ss = steady_covariance(A, D); });
  std::vector<CovarianceSample> series;
  annotate("covariance integration", [&] {
    series = integrate_covariance(A, D, CovarianceMatrix::vacuum_thermal(p.n_th),
                                  spec.options.at("t_end"), spec.options.at("dt"), stride);
  });

  std::vector<std::string> columns = {"t"};
  columns.insert(columns.end(), kCovarianceColumns.begin(), kCovarianceColumns.end());
  ResultTable t("covariance", columns);
  for (const auto& s : series) {
    std::vector<double> row = {s.t};
    append_upper_triangle(row, s.V);
    t.add_row(row);
  }

  columns = kCovarianceColumns;
  columns.insert(columns.end(), {"lyapunov_residual", "min_uncertainty_eigenvalue"});
  ResultTable steady("covariance_steady", columns);
  std::vector<double> row;
  append_upper_triangle(row, V_ss.entries);
  row.push_back(lyapunov_residual(A, V_ss, D));
  row.push_back(min_uncertainty_eigenvalue(V_ss.entries));
  steady.add_row(row);
  return {t, steady};
}

std::vector<ResultTable> run_static_potential(const RunSpec& spec) {
  const GridRange& range = spec.grid("x");
  const auto x = range.values();
  StaticPotentialModel model;
  try {
    model = StaticPotentialModel::make(spec.options.at("k_HO"), spec.options.at("F0"),
                                       spec.options.at("lambda"), spec.options.at("finesse"),
                                       spec.option("x_first", 0.0), range.start, range.stop);
  } catch (const ParameterError& e) {
    throw ConfigError(std::string("options: ") + e.what());
  }
  StaticPotentialProfile profile;
  try {
    profile = static_potential(model, x);
  } catch (const ParameterError& e) {
    throw ConfigError(std::string("options: ") + e.what());
  }
  ResultTable t("static_potential", {"x", "F_RP", "V_RP", "V_HO", "V_t"});
  for (std::size_t i = 0; i < x.size(); ++i) {
    t.add_row({profile.x[i], profile.F_RP[i], profile.V_RP[i], profile.V_HO[i], profile.V_t[i]});
  }
  ResultTable eq("static_equilibria", {"x_eq", "K_eff"});
  for (const auto& e : profile.equilibria) eq.add_row({e.x, e.K_eff});
  return {t, eq};
}

} // namespace

std::vector<ResultTable> run_command(const RunSpec& spec) {
  std::vector<ResultTable> tables;
  try {
    switch (spec.command) {
    case Command::steady: tables = run_steady(spec); break;
    case Command::bistability: tables = run_bistability(spec); break;
    case Command::hysteresis: tables = run_hysteresis(spec); break;
    case Command::stability_map: tables = run_stability_map(spec); break;
    case Command::damping: tables = run_damping(spec); break;
    case Command::spring: tables = run_spring(spec); break;
    case Command::mean_field: tables = run_mean_field(spec); break;
    case Command::covariance: tables = run_covariance(spec); break;
    case Command::static_potential: tables = run_static_potential(spec); break;
    case Command::regime: tables = run_regime(spec); break;
    }
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  const auto meta = to_json(spec);
  for (auto& t : tables) t.metadata = meta;
  return tables;
}

std::vector<std::filesystem::path> write_results(const std::vector<ResultTable>& tables,
                                                 const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const auto& t : tables) {
    const auto path = dir / (t.name() + ".csv");
    emit_csv(t, path);
    written.push_back(path);
  }
  return written;
}

} // namespace optomech::cli
