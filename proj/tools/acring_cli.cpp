// acring: command-line front end for the ring-condensate library.
//
// Exit status: 0 success, 2 usage error, 3 invalid input or unwritable
// output, 4 imaginary-time solver did not converge. Failures print exactly one
// line "error: <usage|validation|convergence>: <message>" to stderr.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "acring/acring.hpp"

namespace {

using acring::io::Cell;
using acring::io::Parameters;

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitConvergence = 4;

struct OutputOptions {
  std::string path = "-";
  std::string format = "csv";
};

struct Emitted {
  std::string command;
  Parameters parameters;
  acring::io::Table table;
  bool failed_convergence = false;
  std::string failure_message;
};

// Inputs go to the JSON "parameters" block; the single CSV/JSON row carries
// inputs followed by results.
Emitted finish(std::string command, Parameters inputs, const Parameters& outputs) {
  Emitted e;
  e.command = std::move(command);
  Parameters row = inputs;
  row.insert(row.end(), outputs.begin(), outputs.end());
  e.table = acring::io::record_table(row);
  e.parameters = std::move(inputs);
  return e;
}

// Output path resolution: "-" is stdout; a relative path is placed under
// $ACRING_OUTPUT_DIR when that variable is set.
std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("ACRING_OUTPUT_DIR"); dir && *dir) return std::filesystem::path(dir) / p;
  }
  return p;
}

void write(const Emitted& e, const OutputOptions& out) {
  std::ostringstream buf;
  if (out.format == "json")
    acring::io::write_json(buf, e.command, e.parameters, e.table);
  else
    acring::io::write_csv(buf, e.table);
  if (out.path == "-" || out.path.empty()) {
    std::cout << buf.str();
    std::cout.flush();
    return;
  }
  const auto path = resolve_output(out.path);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw acring::invalid_input("cannot open output file " + path.string());
  file << buf.str();
  if (!file) throw acring::invalid_input("failed writing output file " + path.string());
}

/// Interaction strength, given either directly or as u~0 / 2 pi.
struct Interaction {
  std::optional<double> u_tilde;
  std::optional<double> u_tilde_over_2pi;

  void add_to(CLI::App* cmd) {
    auto* a = cmd->add_option("--u-tilde", u_tilde,
                              "interaction strength u~0 = 2 N a_sc / (s_rho s_z), dimensionless "
                              "(energy unit hbar^2 / 2 M rho0^2)");
    auto* b = cmd->add_option("--u-tilde-over-2pi", u_tilde_over_2pi,
                              "u~0 / 2 pi, the uniform-state interaction energy, dimensionless");
    a->excludes(b);
  }

  double value() const {
    if (u_tilde) return *u_tilde;
    if (u_tilde_over_2pi) return *u_tilde_over_2pi * 2.0 * std::numbers::pi;
    throw acring::invalid_input("one of --u-tilde or --u-tilde-over-2pi is required");
  }
};

struct SolverFlags {
  std::size_t grid = 256;
  double dt = 1e-3;
  double tolerance = 1e-10;
  long max_iter = 200000;
  double noise = 0.0;
  std::uint64_t rng_seed = acring::solver::SolverSettings{}.rng_seed;

  void add_to(CLI::App* cmd, double default_noise) {
    noise = default_noise;
    cmd->add_option("--grid", grid, "azimuthal grid points G, power of two >= 64")->capture_default_str();
    cmd->add_option("--dt", dt, "imaginary-time step, dimensionless")->capture_default_str();
    cmd->add_option("--tolerance", tolerance, "convergence threshold on |d mu| / max(|mu|, 1) per step")
        ->capture_default_str();
    cmd->add_option("--max-iter", max_iter, "maximum number of imaginary-time steps")->capture_default_str();
    cmd->add_option("--noise", noise, "relative amplitude of seeded noise, dimensionless")->capture_default_str();
    cmd->add_option("--rng-seed", rng_seed, "seed of the noise generator (mt19937_64)")->capture_default_str();
  }

  acring::solver::SolverSettings settings() const {
    acring::solver::SolverSettings s;
    s.grid_size = grid;
    s.tau_step = dt;
    s.tolerance = tolerance;
    s.max_iterations = max_iter;
    s.noise_amplitude = noise;
    s.rng_seed = rng_seed;
    s.validate();
    return s;
  }

  void echo(Parameters& p) const {
    p.emplace_back("grid", static_cast<long>(grid));
    p.emplace_back("dt", dt);
    p.emplace_back("tolerance", tolerance);
    p.emplace_back("max_iter", max_iter);
    p.emplace_back("noise", noise);
    p.emplace_back("rng_seed", std::to_string(rng_seed));
  }
};

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
  std::string geometry;
  std::optional<double> n_e;
  std::optional<double> charges;
  double g_f = 1.0;
  double distance = 1e-3;
  double radius = 1e-3;
  double polarizability = 0.0;
  double charges_per_bohr = 0.0;
  double b_field = 0.0;
};

Emitted run_estimate(const EstimateArgs& a) {
  namespace u = acring::units;
  Parameters in{{"geometry", a.geometry}};
  Parameters r;
  if (a.geometry == "line") {
    if (!a.n_e) throw acring::invalid_input("--n-e is required for the line geometry");
    const u::LineChargeSetup s{*a.n_e, a.g_f, a.distance};
    const double field = u::field_line_charge(s);
    in.emplace_back("n_e_per_m", *a.n_e);
    in.emplace_back("g_f", a.g_f);
    in.emplace_back("distance_m", a.distance);
    r.emplace_back("eta", u::eta_line_charge(s));
    r.emplace_back("charges_per_compton_length", u::charges_per_compton_length(*a.n_e));
    r.emplace_back("n_e_for_unit_eta_per_m", u::required_line_density(1.0, a.g_f));
    r.emplace_back("field_au", field);
    r.emplace_back("field_V_per_cm", u::au_field_to_volts_per_cm(field));
    r.emplace_back("field_au_at_unit_eta", u::field_line_charge_unit_eta(a.g_f, a.distance));
  } else if (a.geometry == "torus") {
    const double threshold = u::required_sphere_charge(1.0, a.g_f, a.radius);
    const double charges = a.charges.value_or(threshold);
    const u::TorusChargeSetup s{charges, a.radius, a.g_f};
    const double field = u::field_torus(s);
    in.emplace_back("sphere_charges", charges);
    in.emplace_back("g_f", a.g_f);
    in.emplace_back("radius_m", a.radius);
    r.emplace_back("eta", u::eta_torus(s));
    r.emplace_back("sphere_charges_for_unit_eta", threshold);
    r.emplace_back("field_au", field);
    r.emplace_back("field_V_per_cm", u::au_field_to_volts_per_cm(field));
  } else if (a.geometry == "cross") {
    const u::CrossedFieldSetup s{a.polarizability, a.charges_per_bohr, a.b_field};
    in.emplace_back("polarizability_a0_cubed", a.polarizability);
    in.emplace_back("charges_per_bohr", a.charges_per_bohr);
    in.emplace_back("b_field_gauss", a.b_field);
    r.emplace_back("eta_cross", u::eta_cross_field(s));
    r.emplace_back("zeeman_ratio_per_gauss", u::PhysicalConstants::zeeman_ratio_per_gauss);
  } else {
    throw acring::invalid_input("unknown geometry '" + a.geometry + "'");
  }
  return finish("estimate", std::move(in), r);
}

// ------------------------------------------------------------------ reduce

struct ReduceArgs {
  double atoms = 0.0;
  double scattering_length = 0.0;
  std::optional<double> mass;
  std::optional<double> mass_amu;
  double radius = 0.0;
  double sigma_rho = 0.0;
  double sigma_z = 0.0;
  double potential_mean = 0.0;
  double eta = 0.0;
};

Emitted run_reduce(const ReduceArgs& a) {
  acring::TrapSetup trap;
  trap.atom_count = a.atoms;
  trap.scattering_length = a.scattering_length;
  if (a.mass)
    trap.atom_mass = *a.mass;
  else if (a.mass_amu)
    trap.atom_mass = *a.mass_amu * acring::units::PhysicalConstants::atomic_mass_unit;
  else
    throw acring::invalid_input("one of --mass or --mass-amu is required");
  trap.torus_radius = a.radius;
  trap.width_rho = a.sigma_rho;
  trap.width_z = a.sigma_z;
  trap.potential_mean = a.potential_mean;

  const auto params = acring::reduction::build_ring_params(trap, a.eta);
  const auto ground = acring::ring::ground_winding(params);
  Parameters in{{"atoms", a.atoms},
                {"scattering_length_m", a.scattering_length},
                {"mass_kg", trap.atom_mass},
                {"radius_m", a.radius},
                {"sigma_rho_m", a.sigma_rho},
                {"sigma_z_m", a.sigma_z},
                {"potential_mean_J", a.potential_mean},
                {"eta", a.eta}};
  Parameters r;
  r.emplace_back("energy_unit_J", acring::reduction::energy_unit(trap));
  r.emplace_back("u_tilde", params.u_tilde);
  r.emplace_back("u_tilde_over_2pi", params.interaction_per_length());
  r.emplace_back("transverse_kinetic_offset", acring::reduction::transverse_kinetic_offset(trap));
  r.emplace_back("dropped_radial_term", acring::reduction::dropped_radial_term(trap));
  r.emplace_back("mu_offset", params.mu_offset);
  r.emplace_back("winding", static_cast<long>(ground.winding));
  r.emplace_back("mu_eff", ground.mu_eff);
  r.emplace_back("mu_eff_absolute", ground.mu_eff + params.mu_offset);
  return finish("reduce", std::move(in), r);
}

// ------------------------------------------------------------------ ground

Emitted run_ground(double eta, const Interaction& inter) {
  const acring::RingParams params{eta, inter.value(), 0.0};
  const auto g = acring::ring::ground_winding(params);
  Parameters r;
  r.emplace_back("winding", static_cast<long>(g.winding));
  r.emplace_back("degenerate", g.degenerate);
  r.emplace_back("mu_eff", g.mu_eff);
  std::optional<acring::ring::Barrier> up, down;
  if (params.u_tilde > 0.0) {
    up = acring::ring::barrier(g.winding, params);
    down = acring::ring::barrier(g.winding - 1, params);
  }
  r.emplace_back("barrier_height_up", up ? Cell{up->height_from_m} : Cell{});
  r.emplace_back("barrier_height_down", down ? Cell{down->height_from_m_plus_1} : Cell{});
  return finish("ground", {{"eta", eta}, {"u_tilde", params.u_tilde}}, r);
}

// ------------------------------------------------------------------- solve

struct SolveArgs {
  double eta = 0.0;
  int seed_winding = 0;
  bool global = false;
  std::string dump;
};

Emitted run_solve(const SolveArgs& a, const Interaction& inter, const SolverFlags& flags) {
  const acring::RingParams params{a.eta, inter.value(), 0.0};
  auto settings = flags.settings();
  settings.seed_winding = a.seed_winding;
  const auto report =
      a.global ? acring::solver::global_ground(params, settings) : acring::solver::relax(params, settings);
  if (!a.dump.empty()) {
    const auto path = resolve_output(a.dump);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw acring::invalid_input("cannot open dump file " + path.string());
    acring::solver::write_wavefunction(file, report.wavefunction);
  }
  const auto analytic = acring::ring::ground_winding(params);
  Parameters in{{"eta", a.eta},
                {"u_tilde", params.u_tilde},
                {"search", std::string(a.global ? "global" : "seeded")},
                {"seed_winding", static_cast<long>(a.seed_winding)}};
  Parameters r;
  r.emplace_back("winding", static_cast<long>(report.winding));
  r.emplace_back("mu", report.mu);
  r.emplace_back("energy_per_particle", report.energy_per_particle);
  r.emplace_back("mu_uniform_same_winding", acring::ring::mu_uniform(report.winding, params));
  r.emplace_back("analytic_ground_winding", static_cast<long>(analytic.winding));
  r.emplace_back("iterations", report.iterations);
  r.emplace_back("converged", report.converged);
  Emitted e = finish("solve", std::move(in), r);
  flags.echo(e.parameters);
  if (!report.converged) {
    e.failed_convergence = true;
    e.failure_message = "solver did not converge within " + std::to_string(report.iterations) + " steps";
  }
  return e;
}

// --------------------------------------------------------------- staircase

Emitted run_staircase(const std::string& eta_range, const Interaction& inter, double weight,
                      const std::string& mode, const SolverFlags& flags) {
  const auto range = acring::io::parse_range_spec(eta_range);
  acring::sweeps::StaircaseSpec spec;
  spec.eta_start = range.start;
  spec.eta_stop = range.stop;
  spec.eta_step = range.step;
  spec.u_tilde = inter.value();
  spec.condensate_weight = weight;
  if (mode == "analytic")
    spec.mode = acring::sweeps::StaircaseMode::analytic;
  else if (mode == "numeric")
    spec.mode = acring::sweeps::StaircaseMode::numeric;
  else
    throw acring::invalid_input("mode must be analytic or numeric");
  if (spec.mode == acring::sweeps::StaircaseMode::numeric) spec.solver = flags.settings();

  const auto records = acring::sweeps::staircase(spec);
  Emitted e;
  e.command = "staircase";
  e.parameters = {{"eta_start", range.start}, {"eta_stop", range.stop}, {"eta_step", range.step},
                  {"u_tilde", spec.u_tilde},  {"weight", weight},       {"mode", mode}};
  if (spec.mode == acring::sweeps::StaircaseMode::numeric) flags.echo(e.parameters);
  e.table = acring::io::staircase_table(records);
  std::string failed;
  for (const auto& rec : records) {
    if (!rec.converged) failed += (failed.empty() ? "" : " ") + acring::io::format_double(rec.eta);
  }
  if (!failed.empty()) {
    e.failed_convergence = true;
    e.failure_message = "solver did not converge at eta = " + failed;
  }
  return e;
}

// --------------------------------------------------------------- landscape

Emitted run_landscape(int m, const std::string& etas, const Interaction& inter, double x_step) {
  const auto eta_values = acring::io::parse_range(etas);
  const double u = inter.value();
  const auto curves = acring::sweeps::landscape(m, eta_values, u, x_step);
  Emitted e;
  e.command = "landscape";
  e.parameters = {{"m", static_cast<long>(m)}, {"eta", etas}, {"u_tilde", u}, {"x_step", x_step}};
  e.table = acring::io::landscape_table(curves);
  return e;
}

// -------------------------------------------------------------- hysteresis

Emitted run_hysteresis(const std::string& etas, bool round_trip, const Interaction& inter, int start_winding) {
  auto path = acring::io::parse_range(etas);
  if (round_trip) path = acring::sweeps::round_trip(path);
  const double u = inter.value();
  const auto records = acring::sweeps::hysteresis(path, u, start_winding);
  Emitted e;
  e.command = "hysteresis";
  e.parameters = {{"eta", etas},
                  {"round_trip", round_trip},
                  {"u_tilde", u},
                  {"start_winding", static_cast<long>(start_winding)}};
  e.table = acring::io::hysteresis_table(records);
  return e;
}

// ----------------------------------------------------------- config files

// Inserts "--key=value" for every entry of the --config file right after the
// subcommand name, so that flags typed on the command line (which come later
// and win under TakeLast) override the file.
std::vector<std::string> expand_config(std::vector<std::string> args, const std::vector<std::string>& commands) {
  std::optional<std::string> config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (!config_path) return args;
  std::ifstream in(*config_path);
  if (!in) throw acring::invalid_input("cannot read config file " + *config_path);
  const auto entries = acring::io::parse_key_values(in);
  auto pos = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
    return std::find(commands.begin(), commands.end(), a) != commands.end();
  });
  if (pos == args.end()) throw CLI::CallForHelp();
  ++pos;
  std::vector<std::string> injected;
  for (const auto& [key, value] : entries) injected.push_back("--" + key + "=" + value);
  args.insert(pos, injected.begin(), injected.end());
  return args;
}

void print_error(const std::string& kind, const std::string& message) {
  std::string line = message;
  std::replace(line.begin(), line.end(), '\n', ' ');
  std::cerr << "error: " << kind << ": " << line << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantized circulating states of a ring-trapped condensate with an Aharonov-Casher phase", "acring"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.fallthrough();

  OutputOptions out;
  app.add_option("-o,--output", out.path,
                 "output file, '-' for stdout; relative paths go under $ACRING_OUTPUT_DIR when set")
      ->capture_default_str();
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  std::string config_help;
  app.add_option("--config", config_help, "plain-text key=value file of subcommand flags; command-line flags win");

  // estimate
  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "AC phase, required charge and field strength for a setup");
  estimate->add_option("--geometry", est.geometry, "charge geometry: line, torus or cross")
      ->required()
      ->check(CLI::IsMember({"line", "torus", "cross"}));
  estimate->add_option("--n-e", est.n_e, "line: linear charge density, elementary charges per meter");
  estimate->add_option("--g-f", est.g_f, "Lande g_F factor, dimensionless, nonzero")->capture_default_str();
  estimate->add_option("--distance", est.distance, "line: distance from the wire, meters")->capture_default_str();
  estimate->add_option("--charges", est.charges,
                       "torus: elementary charges on the central sphere (default: the |eta| = 1 threshold)");
  estimate->add_option("--radius", est.radius, "torus: torus radius rho0, meters")->capture_default_str();
  estimate->add_option("--polarizability", est.polarizability, "cross: static polarizability, units of a0^3")
      ->capture_default_str();
  estimate->add_option("--charges-per-bohr", est.charges_per_bohr,
                       "cross: linear charge density, elementary charges per Bohr radius")
      ->capture_default_str();
  estimate->add_option("--b-field", est.b_field, "cross: axial magnetic field, gauss")->capture_default_str();

  // reduce
  ReduceArgs red;
  auto* reduce = app.add_subcommand("reduce", "dimensionless ring parameters from a 3D toroidal trap");
  reduce->add_option("--atoms", red.atoms, "number of condensed atoms N")->required();
  reduce->add_option("--scattering-length", red.scattering_length, "s-wave scattering length, meters")->required();
  auto* mass = reduce->add_option("--mass", red.mass, "atomic mass, kilograms");
  auto* mass_amu = reduce->add_option("--mass-amu", red.mass_amu, "atomic mass, atomic mass units");
  mass->excludes(mass_amu);
  reduce->add_option("--radius", red.radius, "torus radius rho0, meters")->required();
  reduce->add_option("--sigma-rho", red.sigma_rho, "radial width (std. dev. of density), meters")->required();
  reduce->add_option("--sigma-z", red.sigma_z, "axial width (std. dev. of density), meters")->required();
  reduce->add_option("--potential-mean", red.potential_mean, "trap potential averaged over the profile, joules")
      ->capture_default_str();
  reduce->add_option("--eta", red.eta, "AC phase eta, dimensionless")->capture_default_str();

  // ground
  double ground_eta = 0.0;
  Interaction ground_inter;
  auto* ground = app.add_subcommand("ground", "analytic ground-state winding m = [eta] and its barriers");
  ground->add_option("--eta", ground_eta, "AC phase eta, dimensionless")->required();
  ground_inter.add_to(ground);

  // solve
  SolveArgs sol;
  Interaction solve_inter;
  SolverFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "imaginary-time ground state on the azimuthal grid");
  solve->add_option("--eta", sol.eta, "AC phase eta, dimensionless")->required();
  solve_inter.add_to(solve);
  solve->add_option("--seed-winding", sol.seed_winding, "winding of the initial plane wave")->capture_default_str();
  solve->add_flag("--global", sol.global, "search seeds [eta]-2 .. [eta]+2 and keep the lowest energy");
  solve->add_option("--dump", sol.dump, "write the final wavefunction as 'phi re im' rows to this file");
  solve_flags.add_to(solve, 0.0);

  // staircase
  std::string stair_eta;
  Interaction stair_inter;
  double stair_weight = 1.0;
  std::string stair_mode = "analytic";
  SolverFlags stair_flags;
  auto* stair = app.add_subcommand("staircase", "ground-state winding versus eta with classical and thermal lines");
  stair->add_option("--eta", stair_eta, "eta range start:stop:step, dimensionless")->required();
  stair_inter.add_to(stair);
  stair->add_option("--weight", stair_weight, "condensate weight w in [0, 1]")->capture_default_str();
  stair->add_option("--mode", stair_mode, "analytic or numeric")->capture_default_str();
  stair_flags.add_to(stair, acring::solver::SolverSettings::global_search().noise_amplitude);

  // landscape
  int land_m = 0;
  std::string land_eta;
  Interaction land_inter;
  double land_step = 0.01;
  auto* land = app.add_subcommand("landscape", "two-mode chemical potential over the mixing x for each eta");
  land->add_option("--m", land_m, "lower winding of the m -> m+1 path")->capture_default_str();
  land->add_option("--eta", land_eta, "eta values: numbers and/or start:stop:step ranges, comma separated")
      ->required();
  land_inter.add_to(land);
  land->add_option("--x-step", land_step, "maximum spacing of the x grid, in (0, 1]")->capture_default_str();

  // hysteresis
  std::string hyst_eta;
  bool hyst_round_trip = false;
  Interaction hyst_inter;
  int hyst_start = 0;
  auto* hyst = app.add_subcommand("hysteresis", "quasi-static winding along an eta path with barrier switching");
  hyst->add_option("--eta", hyst_eta, "eta path: numbers and/or start:stop:step ranges, comma separated")
      ->required();
  hyst->add_flag("--round-trip", hyst_round_trip, "append the reversed path (up then down)");
  hyst_inter.add_to(hyst);
  hyst->add_option("--start-winding", hyst_start, "winding at the first path point")->capture_default_str();

  const std::vector<std::string> commands{"estimate", "ground",    "hysteresis", "landscape",
                                          "reduce",   "solve",     "staircase"};
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(std::move(args), commands);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return kExitUsage;
  } catch (const acring::invalid_input& e) {
    print_error("validation", e.what());
    return kExitValidation;
  }

  try {
    Emitted result;
    if (*estimate) result = run_estimate(est);
    else if (*reduce) result = run_reduce(red);
    else if (*ground) result = run_ground(ground_eta, ground_inter);
    else if (*solve) result = run_solve(sol, solve_inter, solve_flags);
    else if (*stair) result = run_staircase(stair_eta, stair_inter, stair_weight, stair_mode, stair_flags);
    else if (*land) result = run_landscape(land_m, land_eta, land_inter, land_step);
    else result = run_hysteresis(hyst_eta, hyst_round_trip, hyst_inter, hyst_start);

    write(result, out);
    if (result.failed_convergence) {
      print_error("convergence", result.failure_message);
      return kExitConvergence;
    }
  } catch (const acring::invalid_input& e) {
    print_error("validation", e.what());
    return kExitValidation;
  } catch (const acring::node_error& e) {
    print_error("convergence", e.what());
    return kExitConvergence;
  } catch (const acring::convergence_error& e) {
    print_error("convergence", e.what());
    return kExitConvergence;
  }
  return 0;
}
