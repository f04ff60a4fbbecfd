// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include "cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "json_io.hpp"
#include "qic/channels.hpp"
#include "qic/clifford.hpp"
#include "qic/entropy.hpp"
#include "qic/errors.hpp"
#include "qic/linalg.hpp"
#include "qic/protocols.hpp"
#include "qic/random.hpp"
#include "qic/sigma_lattice.hpp"
#include "qic/states.hpp"
#include "qic/susyqm.hpp"

namespace qic::cli {

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

constexpr double kConstraintCheckTol = 1e-10;
constexpr double kFidelityCheckTol = 1e-12;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("QFT_INFOCALC_SEED");
  if (env == nullptr || *env == '\0') return 0;
  if (*env == '-') throw input_error("QFT_INFOCALC_SEED must be a non-negative integer");
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0')
    throw input_error("QFT_INFOCALC_SEED must be a non-negative integer");
  return v;
}

const char* method_name(EntropyMethod m) {
  return m == EntropyMethod::spectral_difference ? "spectral-difference"
                                                 : "conditional-operator";
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

// --- subcommand handlers ---

int entropy_cmd(const std::string& state_path, std::ostream& out, std::ostream& err) {
  const DensityMatrix rho = parse_state_density(load_json_file(state_path));
  const Spectrum spec = herm_eig(rho.matrix());
  const double bits = von_neumann_entropy(rho);
  json dims = json::array();
  for (std::size_t d : rho.dims()) dims.push_back(d);
  emit(out, json{{"dims", std::move(dims)},
                 {"entropy_bits", bits},
                 {"support_rank", support_rank(spec)}});
  err << "von Neumann entropy: " << num(bits) << " bits (support rank "
      << support_rank(spec) << ")\n";
  return kPass;
}

int conditional_cmd(const std::optional<std::string>& state_path, int condition_on,
                    std::ostream& out, std::ostream& err) {
  const DensityMatrix rho =
      state_path ? parse_state_density(load_json_file(*state_path)) : bell_state();
  const EntropyReport report =
      conditional_entropy(rho, static_cast<std::size_t>(condition_on));
  json doc{{"condition_on", condition_on},
           {"method", method_name(report.method)},
           {"support_rank", report.support_rank},
           {"value", report.value}};
  doc["operator_value"] =
      report.operator_value ? json(*report.operator_value) : json(nullptr);
  emit(out, doc);
  err << "conditional entropy: " << num(report.value) << " bits ("
      << method_name(report.method);
  if (report.operator_value)
    err << "; operator form " << num(*report.operator_value);
  err << ")\n";
  return kPass;
}

int ternary_cmd(const std::optional<std::string>& state_path, std::ostream& out,
                std::ostream& err) {
  const DensityMatrix rho =
      state_path ? parse_state_density(load_json_file(*state_path)) : ghz_state();
  if (rho.dims().size() != 3)
    throw input_error("ternary: state must have exactly 3 subsystems in 'dims'");
  const double ternary = ternary_mutual_entropy(rho, 0, 1, 2);
  const double cond_mutual = conditional_mutual_entropy(rho, 0, 1, 2);
  const ChainRuleReport chain = chain_rule_check(rho, 0, 1, 2);
  emit(out, json{{"chain_printed_form_residual", chain.printed_form_residual},
                 {"chain_telescoping_residual", chain.telescoping_residual},
                 {"conditional_mutual_bits", cond_mutual},
                 {"ternary_mutual_bits", ternary}});
  err << "ternary mutual entropy: " << num(ternary)
      << " bits; conditional mutual: " << num(cond_mutual)
      << " bits; chain residuals (telescoping/printed): "
      << num(chain.telescoping_residual) << " / " << num(chain.printed_form_residual)
      << "\n";
  return kPass;
}

int teleport_cmd(std::optional<std::uint64_t> seed_opt,
                 const std::optional<std::string>& state_path, std::ostream& out,
                 std::ostream& err) {
  const std::uint64_t seed = seed_opt ? *seed_opt : default_seed();
  Rng rng(seed);
  QubitState input;
  if (state_path) {
    input = parse_qubit(load_json_file(*state_path));
  } else {
    const CVector v = rng.random_state(2);
    input = QubitState(v[0], v[1]);
  }
  const TeleportBranch branch = teleport(input, rng);
  const bool ok = std::abs(branch.fidelity - 1.0) <= kFidelityCheckTol;
  emit(out, json{{"bell_outcome", branch.bell_label},
                 {"bits", {branch.bits.first, branch.bits.second}},
                 {"fidelity", branch.fidelity},
                 {"input", amplitudes_json(input.amplitudes())},
                 {"output", amplitudes_json(branch.output.amplitudes())},
                 {"pass", ok},
                 {"probability", branch.probability},
                 {"seed", seed}});
  err << "teleportation (seed " << seed << "): outcome " << branch.bell_label
      << ", classical bits " << branch.bits.first << branch.bits.second
      << ", fidelity " << num(branch.fidelity) << (ok ? "" : " [CHECK FAILED]") << "\n";
  return ok ? kPass : kCheckFailed;
}

int superdense_cmd(const std::string& bits_str, std::ostream& out, std::ostream& err) {
  if (bits_str.size() != 2 || (bits_str[0] != '0' && bits_str[0] != '1') ||
      (bits_str[1] != '0' && bits_str[1] != '1'))
    throw input_error("--bits must be two binary digits, e.g. 01");
  const std::pair<int, int> message{bits_str[0] - '0', bits_str[1] - '0'};
  const SuperdenseResult result = superdense(message);
  const bool ok = result.bits == message && std::abs(result.probability - 1.0) <= 1e-12;
  emit(out, json{{"bell_outcome", result.bell_label},
                 {"decoded", {result.bits.first, result.bits.second}},
                 {"message", {message.first, message.second}},
                 {"pass", ok},
                 {"probability", result.probability}});
  err << "dense coding: message " << message.first << message.second << " decoded as "
      << result.bits.first << result.bits.second << " (outcome " << result.bell_label
      << ", probability " << num(result.probability) << ")"
      << (ok ? "" : " [CHECK FAILED]") << "\n";
  return ok ? kPass : kCheckFailed;
}

int diagram_cmd(const std::optional<std::string>& file,
                const std::optional<std::string>& builtin, std::ostream& out,
                std::ostream& err) {
  if (file.has_value() == builtin.has_value())
    throw input_error("provide exactly one of --file or --builtin");
  const InfoDiagram d =
      builtin ? builtin_diagram(*builtin) : parse_diagram(load_json_file(*file));
  const ConservationReport report = check_conservation(d);
  json balances = json::array();
  for (const VertexBalance& b : report.balances)
    balances.push_back(json{{"inflow", b.inflow},
                            {"kind", vertex_kind_name(b.kind)},
                            {"outflow", b.outflow},
                            {"residual", b.residual},
                            {"vertex", b.vertex_id}});
  emit(out, json{{"balances", std::move(balances)},
                 {"max_residual", report.max_residual},
                 {"name", d.name},
                 {"pass", report.pass}});
  err << "diagram '" << d.name << "': max residual " << num(report.max_residual)
      << (report.pass ? " (balanced)" : " [CHECK FAILED]") << "\n";
  return report.pass ? kPass : kCheckFailed;
}

int susy_cmd(const std::string& potential, std::size_t n, std::size_t levels,
             double x_min, double x_max, double cubic_c, double pair_tol,
             std::optional<double> zero_tol, std::ostream& out, std::ostream& err) {
  const PotentialKind kind = potential_kind_from_name(potential);
  const SusyModel model =
      build_model(make_superpotential(kind, cubic_c), GridSpec{x_min, x_max, n});
  const SpectrumPairing pairing = pair_spectra(model, levels, zero_tol);

  out << "level,E0,E1,gap\n";
  for (double e : pairing.zero_modes0) out << "-1," << num(e) << ",,\n";
  for (double e : pairing.zero_modes1) out << "-1,," << num(e) << ",\n";
  for (const LevelPair& p : pairing.pairs)
    out << p.index << ',' << num(p.e0) << ',' << num(p.e1) << ',' << num(p.gap) << '\n';

  const bool ok = pairing.max_gap <= pair_tol;
  err << "susy " << potential << " (n " << n << "): " << pairing.pairs.size()
      << " level pairs, max gap " << num(pairing.max_gap) << ", zero modes ("
      << pairing.zero_modes0.size() << ", " << pairing.zero_modes1.size() << ")"
      << (ok ? "" : " [CHECK FAILED: gap above tolerance]") << "\n";
  return ok ? kPass : kCheckFailed;
}

int sigma_cmd(const std::string& preset, std::size_t steps, std::optional<double> dt_opt,
              std::size_t sites, double length, std::size_t k_mode, double amplitude,
              std::optional<std::uint64_t> seed_opt, std::ostream& out,
              std::ostream& err) {
  if (!(length > 0.0)) throw input_error("--length must be positive");
  if (sites == 0) throw input_error("--sites must be positive");
  const double dx = length / static_cast<double>(sites);
  const double dt = dt_opt ? *dt_opt : 0.1 * dx;

  LatticeField field = [&] {
    if (preset == "uniform") return uniform_field(sites, dx, dt);
    if (preset == "wave") return spin_wave_field(sites, dx, dt, k_mode, amplitude);
    if (preset == "random") {
      const std::uint64_t seed = seed_opt ? *seed_opt : default_seed();
      return random_tangent_field(sites, dx, dt, seed);
    }
    throw input_error("unknown preset '" + preset +
                      "' (expected uniform, wave, or random)");
  }();

  out << "step,time,energy,max_constraint_residual\n";
  double worst = max_constraint_residual(field);
  const double e_start = energy(field);
  out << "0,0," << num(e_start) << ',' << num(worst) << '\n';
  for (std::size_t i = 1; i <= steps; ++i) {
    field = step(field);
    const double residual = max_constraint_residual(field);
    worst = std::max(worst, residual);
    out << i << ',' << num(dt * static_cast<double>(i)) << ',' << num(energy(field))
        << ',' << num(residual) << '\n';
  }

  const bool ok = worst <= kConstraintCheckTol;
  err << "sigma " << preset << ": " << steps << " steps, energy " << num(e_start)
      << " -> " << num(energy(field)) << ", max constraint residual " << num(worst)
      << (ok ? "" : " [CHECK FAILED: constraint violated]") << "\n";
  return ok ? kPass : kCheckFailed;
}

int decohere_cmd(double t, double tau, const std::string& state_path, std::ostream& out,
                 std::ostream& err) {
  const DensityMatrix rho = parse_state_density(load_json_file(state_path));
  const DensityMatrix result = decohere(rho, DecoherenceParams{t, tau});
  json doc = density_json(result);
  doc["damping"] = std::exp(-t / tau);
  doc["t"] = t;
  doc["tau"] = tau;
  emit(out, doc);
  err << "decoherence: off-diagonals damped by " << num(std::exp(-t / tau))
      << " at t/tau = " << num(t / tau) << "\n";
  return kPass;
}

int bound_cmd(double area, std::ostream& out, std::ostream& err) {
  const double bits = holographic_bound_bits(area);
  emit(out, json{{"area_m2", area}, {"bits", bits}});
  err << "holographic bound: " << num(bits) << " bits for " << num(area) << " m^2\n";
  return kPass;
}

json algebra_json(const AlgebraReport& r) {
  return json{{"max_deviation", r.max_deviation}, {"pass", r.pass}};
}

json superalgebra_json(const SuperalgebraReport& r) {
  return json{{"anticommutator_vs_h", r.anticommutator_vs_h},
              {"intertwining", r.intertwining},
              {"pass", r.pass},
              {"q_squared_vs_h", r.q_squared_vs_h},
              {"qminus_squared", r.qminus_squared},
              {"qplus_squared", r.qplus_squared},
              {"s_h_commutator", r.s_h_commutator},
              {"s_q_anticommutator", r.s_q_anticommutator}};
}

int selfcheck_cmd(std::ostream& out, std::ostream& err) {
  const AlgebraReport clifford = check_clifford(make_gamma_rep());
  const AlgebraReport field_algebra =
      check_qubit_field_algebra(pauli(1), pauli(2), pauli(3));
  const SqrtNotReport sqrt_report = sqrt_not();

  const GridSpec grid{-8.0, 8.0, 64};
  json superalgebra;
  bool susy_pass = true;
  for (const PotentialKind kind :
       {PotentialKind::linear, PotentialKind::tanh, PotentialKind::cubic}) {
    const SuperalgebraReport report =
        check_superalgebra(build_model(make_superpotential(kind), grid));
    superalgebra[potential_kind_name(kind)] = superalgebra_json(report);
    susy_pass = susy_pass && report.pass;
  }

  const bool all = clifford.pass && field_algebra.pass && sqrt_report.pass && susy_pass;
  emit(out, json{{"clifford", algebra_json(clifford)},
                 {"pass", all},
                 {"qubit_field_algebra", algebra_json(field_algebra)},
                 {"sqrt_not", json{{"pass", sqrt_report.pass},
                                   {"square_deviation", sqrt_report.square_deviation},
                                   {"unitarity_deviation", sqrt_report.unitarity_deviation}}},
                 {"superalgebra", std::move(superalgebra)}});
  err << "selfcheck: " << (all ? "PASS" : "FAIL") << " (clifford "
      << num(clifford.max_deviation) << ", qubit-field "
      << num(field_algebra.max_deviation) << ", sqrt-NOT "
      << num(std::max(sqrt_report.unitarity_deviation, sqrt_report.square_deviation))
      << ", superalgebra " << (susy_pass ? "exact" : "FAILED") << ")\n";
  return all ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qubit information calculus, SUSY quantum mechanics, and O(3) "
               "sigma-model lattice toolkit"};
  app.name("qft-infocalc");
  app.require_subcommand(1);

  // entropy
  auto* entropy_sc = app.add_subcommand("entropy", "von Neumann entropy of a state file");
  std::string entropy_state;
  entropy_sc->add_option("--state", entropy_state, "state JSON file")->required();

  // conditional
  auto* conditional_sc = app.add_subcommand(
      "conditional", "bipartite conditional entropy (built-in Bell state by default)");
  std::optional<std::string> conditional_state;
  int condition_on = 1;
  conditional_sc->add_option("--state", conditional_state, "state JSON file");
  conditional_sc->add_option("--condition-on", condition_on, "conditioning subsystem")
      ->check(CLI::IsMember({0, 1}));

  // ternary
  auto* ternary_sc = app.add_subcommand(
      "ternary", "tripartite entropy suite (built-in GHZ state by default)");
  std::optional<std::string> ternary_state;
  ternary_sc->add_option("--state", ternary_state, "state JSON file");

  // teleport
  auto* teleport_sc = app.add_subcommand("teleport", "simulate one teleportation run");
  std::optional<std::uint64_t> teleport_seed;
  std::optional<std::string> teleport_state;
  teleport_sc->add_option("--seed", teleport_seed,
                          "RNG seed (default: QFT_INFOCALC_SEED or 0)");
  teleport_sc->add_option("--state", teleport_state,
                          "input qubit JSON file (default: seeded random state)");

  // superdense
  auto* superdense_sc =
      app.add_subcommand("superdense", "dense-coding round trip for a 2-bit message");
  std::string superdense_bits;
  superdense_sc->add_option("--bits", superdense_bits, "two binary digits, e.g. 01")
      ->required();

  // diagram
  auto* diagram_sc =
      app.add_subcommand("diagram", "information-flow conservation check");
  std::optional<std::string> diagram_file;
  std::optional<std::string> diagram_builtin;
  diagram_sc->add_option("--file", diagram_file, "diagram JSON file");
  diagram_sc->add_option("--builtin", diagram_builtin, "built-in diagram")
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));

  // susy
  auto* susy_sc =
      app.add_subcommand("susy", "partner-Hamiltonian spectra as CSV (level,E0,E1,gap)");
  std::string susy_potential;
  std::size_t susy_n = 400;
  std::size_t susy_levels = 10;
  double susy_xmin = -8.0, susy_xmax = 8.0, susy_c = 2.0, susy_pair_tol = 1e-2;
  std::optional<double> susy_zero_tol;
  susy_sc->add_option("--potential", susy_potential, "superpotential name")
      ->required()
      ->check(CLI::IsMember({"linear", "tanh", "cubic"}));
  susy_sc->add_option("--n", susy_n, "interior grid points (default 400)");
  susy_sc->add_option("--levels", susy_levels, "level pairs to report (default 10)");
  susy_sc->add_option("--xmin", susy_xmin, "left wall (default -8)");
  susy_sc->add_option("--xmax", susy_xmax, "right wall (default 8)");
  susy_sc->add_option("--c", susy_c, "cubic parameter: v(x) = x^3 - c x (default 2)");
  susy_sc->add_option("--pair-tol", susy_pair_tol,
                      "max allowed pairing gap (default 1e-2)");
  susy_sc->add_option("--zero-tol", susy_zero_tol,
                      "zero-mode threshold (default 10*dx^2)");

  // sigma
  auto* sigma_sc =
      app.add_subcommand("sigma", "sigma-model evolution as CSV time series");
  std::string sigma_preset;
  std::size_t sigma_steps = 1000;
  std::optional<double> sigma_dt;
  std::size_t sigma_sites = 64;
  double sigma_length = 2.0 * std::numbers::pi;
  std::size_t sigma_k = 1;
  double sigma_amp = 0.1;
  std::optional<std::uint64_t> sigma_seed;
  sigma_sc->add_option("--preset", sigma_preset, "initial condition")
      ->required()
      ->check(CLI::IsMember({"uniform", "wave", "random"}));
  sigma_sc->add_option("--steps", sigma_steps, "number of steps (default 1000)");
  sigma_sc->add_option("--dt", sigma_dt, "time step (default 0.1*dx)");
  sigma_sc->add_option("--sites", sigma_sites, "lattice sites (default 64)");
  sigma_sc->add_option("--length", sigma_length, "domain length (default 2*pi)");
  sigma_sc->add_option("--k", sigma_k, "wave preset mode number (default 1)");
  sigma_sc->add_option("--amp", sigma_amp, "wave preset amplitude (default 0.1)");
  sigma_sc->add_option("--seed", sigma_seed,
                       "random preset seed (default: QFT_INFOCALC_SEED or 0)");

  // decohere
  auto* decohere_sc =
      app.add_subcommand("decohere", "exponential phase decoherence of a qubit state");
  double decohere_t = 0.0, decohere_tau = 1.0;
  std::string decohere_state;
  decohere_sc->add_option("--t", decohere_t, "elapsed time")->required();
  decohere_sc->add_option("--tau", decohere_tau, "decoherence time constant")->required();
  decohere_sc->add_option("--state", decohere_state, "state JSON file")->required();

  // bound
  auto* bound_sc =
      app.add_subcommand("bound", "holographic bound on information content");
  double bound_area = 0.0;
  bound_sc->add_option("--area", bound_area, "boundary area in m^2")->required();

  // selfcheck
  auto* selfcheck_sc = app.add_subcommand(
      "selfcheck", "exact-identity suites: Clifford, qubit-field algebra, "
                   "superalgebra, square root of NOT");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qft-infocalc");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (app.got_subcommand(entropy_sc)) return entropy_cmd(entropy_state, out, err);
    if (app.got_subcommand(conditional_sc))
      return conditional_cmd(conditional_state, condition_on, out, err);
    if (app.got_subcommand(ternary_sc)) return ternary_cmd(ternary_state, out, err);
    if (app.got_subcommand(teleport_sc))
      return teleport_cmd(teleport_seed, teleport_state, out, err);
    if (app.got_subcommand(superdense_sc))
      return superdense_cmd(superdense_bits, out, err);
    if (app.got_subcommand(diagram_sc))
      return diagram_cmd(diagram_file, diagram_builtin, out, err);
    if (app.got_subcommand(susy_sc))
      return susy_cmd(susy_potential, susy_n, susy_levels, susy_xmin, susy_xmax, susy_c,
                      susy_pair_tol, susy_zero_tol, out, err);
    if (app.got_subcommand(sigma_sc))
      return sigma_cmd(sigma_preset, sigma_steps, sigma_dt, sigma_sites, sigma_length,
                       sigma_k, sigma_amp, sigma_seed, out, err);
    if (app.got_subcommand(decohere_sc))
      return decohere_cmd(decohere_t, decohere_tau, decohere_state, out, err);
    if (app.got_subcommand(bound_sc)) return bound_cmd(bound_area, out, err);
    if (app.got_subcommand(selfcheck_sc)) return selfcheck_cmd(out, err);
    err << "input error: no subcommand selected\n";
    return kInputError;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const numeric_error& e) {
    err << "numeric error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace qic::cli
