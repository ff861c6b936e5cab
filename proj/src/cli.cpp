#include "geophase/cli.hpp"

#include "geophase/evolution.hpp"
#include "geophase/phases.hpp"
#include "geophase/spectral.hpp"
#include "geophase/sweep.hpp"
#include "geophase/twocycle.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

namespace geophase {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamFlag {
  const char* name;  // SpinParams field, also the config key
  const char* flags;
  CLI::Option* option = nullptr;
  double value = 0.0;
};

struct Options {
  std::vector<ParamFlag> params{
      {"omega0", "--omega0"},
      {"omega_a0", "--omega-a0,--omega_a0"},
      {"omega_b0", "--omega-b0,--omega_b0"},
      {"gamma", "--gamma"},
      {"gamma_a", "--gamma-a,--gamma_a"},
      {"gamma_b", "--gamma-b,--gamma_b"},
      {"J", "--J"},
      {"omega1", "--omega1"},
  };
  CLI::Option* steps_opt = nullptr;
  int steps = 0;
  std::string format = "csv";
  std::string out_path;

  // phases
  std::string mode = "berry";
  // evolve
  CLI::Option* time_opt = nullptr;
  double time = 0.0;
  std::string initial = "uu";
  std::string method = "exact";
  // twocycle
  std::string scheme = "adiabatic";
  std::vector<double> omega1_sweep;
  // sweep
  std::vector<std::string> axes;
  std::string quantity = "spectrum";
  unsigned threads = 0;

  bool given(const std::string& name) const {
    for (const auto& p : params)
      if (name == p.name) return p.option->count() > 0;
    return false;
  }
};

double number_or_throw(double v) {
  if (!std::isfinite(v)) throw NumericError("non-finite value in output");
  return std::stod(format_number(v));
}

Json params_json(const SpinParams& p) {
  return Json{{"omega_a0", number_or_throw(p.omega_a0)}, {"omega_b0", number_or_throw(p.omega_b0)},
              {"gamma_a", number_or_throw(p.gamma_a)},   {"gamma_b", number_or_throw(p.gamma_b)},
              {"J", number_or_throw(p.J)},               {"omega1", number_or_throw(p.omega1)}};
}

// Numbers pass through the %.12e text so JSON and CSV carry identical values.
std::string to_json(const Table& table, const std::string& command, const SpinParams& params,
                    Json extra) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["params"] = params_json(params);
  for (auto& [key, value] : extra.items()) doc[key] = value;
  Json columns = Json::array();
  for (const Column& c : table.columns) columns.push_back(c.name);
  doc["columns"] = columns;
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (table.columns[c].integer)
        r[table.columns[c].name] = static_cast<long long>(row[c]);
      else
        r[table.columns[c].name] = number_or_throw(row[c]);
    }
    rows.push_back(r);
  }
  doc["rows"] = rows;
  if (!table.summary.empty()) {
    Json summary;
    for (const auto& [key, value] : table.summary) summary[key] = number_or_throw(value);
    doc["summary"] = summary;
  }
  return doc.dump(2) + "\n";
}

// Fields named on the command line or in the config override the defaults
// (all zero); omega0 and gamma fill both sites before per-site values apply.
SpinParams collect_params(const Options& o) {
  SpinParams p;
  for (const char* name : {"omega0", "omega_a0", "omega_b0", "gamma", "gamma_a", "gamma_b", "J",
                           "omega1"})
    for (const auto& f : o.params)
      if (f.name == std::string(name) && f.option->count() > 0) {
        if (!std::isfinite(f.value))
          throw ParameterError(std::string("--") + name + " must be finite");
        set_param(p, name, f.value);
      }
  return p;
}

void require_static_params(const Options& o, const std::vector<std::string>& swept = {}) {
  auto have = [&](const std::string& name) {
    return o.given(name) || std::find(swept.begin(), swept.end(), name) != swept.end();
  };
  if (!have("omega0") && !(have("omega_a0") && have("omega_b0")))
    throw ParameterError("missing --omega0 (or both --omega-a0 and --omega-b0)");
  if (!have("gamma") && !(have("gamma_a") && have("gamma_b")))
    throw ParameterError("missing --gamma (or both --gamma-a and --gamma-b)");
  if (!have("J")) throw ParameterError("missing --J");
}

void require_omega1(const Options& o, const std::vector<std::string>& swept = {}) {
  if (!o.given("omega1") && std::find(swept.begin(), swept.end(), "omega1") == swept.end())
    throw ParameterError("missing --omega1");
}

TwoSpinState initial_state(const std::string& name, const SpinParams& p) {
  if (name == "uu") return TwoSpinState::basis(kUpUp);
  if (name == "ud") return TwoSpinState::basis(kUpDown);
  if (name == "du") return TwoSpinState::basis(kDownUp);
  if (name == "dd") return TwoSpinState::basis(kDownDown);
  if (name == "singlet") return TwoSpinState::singlet();
  for (int n = 1; n <= 4; ++n) {
    if (name == "xi" + std::to_string(n)) return eigensystem(p, 0.0).state(n);
    if (name == "tilde" + std::to_string(n)) return tilde_eigensystem(p).state(n);
  }
  throw ParameterError("unknown initial state '" + name +
                       "' (uu, ud, du, dd, singlet, xi1..xi4, tilde1..tilde4)");
}

struct Output {
  Table table;
  SpinParams params;
  Json extra = Json::object();
};

Output cmd_spectrum(const Options& o) {
  require_static_params(o);
  const SpinParams p = collect_params(o);
  return {spectrum_table(p), p};
}

Output cmd_phases(const Options& o) {
  require_static_params(o);
  require_omega1(o);
  const SpinParams p = collect_params(o);
  Output out{phases_table(p, o.mode == "aa"), p};
  out.extra["mode"] = o.mode;
  return out;
}

Output cmd_evolve(const Options& o) {
  require_static_params(o);
  const SpinParams p = collect_params(o);
  p.validate();
  double t = o.time;
  if (o.time_opt->count() == 0) {
    require_omega1(o);
    t = p.period();
  }
  const TwoSpinState psi0 = initial_state(o.initial, p);
  const int steps = o.steps_opt->count() ? o.steps : 10000;
  const EvolutionResult r =
      o.method == "stepped" ? evolve_stepped(p, psi0, t, steps) : evolve_exact(p, psi0, t);

  Output out{{}, p};
  out.table.columns = {{"index", true}, {"re", false}, {"im", false}};
  for (int k = 0; k < 4; ++k)
    out.table.add_row({double(k), r.final_state[k].real(), r.final_state[k].imag()});
  const Complex ov = psi0.overlap(r.final_state);
  out.table.summary = {{"t", t},
                       {"overlap_abs", std::abs(ov)},
                       {"overlap_arg", std::arg(ov)},
                       {"unitarity_defect", unitarity_defect(r.propagator.matrix())}};
  out.extra["initial"] = o.initial;
  out.extra["method"] = o.method;
  if (o.method == "stepped") out.extra["steps"] = steps;
  return out;
}

Output cmd_twocycle(const Options& o) {
  require_static_params(o);
  if (o.omega1_sweep.empty()) require_omega1(o);
  const SpinParams base = collect_params(o);
  std::vector<double> rates = o.omega1_sweep;
  if (rates.empty()) rates.push_back(base.omega1);

  Output out{{}, base};
  out.extra["scheme"] = o.scheme;
  if (o.scheme == "adiabatic") {
    out.table.columns = {{"omega1", false}, {"n", true},     {"phase", false},
                         {"target", false}, {"error", false}, {"fidelity", false}};
    const std::optional<int> steps =
        o.steps_opt->count() ? std::optional<int>(o.steps) : std::nullopt;
    for (double w1 : rates) {
      SpinParams p = base;
      p.omega1 = w1;
      for (int n = 1; n <= 4; ++n) {
        const EigenpathTwoCycle path = adiabatic_two_cycle_path(p, n, steps);
        out.table.add_row({w1, double(n), path.phase, path.target, path.error(), path.fidelity});
      }
    }
  } else {
    out.table.columns = {{"omega1", false},
                         {"n", true},
                         {"phase", false},
                         {"fidelity", false},
                         {"identity_defect", false}};
    for (double w1 : rates) {
      SpinParams p = base;
      p.omega1 = w1;
      const EigenSystem tilde = tilde_eigensystem(p);
      for (int n = 1; n <= 4; ++n) {
        const AaTwoCycleResult r = run_aa_two_cycle(p, tilde.state(n));
        const Complex ov = tilde.state(n).overlap(r.final_state);
        out.table.add_row({w1, double(n), std::arg(ov), std::abs(ov), r.identity_defect});
      }
    }
  }
  return out;
}

Output cmd_sweep(const Options& o) {
  SweepSpec spec;
  std::vector<std::string> swept;
  for (const std::string& text : o.axes) {
    spec.axes.push_back(parse_axis(text));
    swept.push_back(spec.axes.back().name);
  }
  if (spec.axes.empty()) throw ParameterError("sweep needs at least one --axis");
  // A swept omega0 or gamma stands in for both per-site values.
  std::vector<std::string> covered = swept;
  for (const std::string& s : swept) {
    if (s == "omega0") covered.insert(covered.end(), {"omega_a0", "omega_b0"});
    if (s == "gamma") covered.insert(covered.end(), {"gamma_a", "gamma_b"});
  }
  require_static_params(o, covered);
  spec.quantity = parse_quantity(o.quantity);
  if (spec.quantity != SweepQuantity::spectrum) require_omega1(o, covered);
  spec.base = collect_params(o);
  spec.validate();

  Output out{run_sweep(spec, o.threads), spec.base};
  out.extra["quantity"] = o.quantity;
  Json axes = Json::array();
  for (const SweepAxis& a : spec.axes)
    axes.push_back(Json{{"name", a.name},
                        {"start", number_or_throw(a.start)},
                        {"stop", number_or_throw(a.stop)},
                        {"count", a.count}});
  out.extra["axes"] = axes;
  return out;
}

void print_error(std::ostream& err, int code, const std::string& kind, const std::string& message) {
  Json e{{"error", Json{{"code", code}, {"kind", kind}, {"message", message}}}};
  err << e.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Two-spin Ising model in a rotating field: spectra, geometric phases, two-cycle "
               "protocols"};
  app.name("geophase");
  app.set_config("--config", "", "flat key=value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.fallthrough();
  app.require_subcommand(1);

  for (auto& p : o.params) p.option = app.add_option(p.flags, p.value);
  o.steps_opt = app.add_option("--steps", o.steps, "integration steps per cycle")
                    ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", o.out_path, "write the result here instead of stdout");

  CLI::App* spectrum = app.add_subcommand("spectrum", "energies E_1..E_4");
  CLI::App* phases = app.add_subcommand("phases", "one-cycle phase breakdown per eigenlabel");
  phases->add_option("--mode", o.mode)->check(CLI::IsMember({"berry", "aa"}));
  CLI::App* evolve = app.add_subcommand("evolve", "propagate a state");
  o.time_opt = evolve->add_option("--t", o.time, "evolution time (default: one period)");
  evolve->add_option("--initial", o.initial,
                     "uu, ud, du, dd, singlet, xi1..xi4 (instantaneous), tilde1..tilde4 (cycling)");
  evolve->add_option("--method", o.method)->check(CLI::IsMember({"exact", "stepped"}));
  CLI::App* twocycle = app.add_subcommand("twocycle", "two-cycle sign-reversal protocols");
  twocycle->add_option("--scheme", o.scheme)->check(CLI::IsMember({"adiabatic", "aa"}));
  twocycle->add_option("--omega1-sweep", o.omega1_sweep, "comma-separated omega1 values")
      ->delimiter(',');
  CLI::App* sweep = app.add_subcommand("sweep", "grid sweep of one quantity");
  sweep->add_option("--axis", o.axes, "name:start:stop:count, repeatable")->required();
  sweep->add_option("--quantity", o.quantity)
      ->check(CLI::IsMember({"spectrum", "berry", "aa", "twocycle-defect"}));
  sweep->add_option("--threads", o.threads, "worker threads (default: all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::FileError& e) {
    print_error(err, kExitIo, "io", e.what());
    return kExitIo;
  } catch (const CLI::ParseError& e) {
    print_error(err, kExitUsage, "usage", e.what());
    return kExitUsage;
  }

  try {
    Output result;
    std::string command;
    if (*spectrum) {
      command = "spectrum";
      result = cmd_spectrum(o);
    } else if (*phases) {
      command = "phases";
      result = cmd_phases(o);
    } else if (*evolve) {
      command = "evolve";
      result = cmd_evolve(o);
    } else if (*twocycle) {
      command = "twocycle";
      result = cmd_twocycle(o);
    } else {
      command = "sweep";
      result = cmd_sweep(o);
    }

    const std::string text = o.format == "json"
                                 ? to_json(result.table, command, result.params, result.extra)
                                 : to_csv(result.table);
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError("cannot open '" + o.out_path + "' for writing");
      file << text;
      file.flush();
      if (!file) throw IoError("failed writing '" + o.out_path + "'");
    }
    return kExitOk;
  } catch (const ParameterError& e) {
    print_error(err, kExitUsage, "parameter", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    print_error(err, kExitIo, "io", e.what());
    return kExitIo;
  } catch (const NumericError& e) {
    print_error(err, kExitNumeric, "numeric", e.what());
    return kExitNumeric;
  } catch (const std::exception& e) {
    print_error(err, kExitNumeric, "internal", e.what());
    return kExitNumeric;
  }
}

}  // namespace geophase
