#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "blipfield/config.hpp"
#include "blipfield/dynamics.hpp"
#include "blipfield/energy.hpp"
#include "blipfield/fields.hpp"
#include "blipfield/io.hpp"
#include "blipfield/kernel.hpp"
#include "blipfield/validate.hpp"

namespace {

namespace fs = std::filesystem;
using namespace blipfield;

constexpr int kExitOk = 0;
constexpr int kExitPhysics = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct CliOptions {
  std::string config_path;
  std::string out_dir = ".";
  bool quiet = false;
};

void error_record(const std::string& kind, const std::string& message) {
  // Single-line machine-parsable error record.
  nlohmann::json record = {{"error", kind}, {"message", message}};
  std::cerr << record.dump() << '\n';
}

fs::path ensure_out_dir(const CliOptions& options) {
  fs::path dir(options.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory: " + dir.string());
  }
  return dir;
}

int run_evolve(const CliOptions& options) {
  const ScenarioConfig config =
      load_scenario(options.config_path, Subcommand::evolve);
  const Grid grid = config.make_grid_object();
  const WavePacket packet = config.build_packet(grid);
  const fs::path out = ensure_out_dir(options);

  nlohmann::json reports = nlohmann::json::array();
  for (size_t i = 0; i < config.times.size(); ++i) {
    const double t = config.times[i];
    const WavePacket snapshot =
        spectral_evolve(packet, t, config.constants);
    const fs::path csv = out / ("psi_t" + std::to_string(i) + ".csv");
    write_packet_csv(snapshot, csv);
    EvolutionReport report = evolve_report(packet, t, config.constants);
    nlohmann::json entry = to_json(report);
    entry["snapshot"] = csv.filename().string();
    reports.push_back(entry);
    if (!options.quiet) {
      std::cout << "t=" << t << " -> " << csv.string()
                << " (norm drift " << report.norm_drift << ")\n";
    }
  }
  write_json(reports, out / "evolution_report.json");
  return kExitOk;
}

int run_energy(const CliOptions& options) {
  const ScenarioConfig config =
      load_scenario(options.config_path, Subcommand::energy);
  const Grid grid = config.make_grid_object();
  const WavePacket packet = config.build_packet(grid);
  const EnergyBreakdown breakdown =
      energy_expectation(packet, config.constants);
  const fs::path out = ensure_out_dir(options);
  write_json(to_json(breakdown), out / "energy.json");
  if (!options.quiet) {
    std::cout << to_json(breakdown).dump(2) << '\n';
  }
  return kExitOk;
}

int run_fields(const CliOptions& options) {
  const ScenarioConfig config =
      load_scenario(options.config_path, Subcommand::fields);
  const Grid grid = config.make_grid_object();
  const WavePacket packet = config.build_packet(grid);
  const Kernel kernel = build_kernel(grid, config.constants);
  const fs::path out = ensure_out_dir(options);

  write_kernel_momentum_csv(kernel, out / "kernel_k.csv");
  write_kernel_position_csv(kernel, out / "kernel_x.csv");
  write_field_profile_csv(field_profile(kernel, packet), out / "fields.csv");

  const FieldProfile profile = field_profile(kernel, packet);
  const RealArray intensity_y = 0.5 * profile.e_y.abs2();
  const RealArray intensity_z = 0.5 * profile.e_z.abs2();
  const RealArray intensity_total = intensity_y + intensity_z;
  write_profile_csv(out / "intensity.csv", grid,
                    {"intensity_y", "intensity_z", "intensity_total"},
                    {&intensity_y, &intensity_z, &intensity_total});

  const RealArray flux = poynting_profile(kernel, packet);
  write_profile_csv(out / "poynting.csv", grid, {"poynting"}, {&flux});
  if (!options.quiet) {
    std::cout << "wrote kernel_k.csv kernel_x.csv fields.csv intensity.csv "
                 "poynting.csv\n";
  }
  return kExitOk;
}

int run_kernel(const CliOptions& options) {
  const ScenarioConfig config =
      load_scenario(options.config_path, Subcommand::kernel);
  const Grid grid = config.make_grid_object();
  const Kernel kernel = build_kernel(grid, config.constants);
  const fs::path out = ensure_out_dir(options);

  write_kernel_momentum_csv(kernel, out / "kernel_k.csv");
  write_kernel_position_csv(kernel, out / "kernel_x.csv");

  const double lo =
      config.fit_min_separation.value_or(tail_fit_min_separation(grid));
  const double hi =
      config.fit_max_separation.value_or(tail_fit_max_separation(grid));
  const double exponent = fit_tail_exponent(kernel.position_values().abs(),
                                            grid, grid.n() / 2, lo, hi);
  const nlohmann::json fit = {{"tail_exponent", exponent},
                              {"fit_min_separation", lo},
                              {"fit_max_separation", hi}};
  write_json(fit, out / "kernel_fit.json");
  if (!options.quiet) {
    std::cout << fit.dump(2) << '\n';
  }
  return kExitOk;
}

int run_validate(const CliOptions& options) {
  const ScenarioConfig config =
      load_scenario(options.config_path, Subcommand::validate);
  ValidationOptions validation;
  validation.seed = config.seed;
  const std::vector<CheckResult> checks = run_validation_suite(validation);
  const nlohmann::json report = validation_report_json(checks);
  const fs::path out = ensure_out_dir(options);
  write_json(report, out / "validation_report.json");

  bool all_passed = true;
  for (const CheckResult& check : checks) {
    all_passed = all_passed && check.passed;
    if (!options.quiet) {
      std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name
                << "  measured=" << check.measured
                << " threshold=" << check.threshold << '\n';
    }
  }
  if (!all_passed) {
    error_record("validation", "one or more physics checks failed");
    return kExitPhysics;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D photon wave-packet simulator in the position "
               "representation"};
  app.require_subcommand(1);

  CliOptions options;
  int (*runner)(const CliOptions&) = nullptr;
  for (const auto& [name, fn, help] :
       {std::tuple{"evolve", &run_evolve,
                   "Transport a packet and write snapshots"},
        std::tuple{"energy", &run_energy,
                   "Energy expectation of a packet"},
        std::tuple{"fields", &run_fields,
                   "Field, intensity and Poynting profiles"},
        std::tuple{"kernel", &run_kernel,
                   "Regularisation kernel tables and tail fit"},
        std::tuple{"validate", &run_validate,
                   "Run the physics validation suite"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", options.config_path, "Scenario config (JSON)")
        ->required();
    sub->add_option("--out", options.out_dir, "Output directory");
    sub->add_flag("--quiet", options.quiet, "Suppress progress output");
    sub->callback([&runner, fn = fn]() { runner = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    if (error.get_exit_code() == 0) return app.exit(error);  // --help
    error_record("usage", error.what());
    return kExitConfig;
  }

  try {
    return runner(options);
  } catch (const ConfigError& error) {
    error_record("config", error.what());
    return kExitConfig;
  } catch (const IoError& error) {
    error_record("io", error.what());
    return kExitIo;
  } catch (const std::exception& error) {
    error_record("config", error.what());
    return kExitConfig;
  }
}
