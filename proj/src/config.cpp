#include "blipfield/config.hpp"

#include <fstream>
#include <set>

#include "blipfield/io.hpp"

namespace blipfield {

namespace {

using nlohmann::json;

void require_keys(const json& object, const std::string& where,
                  const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
  if (!object.is_object()) {
    throw ConfigError(where + ": expected an object");
  }
  for (const auto& item : object.items()) {
    if (!allowed.contains(item.key())) {
      throw ConfigError(where + ": unknown key '" + item.key() + "'");
    }
  }
  for (const auto& key : required) {
    if (!object.contains(key)) {
      throw ConfigError(where + ": missing key '" + key + "'");
    }
  }
}

double positive_number(const json& value, const std::string& where) {
  if (!value.is_number()) throw ConfigError(where + ": expected a number");
  const double v = value.get<double>();
  if (!(v > 0.0)) throw ConfigError(where + ": must be positive");
  return v;
}

PhysicalConstants parse_units(const json& units) {
  if (units.contains("system")) {
    require_keys(units, "units", {"system"}, {"system"});
    const auto system = units.at("system").get<std::string>();
    if (system != "natural") {
      throw ConfigError("units.system: only 'natural' is recognised");
    }
    return PhysicalConstants::natural();
  }
  require_keys(units, "units", {"hbar", "c", "epsilon", "area"},
               {"hbar", "c", "epsilon", "area"});
  return PhysicalConstants(positive_number(units.at("hbar"), "units.hbar"),
                           positive_number(units.at("c"), "units.c"),
                           positive_number(units.at("epsilon"), "units.epsilon"),
                           positive_number(units.at("area"), "units.area"));
}

Direction parse_direction(const json& value) {
  if (!value.is_number_integer()) {
    throw ConfigError("packet.s: expected -1 or 1");
  }
  const int s = value.get<int>();
  if (s == -1) return Direction::left;
  if (s == 1) return Direction::right;
  throw ConfigError("packet.s: expected -1 or 1");
}

Polarization parse_polarization(const json& value) {
  const auto name = value.get<std::string>();
  if (name == "H") return Polarization::horizontal;
  if (name == "V") return Polarization::vertical;
  throw ConfigError("packet.lambda: expected 'H' or 'V'");
}

PacketSpec parse_packet(const json& block,
                        const std::filesystem::path& config_dir) {
  PacketSpec spec;
  if (!block.is_object() || !block.contains("kind")) {
    throw ConfigError("packet: missing 'kind'");
  }
  const auto kind = block.at("kind").get<std::string>();
  const std::set<std::string> common = {"kind", "s", "lambda", "amplitude"};
  if (kind == "gaussian") {
    spec.kind = PacketSpec::Kind::gaussian;
    std::set<std::string> allowed = common;
    allowed.insert({"center_x", "sigma_x", "k0"});
    require_keys(block, "packet(gaussian)", allowed,
                 {"kind", "s", "lambda", "center_x", "sigma_x"});
    spec.center_x = block.at("center_x").get<double>();
    spec.sigma_x = positive_number(block.at("sigma_x"), "packet.sigma_x");
    spec.k0 = block.value("k0", 0.0);
  } else if (kind == "blip") {
    spec.kind = PacketSpec::Kind::blip;
    std::set<std::string> allowed = common;
    allowed.insert("site");
    require_keys(block, "packet(blip)", allowed, {"kind", "s", "lambda", "site"});
    spec.site = block.at("site").get<int>();
  } else if (kind == "custom-file") {
    spec.kind = PacketSpec::Kind::custom_file;
    std::set<std::string> allowed = {"kind", "path", "amplitude"};
    require_keys(block, "packet(custom-file)", allowed, {"kind", "path"});
    std::filesystem::path path = block.at("path").get<std::string>();
    spec.path = path.is_absolute() ? path : config_dir / path;
  } else {
    throw ConfigError("packet.kind: expected gaussian, blip or custom-file");
  }
  if (spec.kind != PacketSpec::Kind::custom_file) {
    spec.s = parse_direction(block.at("s"));
    spec.lambda = parse_polarization(block.at("lambda"));
  }
  if (block.contains("amplitude")) {
    const json& amp = block.at("amplitude");
    if (!amp.is_array() || amp.size() != 2) {
      throw ConfigError("packet.amplitude: expected [re, im]");
    }
    spec.amplitude = {amp[0].get<double>(), amp[1].get<double>()};
  }
  return spec;
}

}  // namespace

Subcommand subcommand_from_name(const std::string& name) {
  if (name == "evolve") return Subcommand::evolve;
  if (name == "energy") return Subcommand::energy;
  if (name == "fields") return Subcommand::fields;
  if (name == "kernel") return Subcommand::kernel;
  if (name == "validate") return Subcommand::validate;
  throw ConfigError("unknown subcommand '" + name + "'");
}

Grid ScenarioConfig::make_grid_object() const {
  try {
    return make_grid(n_points, length);
  } catch (const std::invalid_argument& error) {
    throw ConfigError(std::string("grid: ") + error.what());
  }
}

WavePacket ScenarioConfig::build_packet(const Grid& grid) const {
  if (packets.empty()) {
    throw ConfigError("packets: at least one packet block is required");
  }
  WavePacket sum(grid);
  for (const PacketSpec& spec : packets) {
    WavePacket term(grid);
    switch (spec.kind) {
      case PacketSpec::Kind::gaussian:
        term = make_gaussian(grid, spec.s, spec.lambda, spec.center_x,
                             spec.sigma_x, spec.k0);
        break;
      case PacketSpec::Kind::blip:
        term = make_blip(grid, spec.s, spec.lambda, spec.site);
        break;
      case PacketSpec::Kind::custom_file:
        term = read_packet_csv(grid, spec.path);
        break;
    }
    sum = sum + spec.amplitude * term;
  }
  // A single custom-file packet with unit amplitude is taken verbatim so a
  // written snapshot re-ingests without loss; superpositions are normalised.
  if (packets.size() == 1 &&
      packets[0].kind == PacketSpec::Kind::custom_file &&
      packets[0].amplitude == std::complex<double>(1.0, 0.0)) {
    return sum;
  }
  return normalize(sum);
}

ScenarioConfig parse_scenario(const json& root, Subcommand command,
                              const std::filesystem::path& config_dir) {
  std::set<std::string> top_allowed = {"units", "grid", "packets"};
  std::set<std::string> top_required = {"units", "grid"};
  const bool needs_packets = command != Subcommand::kernel &&
                             command != Subcommand::validate;
  if (needs_packets) top_required.insert("packets");
  top_allowed.insert("run");
  if (command == Subcommand::evolve) top_required.insert("run");
  require_keys(root, "config", top_allowed, top_required);

  ScenarioConfig config;
  config.constants = parse_units(root.at("units"));

  const json& grid = root.at("grid");
  require_keys(grid, "grid", {"n_points", "length"}, {"n_points", "length"});
  if (!grid.at("n_points").is_number_integer()) {
    throw ConfigError("grid.n_points: expected an integer");
  }
  config.n_points = grid.at("n_points").get<int>();
  config.length = positive_number(grid.at("length"), "grid.length");

  if (root.contains("packets")) {
    if (!root.at("packets").is_array() || root.at("packets").empty()) {
      throw ConfigError("packets: expected a non-empty array");
    }
    for (const json& block : root.at("packets")) {
      config.packets.push_back(parse_packet(block, config_dir));
    }
  }

  const json run = root.value("run", json::object());
  switch (command) {
    case Subcommand::evolve: {
      require_keys(run, "run", {"times"}, {"times"});
      if (!run.at("times").is_array() || run.at("times").empty()) {
        throw ConfigError("run.times: expected a non-empty array");
      }
      for (const json& t : run.at("times")) {
        if (!t.is_number()) throw ConfigError("run.times: expected numbers");
        config.times.push_back(t.get<double>());
      }
      break;
    }
    case Subcommand::kernel: {
      require_keys(run, "run", {"fit_min_separation", "fit_max_separation"},
                   {});
      if (run.contains("fit_min_separation")) {
        config.fit_min_separation =
            positive_number(run.at("fit_min_separation"),
                            "run.fit_min_separation");
      }
      if (run.contains("fit_max_separation")) {
        config.fit_max_separation =
            positive_number(run.at("fit_max_separation"),
                            "run.fit_max_separation");
      }
      break;
    }
    case Subcommand::validate: {
      require_keys(run, "run", {"seed"}, {});
      if (run.contains("seed")) {
        config.seed = run.at("seed").get<std::uint64_t>();
      }
      break;
    }
    default:
      require_keys(run, "run", {}, {});
      break;
  }

  // Surface grid errors (odd n, tiny n, bad length) at parse time.
  config.make_grid_object();
  return config;
}

ScenarioConfig load_scenario(const std::filesystem::path& config_path,
                             Subcommand command) {
  std::ifstream in(config_path);
  if (!in) {
    throw IoError("cannot open config: " + config_path.string());
  }
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& error) {
    throw ConfigError(std::string("config JSON parse error: ") + error.what());
  }
  return parse_scenario(root, command, config_path.parent_path());
}

}  // namespace blipfield
