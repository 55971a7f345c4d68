#include "varpde/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "varpde/errors.hpp"

namespace varpde {
namespace {

const std::vector<std::string>& option_keys() {
  static const std::vector<std::string> keys = {
      "scheme", "ic",  "nx", "ny",        "nt",      "ht",      "c",
      "nu",     "picard-tol", "snap-every", "out",   "bootstrap", "sigma",
      "sigma-x", "sigma-y", "x0", "y0",   "radius",  "speed",   "rho"};
  return keys;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(const std::string& where, const std::string& text) {
  if (text.empty()) fail(where, "expected a number");
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end != begin + text.size() || errno == ERANGE || !std::isfinite(v)) {
    fail(where, "'" + text + "' is not a finite number");
  }
  return v;
}

std::size_t to_count(const std::string& where, const std::string& text) {
  unsigned long long v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    fail(where, "'" + text + "' is not a non-negative integer");
  }
  if (v < 1) fail(where, "must be >= 1");
  return static_cast<std::size_t>(v);
}

double to_positive(const std::string& where, const std::string& text) {
  const double v = to_double(where, text);
  if (!(v > 0.0)) fail(where, "must be > 0");
  return v;
}

void apply_option(RunConfig& cfg, const std::string& key, const std::string& value,
                  const std::string& where) {
  if (key == "scheme") {
    const auto kind = parse_advection_kind(value);
    if (!kind) fail(where, "unknown scheme '" + value + "'");
    cfg.scheme = *kind;
  } else if (key == "ic") {
    try {
      cfg.ic = parse_initial_condition(value);
    } catch (const Error& e) {
      fail(where, e.what());
    }
  } else if (key == "nx") {
    cfg.nx = to_count(where, value);
  } else if (key == "ny") {
    cfg.ny = to_count(where, value);
  } else if (key == "nt") {
    cfg.nt = to_count(where, value);
  } else if (key == "ht") {
    cfg.ht = to_positive(where, value);
  } else if (key == "c") {
    cfg.c = to_double(where, value);
  } else if (key == "nu") {
    cfg.nu = to_positive(where, value);
  } else if (key == "picard-tol") {
    cfg.picard_tol = to_positive(where, value);
  } else if (key == "snap-every") {
    cfg.snap_every = to_count(where, value);
  } else if (key == "out") {
    if (value.empty()) fail(where, "output directory must not be empty");
    cfg.out = value;
  } else if (key == "bootstrap") {
    if (value == "exact") {
      cfg.bootstrap = Bootstrap::ExactShift;
    } else if (value == "cn") {
      cfg.bootstrap = Bootstrap::CrankNicolson;
    } else {
      fail(where, "bootstrap must be 'exact' or 'cn'");
    }
  } else if (key == "sigma") {
    cfg.ic_params.sigma = to_positive(where, value);
  } else if (key == "sigma-x") {
    cfg.ic_params.sigma_x = to_positive(where, value);
  } else if (key == "sigma-y") {
    cfg.ic_params.sigma_y = to_positive(where, value);
  } else if (key == "x0") {
    cfg.ic_params.x0 = to_double(where, value);
  } else if (key == "y0") {
    cfg.ic_params.y0 = to_double(where, value);
  } else if (key == "radius") {
    cfg.ic_params.radius = to_positive(where, value);
  } else if (key == "speed") {
    cfg.ic_params.speed = to_double(where, value);
  } else if (key == "rho") {
    cfg.ic_params.rho = to_positive(where, value);
  } else {
    fail(where, "unknown key '" + key + "'");
  }
}

struct FileEntry {
  std::string key;
  std::string value;
  std::string where;
};

std::vector<FileEntry> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "--config: cannot open '" + path + "'");
  std::vector<FileEntry> entries;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const std::string where = path + ":" + std::to_string(number);
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail(where, "expected key = value");
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    const auto& keys = option_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      fail(where, "unknown key '" + key + "'");
    }
    // checked here so that a bad value is reported against its line
    RunConfig scratch;
    apply_option(scratch, key, value, where);
    entries.push_back({std::move(key), std::move(value), where});
  }
  return entries;
}

Command parse_command(const std::string& name) {
  if (name == "advect") return Command::Advect;
  if (name == "vorticity") return Command::Vorticity;
  if (name == "dispersion") return Command::Dispersion;
  throw Error(ErrorKind::Parse,
              "unknown command '" + name + "' (expected advect, vorticity or dispersion)");
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::vector<std::pair<std::string, std::string>> rendered_options(const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("scheme", std::string(to_string(cfg.scheme)));
  if (cfg.ic) kv.emplace_back("ic", to_string(*cfg.ic));
  kv.emplace_back("nx", std::to_string(cfg.nx));
  kv.emplace_back("ny", std::to_string(cfg.ny));
  kv.emplace_back("nt", std::to_string(cfg.nt));
  kv.emplace_back("ht", format_double(cfg.ht));
  kv.emplace_back("c", format_double(cfg.c));
  kv.emplace_back("nu", format_double(cfg.nu));
  kv.emplace_back("picard-tol", format_double(cfg.picard_tol));
  if (cfg.snap_every) kv.emplace_back("snap-every", std::to_string(*cfg.snap_every));
  kv.emplace_back("out", cfg.out);
  if (cfg.bootstrap) {
    kv.emplace_back("bootstrap", *cfg.bootstrap == Bootstrap::ExactShift ? "exact" : "cn");
  }
  const auto& p = cfg.ic_params;
  const std::pair<const char*, const std::optional<double>*> params[] = {
      {"sigma", &p.sigma}, {"sigma-x", &p.sigma_x}, {"sigma-y", &p.sigma_y},
      {"x0", &p.x0},       {"y0", &p.y0},           {"radius", &p.radius},
      {"speed", &p.speed}, {"rho", &p.rho}};
  for (const auto& [key, value] : params) {
    if (*value) kv.emplace_back(key, format_double(**value));
  }
  return kv;
}

}  // namespace

std::string_view to_string(Command command) noexcept {
  switch (command) {
    case Command::Advect: return "advect";
    case Command::Vorticity: return "vorticity";
    case Command::Dispersion: return "dispersion";
  }
  return "?";
}

RunConfig default_config(Command command) {
  RunConfig cfg;
  cfg.command = command;
  if (command == Command::Vorticity) {
    cfg.nx = 64;
    cfg.ny = 64;
    cfg.nt = 100;
    cfg.ht = 1e-2;
  }
  return cfg;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  if (args.empty()) throw Error(ErrorKind::Parse, "missing command");
  RunConfig cfg = default_config(parse_command(args[0]));

  CLI::App app{"varpde"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::map<std::string, std::string> values;
  for (const auto& key : option_keys()) app.add_option("--" + key, values[key]);
  std::string config_path;
  app.add_option("--config", config_path);

  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorKind::Parse, e.what());
  }

  if (app.count("--config") > 0) {
    for (const auto& entry : read_config_file(config_path)) {
      apply_option(cfg, entry.key, entry.value, entry.where);
    }
  }
  for (const auto& key : option_keys()) {
    if (app.count("--" + key) > 0) apply_option(cfg, key, values[key], "--" + key);
  }
  validate(cfg);
  return cfg;
}

std::vector<std::string> render(const RunConfig& cfg) {
  std::vector<std::string> args{std::string(to_string(cfg.command))};
  for (auto& [key, value] : rendered_options(cfg)) {
    args.push_back("--" + key);
    args.push_back(std::move(value));
  }
  return args;
}

std::string render_file(const RunConfig& cfg) {
  std::string text;
  for (const auto& [key, value] : rendered_options(cfg)) {
    text += key + " = " + value + "\n";
  }
  return text;
}

void validate(const RunConfig& cfg) {
  if (cfg.nx < 1 || cfg.ny < 1 || cfg.nt < 1) {
    throw Error(ErrorKind::Parse, "counts must be >= 1");
  }
  if (!(cfg.ht > 0.0) || !(cfg.nu > 0.0) || !(cfg.picard_tol > 0.0) ||
      !std::isfinite(cfg.c)) {
    throw Error(ErrorKind::Parse, "ht, nu and picard-tol must be > 0, c finite");
  }
  if (cfg.snap_every && *cfg.snap_every < 1) {
    throw Error(ErrorKind::Parse, "--snap-every must be >= 1");
  }
  if (cfg.ic) {
    const bool two_d = is_two_dimensional(*cfg.ic);
    if (cfg.command == Command::Vorticity && !two_d) {
      throw Error(ErrorKind::Parse, std::string("--ic: ") + to_string(*cfg.ic) +
                                        " is not a vorticity initial condition");
    }
    if (cfg.command != Command::Vorticity && two_d) {
      throw Error(ErrorKind::Parse, std::string("--ic: ") + to_string(*cfg.ic) +
                                        " is not a 1D initial condition");
    }
  }
}

std::size_t snapshot_interval(const RunConfig& cfg) noexcept {
  if (cfg.snap_every) return *cfg.snap_every;
  return std::max<std::size_t>(1, cfg.nt / 10);
}

std::optional<InitialCondition> effective_ic(const RunConfig& cfg) {
  if (cfg.ic) return cfg.ic;
  switch (cfg.command) {
    case Command::Advect: return InitialCondition::Gaussian;
    case Command::Vorticity: return InitialCondition::LambDipole;
    case Command::Dispersion: return std::nullopt;
  }
  return std::nullopt;
}

IcParams effective_ic_params(const RunConfig& cfg) {
  const auto ic = effective_ic(cfg);
  IcParams p = ic ? default_ic_params(*ic) : IcParams{};
  const auto& given = cfg.ic_params;
  const std::pair<std::optional<double>*, const std::optional<double>*> fields[] = {
      {&p.sigma, &given.sigma},   {&p.sigma_x, &given.sigma_x},
      {&p.sigma_y, &given.sigma_y}, {&p.x0, &given.x0},
      {&p.y0, &given.y0},         {&p.radius, &given.radius},
      {&p.speed, &given.speed},   {&p.rho, &given.rho}};
  for (auto [dst, src] : fields) {
    if (*src) *dst = *src;
  }
  return p;
}

std::string usage() {
  return "usage: varpde advect|vorticity|dispersion [flags]\n"
         "  --scheme veselov|leapfrog|simplified   advection scheme\n"
         "  --ic NAME        cosine, gaussian, separatrix, gaussian-vortex,\n"
         "                   lamb-dipole, vortex-sheet\n"
         "  --nx N --ny N    grid points (dispersion: number of xi samples)\n"
         "  --nt N           time levels (advect) or steps (vorticity)\n"
         "  --ht H           time step\n"
         "  --c C            advection speed\n"
         "  --nu NU          Courant number for theoretical dispersion\n"
         "  --picard-tol T   nonlinear solver tolerance\n"
         "  --snap-every K   snapshot interval in levels\n"
         "  --out DIR        output directory\n"
         "  --bootstrap exact|cn   second-level initialisation\n"
         "  --sigma --sigma-x --sigma-y --x0 --y0 --radius --speed --rho\n"
         "                   initial condition parameters\n"
         "  --config FILE    key = value file; flags override it\n";
}

}  // namespace varpde
