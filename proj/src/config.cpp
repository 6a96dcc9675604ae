#include "diracsim/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "diracsim/measurement.hpp"

namespace diracsim {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_list(const std::string& v, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string tok;
    while (ss >> tok) {
        try {
            out.push_back(std::stod(tok));
        } catch (...) {
            throw ConfigError("bad numeric value '" + tok + "' for " + key);
        }
    }
    return out;
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (trim(v.substr(pos)).empty()) return d;
    } catch (...) {
    }
    throw ConfigError("bad numeric value '" + v + "' for " + key);
}

long parse_long(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long d = std::stol(v, &pos);
        if (trim(v.substr(pos)).empty()) return d;
    } catch (...) {
    }
    throw ConfigError("bad integer value '" + v + "' for " + key);
}

void set_key(ExperimentConfig& cfg, const std::string& section, const std::string& key,
             const std::string& value) {
    const std::string full = section + "." + key;
    if (section == "experiment") {
        if (key == "name") cfg.name = value;
        else if (key == "engine") cfg.engine = value;
        else throw ConfigError("unknown key " + full);
    } else if (section == "physics") {
        if (key == "eta") cfg.eta = parse_double(value, full);
        else if (key == "omega_tilde") cfg.omega_tilde = parse_double(value, full);
        else if (key == "Omega") cfg.mass_term = parse_double(value, full);
        else if (key == "lambda_c") cfg.lambda_c = parse_double(value, full);
        else if (key == "omega_probe") cfg.omega_probe = parse_double(value, full);
        else if (key == "p0") cfg.p0 = parse_double(value, full);
        else throw ConfigError("unknown key " + full);
    } else if (section == "grid") {
        if (key == "n_points") cfg.n_points = static_cast<int>(parse_long(value, full));
        else if (key == "x_min") cfg.x_min = parse_double(value, full);
        else if (key == "x_max") cfg.x_max = parse_double(value, full);
        else throw ConfigError("unknown key " + full);
    } else if (section == "time") {
        if (key == "horizon") cfg.horizon = parse_double(value, full);
        else if (key == "dt") cfg.dt = parse_double(value, full);
        else if (key == "snapshots") cfg.snapshots = parse_list(value, full);
        else throw ConfigError("unknown key " + full);
    } else if (section == "measurement") {
        if (key == "shots") cfg.shots = parse_long(value, full);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_long(value, full));
        else if (key == "probe_times") cfg.probe_times = parse_list(value, full);
        else if (key == "k_max") cfg.k_max = parse_double(value, full);
        else if (key == "k_points") cfg.k_points = static_cast<int>(parse_long(value, full));
        else throw ConfigError("unknown key " + full);
    } else if (section == "fock") {
        if (key == "n_trunc") cfg.n_trunc = static_cast<int>(parse_long(value, full));
        else throw ConfigError("unknown key " + full);
    } else if (section == "sweep") {
        if (key == "lambdas") cfg.sweep_lambdas = parse_list(value, full);
        else throw ConfigError("unknown key " + full);
    } else if (section == "output") {
        if (key == "dir") cfg.out_dir = value;
        else throw ConfigError("unknown key " + full);
    } else {
        throw ConfigError("unknown section [" + section + "]");
    }
}

}  // namespace

ExperimentConfig default_config(const std::string& experiment) {
    ExperimentConfig cfg;
    cfg.name = experiment;
    cfg.omega_tilde = 2.0 * M_PI * 0.068;
    cfg.omega_probe = 2.0 * M_PI * 0.013;
    cfg.probe_times = default_probe_times();
    cfg.seed = 1;
    if (experiment == "fig1") {
        cfg.horizon = 250.0;
        cfg.dt = 2.0;
    } else if (experiment == "fig2" || experiment == "fig3") {
        cfg.lambda_c = 1.2;
        cfg.horizon = 150.0;
        cfg.dt = 2.0;
    } else if (experiment == "sweep") {
        cfg.horizon = 250.0;
        cfg.dt = 1.0;
        cfg.shots = 0;
    } else if (experiment == "custom") {
        cfg.lambda_c = 1.2;
    } else {
        throw ConfigError("unknown experiment '" + experiment + "'");
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());

    // First pass picks up the experiment name so file values layer on
    // top of that experiment's defaults.
    std::vector<std::pair<std::string, std::pair<std::string, std::string>>> kvs;
    std::string line, section;
    while (std::getline(in, line)) {
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("malformed section header: " + line);
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("malformed line: " + line);
        if (section.empty()) throw ConfigError("key outside a section: " + line);
        kvs.push_back({section, {trim(line.substr(0, eq)), trim(line.substr(eq + 1))}});
    }

    std::string name = "custom";
    for (const auto& [sec, kv] : kvs)
        if (sec == "experiment" && kv.first == "name") name = kv.second;

    ExperimentConfig cfg = default_config(name);
    for (const auto& [sec, kv] : kvs) set_key(cfg, sec, kv.first, kv.second);
    return cfg;
}

void apply_override(ExperimentConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override must look like section.key=value: " + assignment);
    const std::string key = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    const auto dot = key.find('.');
    if (dot == std::string::npos)
        throw ConfigError("override key needs a section prefix: " + assignment);
    set_key(cfg, key.substr(0, dot), key.substr(dot + 1), value);
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.name != "fig1" && cfg.name != "fig2" && cfg.name != "fig3" &&
        cfg.name != "sweep" && cfg.name != "custom")
        throw ConfigError("unknown experiment '" + cfg.name + "'");
    if (cfg.engine != "spectral" && cfg.engine != "fock" && cfg.engine != "both")
        throw ConfigError("unknown engine '" + cfg.engine + "'");
    if (cfg.mass_term && cfg.lambda_c)
        throw ConfigError("give exactly one of physics.Omega and physics.lambda_c");
    if (!(cfg.eta > 0.0) || !(cfg.omega_tilde > 0.0))
        throw ConfigError("eta and omega_tilde must be positive");
    if (cfg.mass_term && *cfg.mass_term < 0.0) throw ConfigError("Omega must be >= 0");
    if (cfg.lambda_c && !(*cfg.lambda_c > 0.0)) throw ConfigError("lambda_c must be positive");
    if (cfg.n_points < 64 || (cfg.n_points & (cfg.n_points - 1)) != 0)
        throw ConfigError("grid.n_points must be a power of two >= 64");
    if (!(cfg.x_max > cfg.x_min)) throw ConfigError("grid extent is degenerate");
    if (cfg.x_min > -20.0 || cfg.x_max < 20.0)
        throw ConfigError("grid must span at least [-20, 20] Delta");
    if (!(cfg.horizon > 0.0) || !(cfg.dt > 0.0))
        throw ConfigError("time.horizon and time.dt must be positive");
    if (cfg.shots < 0) throw ConfigError("measurement.shots must be >= 0");
    if (cfg.shots > 0 && !cfg.seed)
        throw ConfigError("measurement.seed is mandatory when shots is finite");
    if (cfg.probe_times.size() < 3) throw ConfigError("need at least 3 probe times");
    if (!(cfg.k_max > 0.0) || cfg.k_points < 3 || cfg.k_points % 2 == 0)
        throw ConfigError("k grid needs k_max > 0 and an odd k_points >= 3");
    if (cfg.n_trunc < 16) throw ConfigError("fock.n_trunc must be >= 16");
    if ((cfg.name == "fig1" || cfg.name == "sweep") && cfg.sweep_lambdas.empty())
        throw ConfigError("sweep.lambdas must not be empty");
    for (double l : cfg.sweep_lambdas)
        if (!(l > 0.0)) throw ConfigError("sweep.lambdas must be positive");
}

DiracParams resolve_params(const ExperimentConfig& cfg) {
    validate(cfg);
    if (cfg.lambda_c)
        return params_from_compton(cfg.eta, cfg.omega_tilde, *cfg.lambda_c, cfg.omega_probe);
    return params_from_lab(cfg.eta, cfg.omega_tilde, cfg.mass_term.value_or(0.0),
                           cfg.omega_probe);
}

Grid resolve_grid(const ExperimentConfig& cfg) {
    return make_grid(cfg.n_points, {cfg.x_min, cfg.x_max});
}

std::filesystem::path resolve_out_dir(const ExperimentConfig& cfg) {
    std::filesystem::path dir(cfg.out_dir);
    if (dir.is_relative()) {
        if (const char* root = std::getenv("DIRACSIM_OUT_ROOT")) dir = std::filesystem::path(root) / dir;
    }
    return dir;
}

std::string config_echo(const ExperimentConfig& cfg) {
    const DiracParams p = resolve_params(cfg);
    std::ostringstream out;
    out.precision(17);
    out << "[experiment]\nname = " << cfg.name << "\nengine = " << cfg.engine << "\n\n";
    out << "[physics]\neta = " << cfg.eta << "\nomega_tilde = " << cfg.omega_tilde << "\n";
    out << "Omega = " << p.mass_term << "\n";
    out << "# derived: c = " << p.c << " Delta/us";
    if (p.mass_term > 0.0) out << ", lambda_c = " << compton_wavelength(p) << " Delta";
    out << "\nomega_probe = " << cfg.omega_probe << "\np0 = " << cfg.p0 << "\n\n";
    out << "[grid]\nn_points = " << cfg.n_points << "\nx_min = " << cfg.x_min
        << "\nx_max = " << cfg.x_max << "\n\n";
    out << "[time]\nhorizon = " << cfg.horizon << "\ndt = " << cfg.dt << "\nsnapshots =";
    for (double s : cfg.snapshots) out << ' ' << s;
    out << "\n\n[measurement]\nshots = " << cfg.shots << "\n";
    if (cfg.seed) out << "seed = " << *cfg.seed << "\n";
    out << "probe_times =";
    for (double t : cfg.probe_times) out << ' ' << t;
    out << "\nk_max = " << cfg.k_max << "\nk_points = " << cfg.k_points << "\n\n";
    out << "[fock]\nn_trunc = " << cfg.n_trunc << "\n\n";
    out << "[sweep]\nlambdas =";
    for (double l : cfg.sweep_lambdas) out << ' ' << l;
    out << "\n\n[output]\ndir = " << cfg.out_dir << "\n";
    return out.str();
}

}  // namespace diracsim
