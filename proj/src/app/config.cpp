#include "eitmech/app/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace eitmech::app {

namespace {

struct Entry {
    std::string value;
    std::size_t line = 0;
};

using Section = std::map<std::string, Entry, std::less<>>;

const std::map<std::string, std::set<std::string, std::less<>>, std::less<>>& known_keys() {
    static const std::map<std::string, std::set<std::string, std::less<>>, std::less<>> keys = {
        {"experiment", {"name", "model", "amplitude", "label"}},
        {"params",
         {"units", "omega_m", "gamma_m", "Q_m", "n_i", "temperature", "kappa", "delta_c", "G", "G0",
          "g", "N", "gamma", "gamma_c", "Omega", "delta", "Delta"}},
        {"sweep", {"parameter", "min", "max", "count", "scale", "unit"}},
        {"bare", {"enabled", "delta_c"}},
        {"mapping",
         {"squeeze", "angle", "thermal", "t_final", "steps", "wigner_points", "wigner_sigmas",
          "full_crosscheck", "full_steps"}},
        {"spectrum", {"span", "points", "center"}},
        {"output", {"dir", "prefix"}},
        {"run", {"workers"}},
    };
    return keys;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

class Parser {
public:
    explicit Parser(std::string_view origin) : origin_(origin) {}

    [[noreturn]] void error(std::size_t line, std::string_view key, const std::string& what) const {
        std::string msg = origin_ + ":" + std::to_string(line) + ": ";
        if (!key.empty()) msg += "key '" + std::string(key) + "': ";
        fail(ErrorKind::InvalidConfig, msg + what);
    }

    std::map<std::string, Section, std::less<>> split(std::string_view text) const {
        std::map<std::string, Section, std::less<>> sections;
        std::string current;
        std::size_t line_no = 0;
        std::istringstream in{std::string(text)};
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            std::string line = trim(raw);
            if (line.empty() || line[0] == '#' || line[0] == ';') continue;
            const auto hash = line.find(" #");
            if (hash != std::string::npos) line = trim(line.substr(0, hash));
            if (line.front() == '[') {
                if (line.back() != ']') error(line_no, "", "unterminated section header");
                current = trim(line.substr(1, line.size() - 2));
                if (!known_keys().contains(current)) {
                    error(line_no, "", "unknown section [" + current + "]");
                }
                sections[current]["@line"] = {"", line_no};
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos) error(line_no, "", "expected 'key = value'");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (current.empty()) error(line_no, key, "key outside of any section");
            if (key.empty()) error(line_no, "", "empty key");
            if (!known_keys().at(current).contains(key)) {
                error(line_no, key, "unknown key in [" + current + "]");
            }
            if (value.empty()) error(line_no, key, "empty value");
            auto& section = sections[current];
            if (const auto it = section.find(key); it != section.end()) {
                error(line_no, key,
                      "duplicate key (first set on line " + std::to_string(it->second.line) + ")");
            }
            section[key] = {value, line_no};
        }
        return sections;
    }

    double number(const Entry& e, std::string_view key, std::string_view text) const {
        double v = 0.0;
        const char* first = text.data();
        const char* last = first + text.size();
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc() || res.ptr != last) {
            error(e.line, key, "expected a number, got '" + std::string(text) + "'");
        }
        if (!std::isfinite(v)) error(e.line, key, "value must be finite");
        return v;
    }

    double number(const Entry& e, std::string_view key) const { return number(e, key, e.value); }

    std::size_t count(const Entry& e, std::string_view key) const {
        const double v = number(e, key);
        if (v < 0.0 || v != std::floor(v) || v > 1e12) {
            error(e.line, key, "expected a non-negative integer");
        }
        return static_cast<std::size_t>(v);
    }

    bool flag(const Entry& e, std::string_view key) const {
        std::string v = e.value;
        std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
        if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
        if (v == "false" || v == "no" || v == "off" || v == "0") return false;
        error(e.line, key, "expected true or false");
    }

    // "<number> [Hz|kHz|MHz|GHz|rad/s|omega_m|kappa]". A bare number is read
    // in the section's default units.
    double frequency(const Entry& e, std::string_view key, bool angular_default,
                     std::optional<double> omega_m, std::optional<double> kappa) const {
        const std::string& text = e.value;
        const auto space = text.find_first_of(" \t");
        const std::string num = space == std::string::npos ? text : text.substr(0, space);
        const std::string unit = space == std::string::npos ? std::string() : trim(text.substr(space));
        const double v = number(e, key, num);
        if (unit.empty()) return angular_default ? v : angular(v);
        if (unit == "Hz") return angular(v);
        if (unit == "kHz") return angular(v * 1e3);
        if (unit == "MHz") return angular(v * 1e6);
        if (unit == "GHz") return angular(v * 1e9);
        if (unit == "rad/s") return v;
        if (unit == "omega_m") {
            if (!omega_m) error(e.line, key, "omega_m is not available here");
            return v * *omega_m;
        }
        if (unit == "kappa") {
            if (!kappa) error(e.line, key, "kappa is not available here");
            return v * *kappa;
        }
        error(e.line, key, "unknown unit '" + unit + "'");
    }

private:
    std::string origin_;
};

std::string fmt(double v) {
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return buf.data();
}

// Strips a run header (CSV comment block) down to the config it carries.
std::string unwrap_header(std::string_view text) {
    if (text.substr(0, header_begin.size()) != header_begin) return std::string(text);
    std::istringstream in{std::string(text)};
    std::string out, line;
    std::getline(in, line);
    out += "\n";  // keep line numbers aligned with the file
    while (std::getline(in, line)) {
        if (line.rfind(header_end, 0) == 0) break;
        if (line.rfind("# ", 0) == 0) {
            out += line.substr(2);
        } else if (line != "#") {
            out += line;  // malformed; parse_config will complain with the line number
        }
        out += "\n";
    }
    return out;
}

struct SweepField {
    const char* name;
    SweepUnit default_unit;
};

constexpr std::array<SweepField, 11> sweepable = {{
    {"delta", SweepUnit::OmegaM},
    {"Delta", SweepUnit::OmegaM},
    {"delta_c", SweepUnit::OmegaM},
    {"G", SweepUnit::Hz},
    {"Omega", SweepUnit::Hz},
    {"n_i", SweepUnit::None},
    {"gamma_c", SweepUnit::Hz},
    {"kappa", SweepUnit::Hz},
    {"g", SweepUnit::Hz},
    {"gamma", SweepUnit::Hz},
    {"gamma_m", SweepUnit::Hz},
}};

bool is_sweepable(std::string_view name) {
    return std::any_of(sweepable.begin(), sweepable.end(),
                       [name](const SweepField& f) { return name == f.name; });
}

SweepUnit parse_unit(std::string_view text) {
    for (SweepUnit u : {SweepUnit::OmegaM, SweepUnit::Hz, SweepUnit::Angular, SweepUnit::None}) {
        if (to_string(u) == text) return u;
    }
    fail(ErrorKind::InvalidConfig, "unknown sweep unit");
}

}  // namespace

std::string_view to_string(Command command) noexcept {
    switch (command) {
        case Command::Spectrum: return "spectrum";
        case Command::Cool: return "cool";
        case Command::Map: return "map";
        case Command::Entangle: return "entangle";
        case Command::Rates: return "rates";
    }
    return "rates";
}

Command parse_command(std::string_view text) {
    for (Command c : {Command::Spectrum, Command::Cool, Command::Map, Command::Entangle,
                      Command::Rates}) {
        if (to_string(c) == text) return c;
    }
    fail(ErrorKind::InvalidConfig, "unknown experiment '" + std::string(text) +
                                       "' (expected spectrum, cool, map, entangle or rates)");
}

std::string_view to_string(SweepUnit unit) noexcept {
    switch (unit) {
        case SweepUnit::OmegaM: return "omega_m";
        case SweepUnit::Hz: return "hz";
        case SweepUnit::Angular: return "angular";
        case SweepUnit::None: return "none";
    }
    return "none";
}

std::vector<double> SweepSpec::values() const { return make_grid(min, max, count, scale); }

SweepSpec default_sweep(Command command, std::string_view parameter) {
    const bool entangle = command == Command::Entangle;
    if (parameter == "delta") {
        return entangle ? SweepSpec{"delta", -3.0, -0.2, 200, GridScale::Linear, SweepUnit::OmegaM}
                        : SweepSpec{"delta", 0.2, 3.0, 200, GridScale::Log, SweepUnit::OmegaM};
    }
    if (parameter == "Omega") return {"Omega", 30e6, 3e9, 100, GridScale::Log, SweepUnit::Hz};
    if (parameter == "G") {
        return entangle ? SweepSpec{"G", 10e3, 3e6, 100, GridScale::Log, SweepUnit::Hz}
                        : SweepSpec{"G", 10e3, 400e3, 100, GridScale::Log, SweepUnit::Hz};
    }
    if (parameter == "n_i") return {"n_i", 1e3, 1e7, 100, GridScale::Log, SweepUnit::None};
    fail(ErrorKind::InvalidConfig,
         "no default grid for sweep parameter '" + std::string(parameter) + "'; give min, max and count");
}

double sweep_to_internal(const SweepSpec& sweep, double value, const SystemParams& base) {
    switch (sweep.unit) {
        case SweepUnit::OmegaM: return value * base.omega_m;
        case SweepUnit::Hz: return angular(value);
        case SweepUnit::Angular:
        case SweepUnit::None: return value;
    }
    return value;
}

SystemParams apply_sweep(const SystemParams& base, const SweepSpec& sweep, double value) {
    SystemParams p = base;
    const double v = sweep_to_internal(sweep, value, base);
    const std::string& name = sweep.parameter;
    if (name == "delta") p.delta = v;
    else if (name == "Delta") p.Delta = v;
    else if (name == "delta_c") p.delta_c = v;
    else if (name == "G") p.G = v;
    else if (name == "Omega") p.Omega = v;
    else if (name == "n_i") p.n_i = v;
    else if (name == "gamma_c") p.gamma_c = v;
    else if (name == "kappa") p.kappa = v;
    else if (name == "g") p.g = v;
    else if (name == "gamma") p.gamma = v;
    else if (name == "gamma_m") p.gamma_m = v;
    else fail(ErrorKind::InvalidConfig, "parameter '" + name + "' cannot be swept");
    return p;
}

ExperimentConfig parse_config(std::string_view raw_text, std::string_view origin) {
    const std::string text = unwrap_header(raw_text);
    const Parser parser(origin);
    auto sections = parser.split(text);
    const Section empty;
    auto section = [&](std::string_view name) -> const Section& {
        const auto it = sections.find(name);
        return it == sections.end() ? empty : it->second;
    };
    auto get = [](const Section& s, std::string_view key) -> const Entry* {
        const auto it = s.find(key);
        return it == s.end() ? nullptr : &it->second;
    };

    ExperimentConfig cfg;

    const Section& exp = section("experiment");
    if (const Entry* e = get(exp, "name")) {
        try {
            cfg.command = parse_command(e->value);
        } catch (const Error& err) {
            parser.error(e->line, "name", err.what());
        }
    }
    if (const Entry* e = get(exp, "model")) {
        try {
            cfg.tier = parse_model_tier(e->value);
            cfg.tier_set = true;
        } catch (const Error& err) {
            parser.error(e->line, "model", err.what());
        }
    }
    if (const Entry* e = get(exp, "amplitude")) {
        cfg.amplitude = parser.number(*e, "amplitude");
        if (cfg.amplitude < 0.0) parser.error(e->line, "amplitude", "must be >= 0");
    }
    if (const Entry* e = get(exp, "label")) cfg.label = e->value;

    // Parameters. omega_m and kappa are resolved first so that other values
    // may be written as multiples of them.
    const Section& ps = section("params");
    bool angular_units = false;
    if (const Entry* e = get(ps, "units")) {
        if (e->value == "angular") angular_units = true;
        else if (e->value != "hz") parser.error(e->line, "units", "expected hz or angular");
    }
    SystemParams& p = cfg.params;
    const std::size_t params_line = get(ps, "@line") ? get(ps, "@line")->line : 1;
    auto required = [&](std::string_view key) -> const Entry& {
        const Entry* e = get(ps, key);
        if (!e) parser.error(params_line, key, "required in [params]");
        return *e;
    };
    auto freq = [&](std::string_view key, std::optional<double> om, std::optional<double> ka) {
        return parser.frequency(*get(ps, key), key, angular_units, om, ka);
    };
    p.omega_m = parser.frequency(required("omega_m"), "omega_m", angular_units, std::nullopt,
                                 std::nullopt);
    p.kappa = parser.frequency(required("kappa"), "kappa", angular_units, p.omega_m, std::nullopt);
    p.gamma = parser.frequency(required("gamma"), "gamma", angular_units, p.omega_m, p.kappa);
    const std::optional<double> om = p.omega_m, ka = p.kappa;

    const Entry* gm = get(ps, "gamma_m");
    const Entry* qm = get(ps, "Q_m");
    if (gm && qm) parser.error(qm->line, "Q_m", "give either gamma_m or Q_m, not both");
    if (gm) p.gamma_m = freq("gamma_m", om, ka);
    if (qm) {
        const double q = parser.number(*qm, "Q_m");
        if (!(q > 0.0)) parser.error(qm->line, "Q_m", "must be > 0");
        p.gamma_m = damping_from_quality_factor(p.omega_m, q);
    }

    const Entry* ni = get(ps, "n_i");
    const Entry* temp = get(ps, "temperature");
    if (ni && temp) parser.error(temp->line, "temperature", "give either n_i or temperature, not both");
    if (ni) p.n_i = parser.number(*ni, "n_i");
    if (temp) {
        const double t = parser.number(*temp, "temperature");
        if (!(t > 0.0) || !(p.omega_m > 0.0)) {
            parser.error(temp->line, "temperature", "needs temperature > 0 and omega_m > 0");
        }
        cfg.temperature = t;
        p.n_i = thermal_occupancy(t, p.omega_m);
    }

    for (const char* key : {"delta_c", "G", "G0", "g", "gamma_c", "Omega", "delta"}) {
        if (get(ps, key)) {
            const double v = freq(key, om, ka);
            const std::string_view k = key;
            if (k == "delta_c") p.delta_c = v;
            else if (k == "G") p.G = v;
            else if (k == "G0") p.G0 = v;
            else if (k == "g") p.g = v;
            else if (k == "gamma_c") p.gamma_c = v;
            else if (k == "Omega") p.Omega = v;
            else p.delta = v;
        }
    }
    if (const Entry* e = get(ps, "Delta")) {
        if (e->value != "follows-delta") p.Delta = freq("Delta", om, ka);
    }
    if (const Entry* e = get(ps, "N")) {
        const double n = parser.number(*e, "N");
        if (n < 1.0 || n != std::floor(n) || n > 9e18) {
            parser.error(e->line, "N", "expected an integer >= 1");
        }
        p.N = static_cast<std::int64_t>(n);
    }
    try {
        p.validate();
    } catch (const Error& err) {
        parser.error(params_line, "", std::string("invalid parameters: ") + err.what());
    }

    // Sweep.
    if (sections.contains("sweep")) {
        const Section& sw = section("sweep");
        const Entry* par = get(sw, "parameter");
        if (!par) parser.error(get(sw, "@line")->line, "parameter", "required in [sweep]");
        if (!is_sweepable(par->value)) {
            parser.error(par->line, "parameter", "'" + par->value + "' cannot be swept");
        }
        SweepSpec spec;
        const bool explicit_grid = get(sw, "min") && get(sw, "max") && get(sw, "count");
        if (explicit_grid) {
            spec.parameter = par->value;
            spec.unit = std::find_if(sweepable.begin(), sweepable.end(), [&](const SweepField& f) {
                            return par->value == f.name;
                        })->default_unit;
        } else {
            const Command guess = cfg.command.value_or(par->value == "n_i" ? Command::Entangle
                                                                            : Command::Cool);
            try {
                spec = default_sweep(guess, par->value);
            } catch (const Error& err) {
                parser.error(par->line, "parameter", err.what());
            }
        }
        if (const Entry* e = get(sw, "min")) spec.min = parser.number(*e, "min");
        if (const Entry* e = get(sw, "max")) spec.max = parser.number(*e, "max");
        if (const Entry* e = get(sw, "count")) spec.count = parser.count(*e, "count");
        if (const Entry* e = get(sw, "scale")) {
            if (e->value == "linear") spec.scale = GridScale::Linear;
            else if (e->value == "log") spec.scale = GridScale::Log;
            else parser.error(e->line, "scale", "expected linear or log");
        }
        if (const Entry* e = get(sw, "unit")) {
            try {
                spec.unit = parse_unit(e->value);
            } catch (const Error&) {
                parser.error(e->line, "unit", "expected omega_m, hz, angular or none");
            }
        }
        const std::size_t line = par->line;
        if (spec.parameter == "n_i" && spec.unit != SweepUnit::None) {
            parser.error(line, "unit", "n_i is dimensionless; use unit = none");
        }
        if (spec.count < 2) parser.error(line, "count", "sweep needs count >= 2");
        if (!(spec.min < spec.max)) parser.error(line, "min", "sweep needs min < max");
        try {
            (void)spec.values();
        } catch (const Error& err) {
            parser.error(line, "scale", err.what());
        }
        cfg.sweep = spec;
    }

    const Section& bare = section("bare");
    if (const Entry* e = get(bare, "enabled")) cfg.bare.enabled = parser.flag(*e, "enabled");
    if (const Entry* e = get(bare, "delta_c")) {
        cfg.bare.delta_c = parser.frequency(*e, "delta_c", angular_units, om, ka);
    }

    const Section& mp = section("mapping");
    MappingSettings& m = cfg.mapping;
    if (const Entry* e = get(mp, "squeeze")) m.squeeze = parser.number(*e, "squeeze");
    if (const Entry* e = get(mp, "angle")) m.angle = parser.number(*e, "angle");
    if (const Entry* e = get(mp, "thermal")) {
        m.thermal = parser.number(*e, "thermal");
        if (m.thermal < 0.0) parser.error(e->line, "thermal", "occupancy must be >= 0");
    }
    if (const Entry* e = get(mp, "t_final")) {
        m.t_final = parser.number(*e, "t_final");
        if (!(m.t_final > 0.0)) parser.error(e->line, "t_final", "must be > 0");
    }
    if (const Entry* e = get(mp, "steps")) {
        m.steps = parser.count(*e, "steps");
        if (m.steps < 2 || m.steps % 2 != 0) parser.error(e->line, "steps", "must be even and >= 2");
    }
    if (const Entry* e = get(mp, "wigner_points")) {
        m.wigner_points = parser.count(*e, "wigner_points");
        if (m.wigner_points < 2) parser.error(e->line, "wigner_points", "must be >= 2");
    }
    if (const Entry* e = get(mp, "wigner_sigmas")) {
        m.wigner_sigmas = parser.number(*e, "wigner_sigmas");
        if (!(m.wigner_sigmas > 0.0)) parser.error(e->line, "wigner_sigmas", "must be > 0");
    }
    if (const Entry* e = get(mp, "full_crosscheck")) m.full_crosscheck = parser.flag(*e, "full_crosscheck");
    if (const Entry* e = get(mp, "full_steps")) {
        m.full_steps = parser.count(*e, "full_steps");
        if (m.full_steps < 2 || m.full_steps % 2 != 0) {
            parser.error(e->line, "full_steps", "must be even and >= 2");
        }
    }

    const Section& spc = section("spectrum");
    if (const Entry* e = get(spc, "span")) {
        cfg.spectrum.span = parser.number(*e, "span");
        if (!(cfg.spectrum.span > 0.0)) parser.error(e->line, "span", "must be > 0");
    }
    if (const Entry* e = get(spc, "points")) {
        cfg.spectrum.points = parser.count(*e, "points");
        if (cfg.spectrum.points < 3) parser.error(e->line, "points", "must be >= 3");
    }
    if (const Entry* e = get(spc, "center")) {
        cfg.spectrum.center = parser.frequency(*e, "center", angular_units, om, ka);
    }

    const Section& out = section("output");
    if (const Entry* e = get(out, "dir")) cfg.output_dir = e->value;
    if (const Entry* e = get(out, "prefix")) {
        if (e->value.find_first_of("/\\") != std::string::npos) {
            parser.error(e->line, "prefix", "must not contain path separators");
        }
        cfg.output_prefix = e->value;
    }

    if (const Entry* e = get(section("run"), "workers")) cfg.workers = parser.count(*e, "workers");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::InvalidConfig, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

std::string render_config(const ExperimentConfig& cfg) {
    const SystemParams& p = cfg.params;
    std::ostringstream os;
    os << "[experiment]\n";
    if (cfg.command) os << "name = " << to_string(*cfg.command) << "\n";
    os << "model = " << to_string(cfg.tier) << "\n";
    os << "amplitude = " << fmt(cfg.amplitude) << "\n";
    if (!cfg.label.empty()) os << "label = " << cfg.label << "\n";

    os << "\n[params]\nunits = angular\n";
    os << "omega_m = " << fmt(p.omega_m) << "\n";
    os << "gamma_m = " << fmt(p.gamma_m) << "\n";
    if (cfg.temperature) os << "# n_i from temperature = " << fmt(*cfg.temperature) << " K\n";
    os << "n_i = " << fmt(p.n_i) << "\n";
    os << "kappa = " << fmt(p.kappa) << "\n";
    os << "delta_c = " << fmt(p.delta_c) << "\n";
    os << "G = " << fmt(p.G) << "\n";
    os << "G0 = " << fmt(p.G0) << "\n";
    os << "g = " << fmt(p.g) << "\n";
    os << "N = " << p.N << "\n";
    os << "gamma = " << fmt(p.gamma) << "\n";
    os << "gamma_c = " << fmt(p.gamma_c) << "\n";
    os << "Omega = " << fmt(p.Omega) << "\n";
    os << "delta = " << fmt(p.delta) << "\n";
    os << "Delta = " << (p.Delta ? fmt(*p.Delta) : std::string("follows-delta")) << "\n";

    if (cfg.sweep) {
        const SweepSpec& s = *cfg.sweep;
        os << "\n[sweep]\nparameter = " << s.parameter << "\n";
        os << "min = " << fmt(s.min) << "\nmax = " << fmt(s.max) << "\n";
        os << "count = " << s.count << "\n";
        os << "scale = " << (s.scale == GridScale::Log ? "log" : "linear") << "\n";
        os << "unit = " << to_string(s.unit) << "\n";
    }

    if (cfg.bare.enabled || cfg.bare.delta_c) {
        os << "\n[bare]\n";
        if (cfg.bare.enabled) os << "enabled = " << (*cfg.bare.enabled ? "true" : "false") << "\n";
        if (cfg.bare.delta_c) os << "delta_c = " << fmt(*cfg.bare.delta_c) << "\n";
    }

    const MappingSettings& m = cfg.mapping;
    os << "\n[mapping]\n";
    os << "squeeze = " << fmt(m.squeeze) << "\nangle = " << fmt(m.angle) << "\n";
    os << "thermal = " << fmt(m.thermal) << "\nt_final = " << fmt(m.t_final) << "\n";
    os << "steps = " << m.steps << "\nwigner_points = " << m.wigner_points << "\n";
    os << "wigner_sigmas = " << fmt(m.wigner_sigmas) << "\n";
    os << "full_crosscheck = " << (m.full_crosscheck ? "true" : "false") << "\n";
    os << "full_steps = " << m.full_steps << "\n";

    os << "\n[spectrum]\nspan = " << fmt(cfg.spectrum.span) << "\npoints = " << cfg.spectrum.points
       << "\n";
    if (cfg.spectrum.center) os << "center = " << fmt(*cfg.spectrum.center) << "\n";

    if (!cfg.output_dir.empty() || !cfg.output_prefix.empty()) {
        os << "\n[output]\n";
        if (!cfg.output_dir.empty()) os << "dir = " << cfg.output_dir << "\n";
        if (!cfg.output_prefix.empty()) os << "prefix = " << cfg.output_prefix << "\n";
    }
    if (cfg.workers) os << "\n[run]\nworkers = " << cfg.workers << "\n";
    return os.str();
}

}  // namespace eitmech::app
