#include "idealcalc/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "idealcalc/errors.hpp"
#include "idealcalc/spaces.hpp"

namespace idealcalc {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const std::string& text, const std::string& where) {
    long long value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ConfigError(where + ": expected an integer, got '" + text + "'");
    return value;
}

double parse_number(const std::string& text, const std::string& where) {
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ConfigError(where + ": expected a number, got '" + text + "'");
    return value;
}

void validate_suite(const SuiteConfig& s) {
    const auto& names = known_suites();
    if (std::find(names.begin(), names.end(), s.name) == names.end())
        throw ConfigError("unknown suite '" + s.name + "'");
    for (const char* key : {"n", "samples", "restarts", "steps", "probes"}) {
        const auto it = s.params.find(key);
        if (it == s.params.end()) continue;
        if (parse_int(it->second, "suite " + s.name + " " + key) < 1)
            throw ConfigError("suite " + s.name + ": " + key + " must be >= 1");
    }
    if (const auto it = s.params.find("seed"); it != s.params.end())
        parse_int(it->second, "suite " + s.name + " seed");
    // Space lists must parse up front so failures blame the config line.
    for (const char* key : {"space", "spaces"}) {
        const auto it = s.params.find(key);
        if (it == s.params.end()) continue;
        std::string rest = it->second;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            try {
                SpaceSpec::parse(rest.substr(0, comma));
            } catch (const std::exception& err) {
                throw ConfigError("suite " + s.name + " " + key + ": " + err.what());
            }
            rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
        }
    }
}

}  // namespace

int SuiteConfig::get_int(const std::string& key, int fallback) const {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    return static_cast<int>(parse_int(it->second, "suite " + name + " " + key));
}

double SuiteConfig::get_double(const std::string& key, double fallback) const {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    return parse_number(it->second, "suite " + name + " " + key);
}

std::string SuiteConfig::get(const std::string& key, const std::string& fallback) const {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const std::string where = "config line " + std::to_string(line_no);

        if (line.rfind("suite", 0) == 0 && (line.size() == 5 || line[5] == ' ' || line[5] == '\t')) {
            const auto tokens = split_ws(line.substr(5));
            if (tokens.empty()) throw ConfigError(where + ": suite needs a name");
            SuiteConfig suite;
            suite.name = tokens[0];
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const auto eq = tokens[i].find('=');
                if (eq == std::string::npos || eq == 0 || eq + 1 == tokens[i].size())
                    throw ConfigError(where + ": expected key=value, got '" + tokens[i] + "'");
                suite.params[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
            }
            try {
                validate_suite(suite);
            } catch (const ConfigError& err) {
                throw ConfigError(where + ": " + err.what());
            }
            cfg.suites.push_back(std::move(suite));
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected 'key = value' or 'suite <name> ...'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "seed") {
            const long long v = parse_int(value, where);
            if (v < 0) throw ConfigError(where + ": seed must be nonnegative");
            cfg.seed = static_cast<std::uint64_t>(v);
        } else if (key == "out") {
            cfg.out = value;
        } else if (key == "format") {
            if (value != "csv" && value != "json")
                throw ConfigError(where + ": format must be csv or json");
            cfg.format = value;
        } else {
            throw ConfigError(where + ": unknown setting '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

ExperimentConfig default_config() {
    ExperimentConfig cfg;
    cfg.seed = 7;
    const char* lines[] = {
        "suite rearrangement n=16 samples=100",
        "suite quasi-norm-axioms n=8 samples=200",
        "suite sv-inequalities n=8 samples=200",
        "suite calkin-roundtrip n=8 samples=100",
        "suite holder-duality samples=20",
        "suite lorentz-marcinkiewicz-duality samples=20",
        "suite multiplier-sandwich samples=50",
        "suite derivation-sandwich samples=50",
        "suite zsido-bound n=6 samples=50",
        "suite generator-recovery n=8 samples=50 probes=50",
    };
    std::string text;
    for (const char* l : lines) {
        text += l;
        text += '\n';
    }
    ExperimentConfig parsed = parse_config(text);
    parsed.seed = cfg.seed;
    return parsed;
}

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> names = {
        "rearrangement",
        "quasi-norm-axioms",
        "sv-inequalities",
        "calkin-roundtrip",
        "holder-duality",
        "lorentz-marcinkiewicz-duality",
        "multiplier-sandwich",
        "derivation-sandwich",
        "zsido-bound",
        "generator-recovery",
    };
    return names;
}

}  // namespace idealcalc
