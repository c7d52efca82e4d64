#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace idealcalc {

// One suite request: a registered suite name plus key=value overrides.
// Unknown names and malformed values are rejected at parse time.
struct SuiteConfig {
    std::string name;
    std::map<std::string, std::string> params;

    // Typed access with defaults; throws ConfigError on bad values.
    int get_int(const std::string& key, int fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::string get(const std::string& key, const std::string& fallback) const;
};

struct ExperimentConfig {
    std::uint64_t seed = 7;
    std::string out;              // empty: report goes to stdout
    std::string format = "csv";  // csv or json
    std::vector<SuiteConfig> suites;
};

// Line format: `key = value` for top level settings (seed, out, format),
// `suite <name> key=value ...` per suite, `#` comments, blank lines ignored.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// Every built-in suite with its standard sample counts.
ExperimentConfig default_config();

const std::vector<std::string>& known_suites();

}  // namespace idealcalc
