#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "alpharoot/params.hpp"

namespace alpharoot {

inline constexpr const char* kVersion = "alpharoot 1.0.0";

// Flat key=value run description. The store is canonical (sorted, trimmed),
// so serialize(parse(text)) is idempotent and two runs with equal configs
// emit byte-identical headers. Unknown keys are rejected at entry.
struct RunConfig {
    std::map<std::string, std::string> kv;

    static const std::map<std::string, std::string>& known_keys();  // key -> doc
    static RunConfig parse_text(const std::string& text);
    static RunConfig load_file(const std::string& path);
    std::string serialize() const;   // "key=value\n" in sorted key order

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const { return kv.count(key) != 0; }
    std::string get(const std::string& key, const std::string& fallback = "") const;

    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_list(const std::string& key) const;        // "a,b,c"
    std::array<double, 2> get_pair(const std::string& key) const;      // "y,x"

    struct GridSpec {
        double lo = 0.0, hi = 0.0;
        std::int64_t n = 0;
        std::vector<double> points() const;
    };
    GridSpec get_grid(const std::string& key, const std::string& fallback) const;  // "lo:hi:n"

    std::string command() const { return get("command"); }
    ModelParams params() const;
    QuadratureConfig quadrature() const;
};

// Angles accept radians ("1.5707...") or pi fractions ("pi/2", "3pi/4", "-pi").
double parse_angle(const std::string& text);

// Every rule violation in the config, as human-readable strings; empty means
// runnable. Never throws on semantic problems (malformed values are reported,
// not raised); unknown keys cannot occur in a constructed RunConfig.
std::vector<std::string> validate_config(const RunConfig& cfg);

}  // namespace alpharoot
