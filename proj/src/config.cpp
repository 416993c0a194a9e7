#include "alpharoot/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "alpharoot/complex_power.hpp"
#include "alpharoot/csv.hpp"

namespace alpharoot {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw validation_error("key '" + key + "' has a malformed number: '" + value + "'");
    }
}

}  // namespace

const std::map<std::string, std::string>& RunConfig::known_keys() {
    static const std::map<std::string, std::string> keys = {
        {"command", "one of laplace|density|cdf|simulate|lyapunov-check|tv-decay|bounds-check"},
        {"a", "inflow rate a >= 0 (default 1)"},
        {"b", "mean-reversion rate of y, b > 0 (default 1)"},
        {"alpha", "stability index in (1,2) (default 1.5)"},
        {"m", "drift level of x (default 0)"},
        {"theta", "mean-reversion rate of x (default 1)"},
        {"abs_tol", "quadrature absolute tolerance (default 1e-10)"},
        {"rel_tol", "quadrature relative tolerance (default 1e-8)"},
        {"max_subdivisions", "adaptive quadrature panel budget (default 400)"},
        {"xi_truncation", "transform-integral cutoff; 0 = automatic (default 0)"},
        {"t", "evaluation time (default 1)"},
        {"horizon", "simulation end time (default 1)"},
        {"dt", "Euler step (default 1e-3)"},
        {"n_paths", "Monte Carlo sample size (default 10000)"},
        {"seed", "64-bit RNG seed (default 12345; env ALPHAROOT_SEED overrides)"},
        {"n_threads", "worker threads; 0 = hardware (default 0)"},
        {"y0", "initial y >= 0 (default 1)"},
        {"x0", "initial x (default 0)"},
        {"x", "single evaluation abscissa (cdf)"},
        {"lambda", "comma-separated Laplace arguments (default 0.5,1,2)"},
        {"grid", "abscissa grid lo:hi:n (default 0:20:512)"},
        {"representation", "density route: fourier|real_axis (default fourier)"},
        {"ts", "comma-separated report times (default 0.5,1,2,4,8)"},
        {"init_a", "first initial point y,x (default 0,0)"},
        {"init_b", "second initial point y,x (default 10,10)"},
        {"bins_refine", "histogram refinement factor (default 1)"},
        {"threshold", "atom detection threshold (default 1e-6)"},
        {"angle", "ray angle, radians or pi fraction (default pi/2)"},
        {"rho_min", "smallest ray radius, >= 2"},
        {"rho_max", "largest ray radius"},
        {"rho_count", "number of geometric ray radii"},
        {"mode", "simulate output: summary|paths (default summary)"},
        {"n_slices", "summary time slices (default 100)"},
        {"check", "exit nonzero when the run's acceptance condition fails (default true)"},
        {"out", "output CSV path (default <command>.csv)"},
    };
    return keys;
}

RunConfig RunConfig::parse_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw validation_error("config line " + std::to_string(lineno) +
                                   " is not key=value: '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (cfg.kv.count(key))
            throw validation_error("duplicate config key '" + key + "'");
        cfg.set(key, value);
    }
    return cfg;
}

RunConfig RunConfig::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

std::string RunConfig::serialize() const {
    std::string out;
    for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
    return out;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    if (!known_keys().count(key))
        throw validation_error("unknown config key '" + key + "'");
    kv[key] = value;
}

std::string RunConfig::get(const std::string& key, const std::string& fallback) const {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
}

double RunConfig::get_double(const std::string& key, double fallback) const {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : parse_double(key, it->second);
}

std::int64_t RunConfig::get_int(const std::string& key, std::int64_t fallback) const {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    std::int64_t v = 0;
    const char* first = it->second.data();
    const char* last = first + it->second.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw validation_error("key '" + key + "' has a malformed integer: '" +
                               it->second + "'");
    return v;
}

std::uint64_t RunConfig::get_uint(const std::string& key, std::uint64_t fallback) const {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    std::uint64_t v = 0;
    const char* first = it->second.data();
    const char* last = first + it->second.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw validation_error("key '" + key + "' has a malformed unsigned integer: '" +
                               it->second + "'");
    return v;
}

bool RunConfig::get_bool(const std::string& key, bool fallback) const {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw validation_error("key '" + key + "' must be true|false: '" + it->second + "'");
}

std::vector<double> RunConfig::get_list(const std::string& key) const {
    std::vector<double> out;
    const std::string raw = get(key);
    std::size_t start = 0;
    while (start <= raw.size() && !raw.empty()) {
        const std::size_t comma = raw.find(',', start);
        const std::string item =
            raw.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_double(key, trim(item)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::array<double, 2> RunConfig::get_pair(const std::string& key) const {
    const std::vector<double> items = get_list(key);
    if (items.size() != 2)
        throw validation_error("key '" + key + "' must be a pair y,x: '" + get(key) + "'");
    return {items[0], items[1]};
}

std::vector<double> RunConfig::GridSpec::points() const {
    std::vector<double> xs(n);
    for (std::int64_t i = 0; i < n; ++i)
        xs[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return xs;
}

RunConfig::GridSpec RunConfig::get_grid(const std::string& key,
                                        const std::string& fallback) const {
    const std::string raw = get(key, fallback);
    const std::size_t c1 = raw.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : raw.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw validation_error("key '" + key + "' must be lo:hi:n: '" + raw + "'");
    GridSpec g;
    g.lo = parse_double(key, trim(raw.substr(0, c1)));
    g.hi = parse_double(key, trim(raw.substr(c1 + 1, c2 - c1 - 1)));
    const std::string n_str = trim(raw.substr(c2 + 1));
    std::int64_t n = 0;
    const auto res = std::from_chars(n_str.data(), n_str.data() + n_str.size(), n);
    if (res.ec != std::errc{} || res.ptr != n_str.data() + n_str.size())
        throw validation_error("key '" + key + "' has a malformed point count: '" + raw + "'");
    g.n = n;
    return g;
}

ModelParams RunConfig::params() const {
    ModelParams p;
    p.a = get_double("a", 1.0);
    p.b = get_double("b", 1.0);
    p.alpha = get_double("alpha", 1.5);
    p.m = get_double("m", 0.0);
    p.theta = get_double("theta", 1.0);
    return p;
}

QuadratureConfig RunConfig::quadrature() const {
    QuadratureConfig q;
    q.abs_tol = get_double("abs_tol", 1e-10);
    q.rel_tol = get_double("rel_tol", 1e-8);
    q.max_subdivisions = static_cast<int>(get_int("max_subdivisions", 400));
    q.xi_truncation = get_double("xi_truncation", 0.0);
    return q;
}

double parse_angle(const std::string& text) {
    const std::string s = trim(text);
    const std::size_t p = s.find("pi");
    if (p == std::string::npos) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw validation_error("malformed angle: '" + text + "'");
        }
    }
    std::string head = trim(s.substr(0, p));
    std::string tail = trim(s.substr(p + 2));
    double sign = 1.0;
    if (!head.empty() && head[0] == '-') {
        sign = -1.0;
        head = trim(head.substr(1));
    }
    double num = 1.0, den = 1.0;
    try {
        if (!head.empty()) num = std::stod(head);
        if (!tail.empty()) {
            if (tail[0] != '/') throw std::invalid_argument("expected /");
            den = std::stod(trim(tail.substr(1)));
        }
    } catch (const std::exception&) {
        throw validation_error("malformed angle: '" + text + "'");
    }
    if (den == 0.0) throw validation_error("malformed angle (zero denominator): '" + text + "'");
    return sign * num * pi() / den;
}

namespace {

const std::vector<std::string>& commands() {
    static const std::vector<std::string> c = {"laplace",        "density",  "cdf",
                                               "simulate",       "lyapunov-check",
                                               "tv-decay",       "bounds-check"};
    return c;
}

}  // namespace

std::vector<std::string> validate_config(const RunConfig& cfg) {
    std::vector<std::string> out;
    auto complain = [&](const std::string& msg) { out.push_back(msg); };

    const std::string cmd = cfg.command();
    if (cmd.empty()) {
        complain("command is required");
        return out;
    }
    if (std::find(commands().begin(), commands().end(), cmd) == commands().end()) {
        complain("unknown command '" + cmd + "'");
        return out;
    }

    // Numeric well-formedness first: collect instead of throwing.
    auto checked = [&](auto&& fn) -> bool {
        try {
            fn();
            return true;
        } catch (const validation_error& e) {
            complain(e.what());
            return false;
        }
    };

    ModelParams p;
    bool p_ok = checked([&] { p = cfg.params(); });
    if (p_ok) {
        if (!(p.alpha > 1.0) || !(p.alpha < 2.0))
            complain("alpha must lie in open interval (1,2)");
        if (!(p.b > 0.0)) complain("b must be > 0");
        if (!(p.a >= 0.0)) complain("a must be >= 0");
    }
    checked([&] {
        QuadratureConfig q = cfg.quadrature();
        if (!(q.abs_tol > 0.0)) complain("abs_tol must be > 0");
        if (!(q.rel_tol >= 0.0)) complain("rel_tol must be >= 0");
        if (q.max_subdivisions < 1) complain("max_subdivisions must be >= 1");
        if (!(q.xi_truncation >= 0.0)) complain("xi_truncation must be >= 0");
    });

    checked([&] {
        if (!(cfg.get_double("dt", 1e-3) > 0.0)) complain("dt must be > 0");
    });
    checked([&] {
        if (cfg.get_int("n_paths", 10000) < 1) complain("n_paths must be >= 1");
    });
    checked([&] {
        if (!(cfg.get_double("y0", 1.0) >= 0.0)) complain("y0 must be >= 0");
    });
    checked([&] { cfg.get_uint("seed", 12345); });
    checked([&] {
        if (cfg.get_int("n_threads", 0) < 0) complain("n_threads must be >= 0");
    });

    const bool needs_density = (cmd == "density" || cmd == "cdf");
    if (p_ok && needs_density && !(p.a > 0.0)) complain("density requires a > 0");
    if (p_ok && (cmd == "lyapunov-check" || cmd == "tv-decay") && !(p.theta > 0.0))
        complain("ergodicity analysis requires theta > 0");

    if (cmd == "laplace") {
        checked([&] {
            if (!(cfg.get_double("t", 1.0) >= 0.0)) complain("t must be >= 0");
        });
        checked([&] {
            if (!cfg.has("lambda")) return;
            for (double l : cfg.get_list("lambda"))
                if (!(l >= 0.0)) complain("lambda values must be >= 0");
        });
    }
    if (needs_density || cmd == "lyapunov-check" || cmd == "bounds-check") {
        checked([&] {
            if (!(cfg.get_double("t", 1.0) > 0.0)) complain("t must be > 0");
        });
    }
    if (cmd == "density" || cmd == "cdf") {
        bool grid_ok = false;
        RunConfig::GridSpec g;
        grid_ok = checked([&] { g = cfg.get_grid("grid", "0:20:512"); });
        if (grid_ok) {
            if (!(g.lo >= 0.0)) complain("grid must start at lo >= 0");
            if (!(g.hi > g.lo)) complain("grid needs hi > lo");
            if (g.n < 2) complain("grid needs at least 2 points");
        }
        const std::string rep = cfg.get("representation", "fourier");
        if (rep != "fourier" && rep != "real_axis")
            complain("representation must be fourier|real_axis");
        if (cmd == "density" && rep == "real_axis") {
            checked([&] {
                if (cfg.get_double("y0", 1.0) != 0.0)
                    complain("real_axis representation is only valid for y0 = 0");
            });
            if (grid_ok && !(g.lo > 0.0))
                complain("real_axis representation requires grid lo > 0");
        }
        if (cmd == "cdf" && cfg.has("x")) checked([&] {
                if (!(cfg.get_double("x", 0.0) >= 0.0)) complain("x must be >= 0");
            });
    }
    if (cmd == "simulate") {
        checked([&] {
            if (!(cfg.get_double("horizon", 1.0) > 0.0)) complain("horizon must be > 0");
        });
        const std::string mode = cfg.get("mode", "summary");
        if (mode != "summary" && mode != "paths") complain("mode must be summary|paths");
        checked([&] {
            if (cfg.get_int("n_slices", 100) < 1) complain("n_slices must be >= 1");
        });
    }
    if (cmd == "lyapunov-check") {
        checked([&] { cfg.get_pair("init_a"); });
    }
    if (cmd == "tv-decay") {
        checked([&] {
            const std::vector<double> ts =
                cfg.has("ts") ? cfg.get_list("ts") : std::vector<double>{0.5, 1, 2, 4, 8};
            if (ts.empty()) complain("ts must contain at least one time");
            for (std::size_t i = 0; i < ts.size(); ++i) {
                if (!(ts[i] > 0.0)) {
                    complain("ts values must be > 0");
                    break;
                }
                if (i > 0 && !(ts[i] > ts[i - 1])) {
                    complain("ts must be strictly increasing");
                    break;
                }
            }
        });
        for (const char* key : {"init_a", "init_b"})
            checked([&] {
                if (cfg.has(key) && !(cfg.get_pair(key)[0] >= 0.0))
                    complain(std::string(key) + " must have y >= 0");
            });
        checked([&] {
            if (!(cfg.get_double("bins_refine", 1.0) > 0.0))
                complain("bins_refine must be > 0");
        });
    }
    if (cmd == "bounds-check") {
        double angle = 0.5 * pi();
        bool angle_ok = checked([&] { angle = parse_angle(cfg.get("angle", "pi/2")); });
        if (angle_ok) {
            const double mag = std::abs(angle);
            if (!(mag >= 0.5 * pi() - 0.01) || !(mag <= pi() + 1e-12))
                complain("angle must satisfy pi/2 - 0.01 <= |angle| <= pi");
        }
        checked([&] {
            if (cfg.has("rho_min") && !(cfg.get_double("rho_min", 2.0) >= 2.0))
                complain("rho_min must be >= 2");
            if (cfg.has("rho_max") &&
                !(cfg.get_double("rho_max", 4.0) > cfg.get_double("rho_min", 2.0)))
                complain("rho_max must exceed rho_min");
            if (cfg.has("rho_count") && cfg.get_int("rho_count", 9) < 2)
                complain("rho_count must be >= 2");
        });
    }
    return out;
}

}  // namespace alpharoot
