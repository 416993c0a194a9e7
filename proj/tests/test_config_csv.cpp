#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "alpharoot/complex_power.hpp"
#include "alpharoot/config.hpp"
#include "alpharoot/csv.hpp"
#include "doctest.h"

using alpharoot::RunConfig;
using alpharoot::validation_error;

namespace {

bool contains(const std::vector<std::string>& msgs, const std::string& needle) {
    for (const auto& m : msgs)
        if (m.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("parse and serialize are idempotent") {
    const std::string text =
        "# a comment\n"
        "\n"
        "command=density\n"
        "  alpha = 1.7  \n"
        "grid=0:10:64\n";
    const RunConfig cfg = RunConfig::parse_text(text);
    CHECK(cfg.get("alpha") == "1.7");
    const std::string canonical = cfg.serialize();
    const RunConfig round = RunConfig::parse_text(canonical);
    CHECK(round.serialize() == canonical);
    // sorted key order
    CHECK(canonical == "alpha=1.7\ncommand=density\ngrid=0:10:64\n");
}

TEST_CASE("unknown, duplicate and malformed entries are rejected") {
    CHECK_THROWS_AS(RunConfig::parse_text("command=density\nfoo=1\n"),
                    validation_error);
    CHECK_THROWS_AS(RunConfig::parse_text("a=1\na=2\n"), validation_error);
    CHECK_THROWS_AS(RunConfig::parse_text("command density\n"), validation_error);
    RunConfig cfg;
    CHECK_THROWS_AS(cfg.set("not_a_key", "1"), validation_error);
}

TEST_CASE("typed getters parse and validate") {
    RunConfig cfg;
    cfg.set("a", "2.5");
    cfg.set("n_paths", "500");
    cfg.set("seed", "18446744073709551615");
    cfg.set("check", "false");
    cfg.set("lambda", "0.5, 1, 2");
    cfg.set("init_a", "1.5,-2");
    CHECK(cfg.get_double("a", 0.0) == 2.5);
    CHECK(cfg.get_double("b", 7.0) == 7.0);   // fallback
    CHECK(cfg.get_int("n_paths", 0) == 500);
    CHECK(cfg.get_uint("seed", 0) == 18446744073709551615ull);
    CHECK(cfg.get_bool("check", true) == false);
    const auto lam = cfg.get_list("lambda");
    REQUIRE(lam.size() == 3);
    CHECK(lam[0] == 0.5);
    CHECK(lam[2] == 2.0);
    const auto init = cfg.get_pair("init_a");
    CHECK(init[0] == 1.5);
    CHECK(init[1] == -2.0);

    cfg.set("b", "abc");
    CHECK_THROWS_AS(cfg.get_double("b", 0.0), validation_error);
    cfg.set("n_paths", "12.5");
    CHECK_THROWS_AS(cfg.get_int("n_paths", 0), validation_error);
    cfg.set("seed", "-1");
    CHECK_THROWS_AS(cfg.get_uint("seed", 0), validation_error);
    cfg.set("check", "maybe");
    CHECK_THROWS_AS(cfg.get_bool("check", true), validation_error);
    cfg.set("init_a", "1,2,3");
    CHECK_THROWS_AS(cfg.get_pair("init_a"), validation_error);
}

TEST_CASE("grid specifications") {
    RunConfig cfg;
    cfg.set("grid", "0:20:512");
    const auto g = cfg.get_grid("grid", "0:1:2");
    CHECK(g.lo == 0.0);
    CHECK(g.hi == 20.0);
    CHECK(g.n == 512);
    const auto pts = g.points();
    REQUIRE(pts.size() == 512);
    CHECK(pts.front() == 0.0);
    CHECK(pts.back() == 20.0);
    CHECK(pts[1] > pts[0]);

    const auto fallback = cfg.get_grid("x", "1:3:5");   // key absent
    CHECK(fallback.n == 5);
    CHECK(fallback.points()[2] == 2.0);

    cfg.set("grid", "0:20");
    CHECK_THROWS_AS(cfg.get_grid("grid", ""), validation_error);
    cfg.set("grid", "0:20:abc");
    CHECK_THROWS_AS(cfg.get_grid("grid", ""), validation_error);
}

TEST_CASE("angles accept radians and pi fractions") {
    CHECK(alpharoot::parse_angle("1.25") == 1.25);
    CHECK(alpharoot::parse_angle("pi") == doctest::Approx(alpharoot::pi()));
    CHECK(alpharoot::parse_angle("pi/2") == doctest::Approx(alpharoot::pi() / 2.0));
    CHECK(alpharoot::parse_angle("3pi/4") ==
          doctest::Approx(3.0 * alpharoot::pi() / 4.0));
    CHECK(alpharoot::parse_angle("-pi") == doctest::Approx(-alpharoot::pi()));
    CHECK(alpharoot::parse_angle(" 2 pi / 3 ") ==
          doctest::Approx(2.0 * alpharoot::pi() / 3.0));
    CHECK_THROWS_AS(alpharoot::parse_angle("abc"), validation_error);
    CHECK_THROWS_AS(alpharoot::parse_angle("pi/0"), validation_error);
    CHECK_THROWS_AS(alpharoot::parse_angle("2pi3"), validation_error);
}

TEST_CASE("semantic validation reports every violation") {
    RunConfig cfg;
    CHECK(contains(alpharoot::validate_config(cfg), "command is required"));

    cfg.set("command", "transmogrify");
    CHECK(contains(alpharoot::validate_config(cfg), "unknown command"));

    cfg.set("command", "density");
    cfg.set("alpha", "2.0");
    CHECK(contains(alpharoot::validate_config(cfg),
                   "alpha must lie in open interval (1,2)"));

    cfg.set("alpha", "1.5");
    cfg.set("a", "0");
    CHECK(contains(alpharoot::validate_config(cfg), "density requires a > 0"));

    cfg.set("command", "tv-decay");
    cfg.set("theta", "0");
    CHECK(contains(alpharoot::validate_config(cfg),
                   "ergodicity analysis requires theta > 0"));

    cfg.set("command", "simulate");
    cfg.set("mode", "verbose");
    CHECK(contains(alpharoot::validate_config(cfg), "mode must be summary|paths"));

    cfg.set("command", "bounds-check");
    cfg.set("angle", "0.3");
    CHECK(contains(alpharoot::validate_config(cfg),
                   "pi/2 - 0.01 <= |angle| <= pi"));

    RunConfig multi;
    multi.set("command", "density");
    multi.set("b", "-1");
    multi.set("dt", "0");
    const auto msgs = alpharoot::validate_config(multi);
    CHECK(contains(msgs, "b must be > 0"));
    CHECK(contains(msgs, "dt must be > 0"));
}

TEST_CASE("well-formed configs validate cleanly") {
    RunConfig cfg;
    cfg.set("command", "density");
    cfg.set("alpha", "1.5");
    cfg.set("grid", "0:20:512");
    CHECK(alpharoot::validate_config(cfg).empty());
    cfg.set("command", "tv-decay");
    cfg.set("ts", "0.5,1,2");
    CHECK(alpharoot::validate_config(cfg).empty());
}

TEST_CASE("numeric formatting round-trips exactly") {
    for (double v : {0.1, 1.0 / 3.0, 1e-20, 12345.6789, 2.5e300, -0.0, 20.0}) {
        const std::string s = alpharoot::format_double(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(alpharoot::format_int(-42) == "-42");
    CHECK(alpharoot::format_int(0) == "0");
    CHECK(alpharoot::format_double(0.5) == "0.5");
}

TEST_CASE("csv files are written verbatim") {
    const std::string path = "test_csv_roundtrip.csv";
    {
        alpharoot::CsvWriter w(path);
        w.comment("alpha=1.5");
        w.header({"x", "f"});
        w.row(std::vector<double>{0.5, 1.25});
        w.row({"0.75", "ok"});
        w.close();
    }
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "# alpha=1.5\nx,f\n0.5,1.25\n0.75,ok\n");
    std::remove(path.c_str());
}

TEST_CASE("unwritable paths fail loudly") {
    CHECK_THROWS_AS(alpharoot::CsvWriter("/nonexistent_dir_xyz/out.csv"),
                    alpharoot::io_error);
    CHECK_THROWS_AS(RunConfig::load_file("/nonexistent_dir_xyz/in.cfg"),
                    alpharoot::io_error);
}
