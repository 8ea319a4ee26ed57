#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exspec/report.hpp"
#include "support.hpp"

using exspec::Rational;
using exspec::io::Command;
using exspec::io::Options;
using exspec::io::ordered_json;

namespace {
exspec::io::CommandResult run(Command cmd, const char* doc_text) {
    ordered_json doc = ordered_json::parse(doc_text);
    auto req = exspec::io::parse_request(cmd, doc);
    return exspec::io::run_command(req, Options{});
}
} // namespace

TEST_CASE("analyze report matches the worked example") {
    auto res = run(Command::Analyze, R"({"poly": ["-2", "5", "-4", "1"]})");
    const auto& j = res.report;
    CHECK(res.exit_code == 0);
    CHECK(j["m"] == 2);
    CHECK(j["valid_real"] == true);
    CHECK(j["dets"] == ordered_json::array({"3", "2", "0"}));
    CHECK(j["min_poly"] == ordered_json::array({"2", "-3", "1"}));
    CHECK(j["spectrum"][0]["q"] == 2);
    CHECK(j["spectrum"][0]["n"] == 1);
    CHECK(j["spectrum"][1]["q"] == 1);
    CHECK(j["spectrum"][1]["n"] == 1);
    CHECK(j["signature"] == ordered_json::array({2, 1}));
}

TEST_CASE("gap report on the exact two-root case") {
    auto res = run(Command::Gap, R"({"poly": ["-2", "5", "-4", "1"]})");
    CHECK(res.exit_code == 0);
    CHECK(res.report["converged"] == true);
    CHECK(res.report["iterations"] == 1);
    CHECK(res.report["mu"] == "1");
}

TEST_CASE("rates report carries the paper constants") {
    auto res = run(Command::Rates, R"({"m": 3})");
    CHECK(res.report["B"] == "1/6");
    CHECK(res.report["A"] == "4/9");
    CHECK(res.report["one_minus_A"] == "5/9");
}

TEST_CASE("matrix input: 1x1 and a complex Pauli-like pair") {
    auto res = run(Command::MinPoly, R"({"matrix": [[["1", "0"]]]})");
    CHECK(res.report["min_poly"] == ordered_json::array({"-1", "1"}));

    auto res2 = run(Command::Analyze,
                    R"({"matrix": [[["0","0"],["0","1"]],[["0","-1"],["0","0"]]]})");
    CHECK(res2.report["m"] == 2);
    CHECK(res2.report["signature"] == ordered_json::array({1, 1}));
}

TEST_CASE("moment input round-trips through the charpoly") {
    auto res = run(Command::MinPoly, R"({"moments": ["3", "4", "6", "10"]})");
    CHECK(res.report["m"] == 2);
    CHECK(res.report["min_poly"] == ordered_json::array({"2", "-3", "1"}));
    // inconsistent tail is rejected
    CHECK_THROWS_AS(run(Command::MinPoly, R"({"moments": ["3", "4", "6", "10", "0"]})"),
                    exspec::Error);
}

TEST_CASE("non-monic polynomials normalize with a warning") {
    auto res = run(Command::MinPoly, R"({"poly": ["-4", "10", "-8", "2"]})");
    CHECK(res.report["min_poly"] == ordered_json::array({"2", "-3", "1"}));
    REQUIRE(res.report.contains("warnings"));
    CHECK(res.report["warnings"].size() == 1);
}

TEST_CASE("count command needs an interval and rejects complex input downstream") {
    auto res = run(Command::Count, R"({"poly": ["-2", "5", "-4", "1"], "interval": ["0", "3"]})");
    CHECK(res.report["count"] == 2);
    CHECK_THROWS_AS(run(Command::Count, R"({"poly": ["-2", "5", "-4", "1"]})"), exspec::Error);
    CHECK_THROWS_AS(run(Command::Gap, R"({"poly": ["1", "0", "1"]})"), exspec::Error);
}

TEST_CASE("analyze surfaces a broken ladder instead of failing") {
    auto res = run(Command::Analyze, R"({"poly": ["1", "0", "1"]})");
    CHECK(res.report["valid_real"] == false);
    CHECK(res.report["invalid_at"] == 2);
    CHECK_FALSE(res.report.contains("min_poly"));
}

TEST_CASE("compare verdicts") {
    auto res = run(Command::Compare, R"({
        "first":  {"poly": ["-2", "5", "-4", "1"]},
        "second": {"poly": ["-225", "115", "-19", "1"]}
    })");
    // (x-1)^2(x-2) vs (x-5)^2(x-9): same class [2,1], different orbits
    CHECK(res.report["same_orbit"] == false);
    CHECK(res.report["same_class"] == true);
    CHECK(res.report["first"]["signature"] == ordered_json::array({2, 1}));
    CHECK(res.report["second"]["signature"] == ordered_json::array({2, 1}));

    auto res2 = run(Command::Compare, R"({
        "first":  {"poly": ["-2", "5", "-4", "1"]},
        "second": {"moments": ["3", "4", "6", "10"]}
    })");
    CHECK(res2.report["same_orbit"] == true);
    CHECK(res2.report["same_class"] == true);
}

TEST_CASE("reports are deterministic and re-parseable") {
    const char* doc = R"({"poly": ["-6", "11", "-6", "1"]})";
    for (Command cmd : {Command::Analyze, Command::Factor, Command::Gap, Command::Bounds,
                        Command::Classify}) {
        auto a = run(cmd, doc);
        auto b = run(cmd, doc);
        CHECK(a.report.dump(2) == b.report.dump(2));
        ordered_json reparsed = ordered_json::parse(a.report.dump(2));
        CHECK(reparsed == a.report);
        CHECK_FALSE(exspec::io::render_text(a.report).empty());
    }
}

TEST_CASE("parse errors carry the invalid-input kind") {
    try {
        run(Command::Analyze, R"({"poly": ["1"], "matrix": []})");
        FAIL("expected an error");
    } catch (const exspec::Error& e) {
        CHECK(e.kind() == exspec::ErrorKind::InvalidInput);
        CHECK(e.name() == "ParseError");
    }
    CHECK_THROWS_AS(run(Command::Analyze, R"({"matrix": [[["0","1"]],[["1","0"]]]})"),
                    exspec::Error); // ragged matrix
    CHECK_THROWS_AS(run(Command::Analyze, R"({"matrix": [[["0","1"],["1","0"]],[["1","0"],["0","0"]]]})"),
                    exspec::Error); // not Hermitian
    CHECK_THROWS_AS(run(Command::Rates, R"({"m": 2})"), exspec::Error);
}
