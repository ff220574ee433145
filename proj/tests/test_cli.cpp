#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "madhava/accel.hpp"
#include "madhava/cli.hpp"
#include "madhava/rational.hpp"
#include "madhava/report.hpp"
#include "madhava/verify.hpp"

using namespace madhava;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("compute prints the approximation first") {
    auto r = run({"compute", "--method", "series-c", "--n", "2", "--digits", "13"});
    CHECK(r.code == exit_code::success);
    CHECK(first_line(r.out) == "3.1414634146341");

    CHECK(first_line(run({"compute", "--method", "corrected", "--n", "1", "--cf-order", "1", "--digits", "1"}).out) ==
          "3.0");
    CHECK(first_line(run({"compute", "--method", "brouncker", "--n", "2", "--digits", "1"}).out) == "3.2");
    CHECK(first_line(run({"compute", "--method", "raw", "--n", "2", "--digits", "4"}).out) == "2.6666");
    CHECK(first_line(run({"compute", "--method", "raw", "--n", "2", "--digits", "4", "--rounding", "half-even"}).out) ==
          "2.6667");
    CHECK(first_line(run({"compute", "--method", "aitken", "--n", "3", "--digits", "5"}).out) == "3.16666");
    CHECK(first_line(run({"compute", "--method", "aitken-iter", "--n", "5", "--rounds", "2", "--digits", "3"}).out)
              .starts_with("3.14"));
    CHECK(first_line(run({"compute", "--method", "averaged", "--n", "71", "--digits", "12"}).out) == "3.141592653589");
}

TEST_CASE("compute plain output carries a bound and a digit count") {
    const auto out = lines(run({"compute", "--method", "series-c", "--n", "40"}).out);
    REQUIRE(out.size() == 3);
    CHECK(out[1].starts_with("abs_error_bound "));
    CHECK(out[2].starts_with("correct_digits "));
}

TEST_CASE("compute json round-trips the exact value and certifies its bound") {
    auto r = run({"compute", "--method", "series-c", "--n", "40", "--digits", "15", "--format", "json"});
    REQUIRE(r.code == exit_code::success);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["method"] == "series-c");
    const auto& row = doc["rows"][0];
    CHECK(row["n"] == 40);
    const auto as_rational = [](const nlohmann::json& j) {
        return Rational(Integer(j["num"].get<std::string>()), Integer(j["den"].get<std::string>()));
    };
    const Rational value = as_rational(row["value"]);
    CHECK(value == series_c(40));
    CHECK(row["decimal"] == to_decimal(value, 15).digits);

    const Rational bound = as_rational(row["abs_error_bound"]);
    CHECK(max_distance(value, reference_pi()) <= bound);

    // The reported digit count matches the common prefix with pi's decimals.
    const unsigned k = row["correct_digits"].get<unsigned>();
    const std::string pi28 = to_decimal(reference_pi().lower(), 28).digits;
    const std::string mine = to_decimal(value, 28).digits;
    CHECK(mine.substr(0, 2 + k) == pi28.substr(0, 2 + k));
    CHECK(mine.substr(0, 3 + k) != pi28.substr(0, 3 + k));
}

TEST_CASE("compute json names the optional parameters it used") {
    auto doc = nlohmann::json::parse(
        run({"compute", "--method", "corrected", "--n", "5", "--cf-order", "2", "--format", "json"}).out);
    CHECK(doc["cf_order"] == 2);
    CHECK_FALSE(doc.contains("rounds"));
    doc = nlohmann::json::parse(
        run({"compute", "--method", "aitken-iter", "--n", "9", "--rounds", "3", "--format", "json"}).out);
    CHECK(doc["rounds"] == 3);
    doc = nlohmann::json::parse(
        run({"compute", "--method", "averaged", "--n", "10", "--series", "a", "--format", "json"}).out);
    CHECK(doc["series"] == "a");
}

TEST_CASE("invalid parameter combinations are usage errors") {
    CHECK(run({"compute", "--method", "raw", "--n", "3", "--cf-order", "2"}).code == exit_code::usage_error);
    CHECK(run({"compute", "--method", "corrected", "--n", "3"}).code == exit_code::usage_error);
    CHECK(run({"compute", "--method", "aitken", "--n", "2"}).code == exit_code::usage_error);
    CHECK(run({"compute", "--method", "aitken-iter", "--n", "4", "--rounds", "2"}).code == exit_code::usage_error);
    CHECK(run({"compute", "--method", "aitken-iter", "--n", "9"}).code == exit_code::usage_error);
    CHECK(run({"compute", "--method", "nope", "--n", "3"}).code == exit_code::usage_error);
    CHECK(run({"compute", "--method", "raw", "--n", "0"}).code == exit_code::usage_error);
    CHECK(run({"compute", "--n", "3"}).code == exit_code::usage_error);
    CHECK(run({"table", "--rows", "0"}).code == exit_code::usage_error);
    CHECK(run({"table", "--format", "xml"}).code == exit_code::usage_error);
    CHECK(run({"verify", "nope"}).code == exit_code::usage_error);
    CHECK(run({"frobnicate"}).code == exit_code::usage_error);

    const Run bad = run({"compute", "--method", "unknown", "--n", "3"});
    CHECK(bad.err.find("unknown") != std::string::npos);
}

TEST_CASE("table default rows") {
    const auto out = lines(run({"table", "--format", "csv"}).out);
    REQUIRE(out.size() == 1 + default_table_rows().size());
    CHECK(out[0] == "n,a_n,b_n,c_n");
    CHECK(out[1].starts_with("2,3.1333333333333,3.1372549019607,3.1414634146341"));
    for (const auto& l : out)
        if (l.starts_with("10,")) CHECK(l.find(",3.1415902423707,") != std::string::npos);
    CHECK(out.back().starts_with("71,"));
    CHECK(out.back().ends_with(",3.1415926535898"));
}

TEST_CASE("table formats") {
    const auto md = lines(run({"table", "--rows", "1", "--digits", "5"}).out);
    REQUIRE(md.size() == 3);
    CHECK(md[0] == "| n | a_n | b_n | c_n |");
    CHECK(md[2].starts_with("| 1 | 3.16666 | 3.20000 | "));

    const auto doc = nlohmann::json::parse(run({"table", "--rows", "3,1,3", "--format", "json"}).out);
    CHECK(doc["method"] == "table");
    REQUIRE(doc["rows"].size() == 2);  // sorted and deduplicated
    CHECK(doc["rows"][0]["n"] == 1);
    CHECK(doc["rows"][1]["n"] == 3);
    const auto& cells = doc["rows"][1]["cells"];
    REQUIRE(cells.size() == 3);
    CHECK(cells[0]["decimal"] == to_decimal(series_a(3), 13).digits);
    CHECK(cells[1]["decimal"] == to_decimal(series_b(3), 13).digits);
    CHECK(cells[2]["decimal"] == to_decimal(series_c(3), 13).digits);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"table", "--format", "json", "--digits", "20"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> c{"compute", "--method", "aitken-iter", "--n", "21", "--rounds", "4", "--format", "json"};
    CHECK(run(c).out == run(c).out);
}

TEST_CASE("verify suites") {
    for (const std::string suite : {"madhava", "identities"}) {
        const Run r = run({"verify", suite});
        CHECK_MESSAGE(r.code == exit_code::success, r.out);
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
    const Run table = run({"verify", "table"});
    CHECK(table.code == exit_code::success);
    CHECK(table.out.find("WARN ") != std::string::npos);
    CHECK(lines(table.out).back().starts_with("verify table: "));

    const auto doc = nlohmann::json::parse(run({"verify", "madhava", "--format", "json"}).out);
    CHECK(doc["fail"] == 0);
    CHECK(doc["checks"].size() == doc["pass"].get<int>() + doc["warn"].get<int>());
}
