#include "madhava/cli.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "madhava/accel.hpp"
#include "madhava/report.hpp"
#include "madhava/verify.hpp"

namespace madhava {

namespace {

using json = nlohmann::ordered_json;

json rational_json(const Rational& x) {
    return json{{"num", x.numerator().get_str()}, {"den", x.denominator().get_str()}};
}

json row_json(const ReportRow& row) {
    return json{{"n", row.n},
                {"decimal", row.rendering.digits},
                {"value", rational_json(row.value)},
                {"abs_error_bound", rational_json(row.abs_error_bound)},
                {"abs_error_bound_sci", to_scientific_upper(row.abs_error_bound)},
                {"correct_digits", row.correct_digits}};
}

const std::map<std::string, Rounding> kRoundings{{"toward-zero", Rounding::toward_zero},
                                                 {"half-even", Rounding::half_even}};

struct ComputeOptions {
    std::string method;
    Index n = 1;
    unsigned cf_order = 0;
    unsigned rounds = 0;
    std::string series = "c";
    unsigned digits = 13;
    std::string format = "plain";
    Rounding rounding = Rounding::toward_zero;
};

struct TableOptions {
    std::vector<Index> rows = default_table_rows();
    unsigned digits = 13;
    std::string format = "markdown";
    Rounding rounding = Rounding::toward_zero;
};

struct VerifyOptions {
    std::string suite = "all";
    std::string format = "plain";
};

int cmd_compute(const ComputeOptions& o, bool cf_set, bool rounds_set, std::ostream& out, std::ostream& err) {
    auto method = parse_method(o.method);
    if (!method) {
        err << "unknown method '" << o.method << "'\n";
        return exit_code::usage_error;
    }
    MethodParams params;
    params.method = *method;
    params.n = o.n;
    if (cf_set) params.cf_order = o.cf_order;
    if (rounds_set) params.rounds = o.rounds;
    params.base = o.series.size() == 1 ? o.series[0] : '?';

    Rational value;
    try {
        value = evaluate(params);
    } catch (const UndefinedTransform& e) {
        err << e.what() << '\n';
        return exit_code::undefined_transform;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage_error;
    }

    const ReportRow row = make_row(o.n, value, o.digits, o.rounding, reference_pi());
    if (o.format == "json") {
        json doc{{"method", o.method}};
        if (cf_set) doc["cf_order"] = o.cf_order;
        if (rounds_set) doc["rounds"] = o.rounds;
        if (params.method == Method::averaged) doc["series"] = o.series;
        doc["rows"] = json::array({row_json(row)});
        out << doc.dump(2) << '\n';
    } else {
        out << row.rendering.digits << '\n'
            << "abs_error_bound " << to_scientific_upper(row.abs_error_bound) << '\n'
            << "correct_digits " << row.correct_digits << '\n';
    }
    return exit_code::success;
}

int cmd_table(const TableOptions& o, std::ostream& out, std::ostream& err) {
    if (o.rows.empty()) {
        err << "usage error: --rows must not be empty\n";
        return exit_code::usage_error;
    }
    for (Index n : o.rows) {
        if (n == 0) {
            err << "usage error: table rows start at 1\n";
            return exit_code::usage_error;
        }
    }
    std::vector<Index> rows = o.rows;
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    const Enclosure& pi = reference_pi();
    const std::array<AffineSeries, 3> series{pi_series_a(), pi_series_b(), pi_series_c()};
    std::array<ConvergenceReport, 3> reports;
    for (std::size_t i = 0; i < series.size(); ++i) {
        reports[i].method = series[i].name;
        const auto sums = partial_sums(series[i].inner, rows.back());
        for (Index n : rows) {
            const Rational value = series[i].constant + series[i].factor * sums[n - 1];
            reports[i].rows.push_back(make_row(n, value, o.digits, o.rounding, pi));
        }
    }

    if (o.format == "json") {
        json doc{{"method", "table"}, {"digits", o.digits}, {"rows", json::array()}};
        for (std::size_t r = 0; r < rows.size(); ++r) {
            json cells = json::array();
            for (const auto& rep : reports) {
                json cell{{"method", rep.method}};
                cell.update(row_json(rep.rows[r]));
                cell.erase("n");
                cells.push_back(std::move(cell));
            }
            doc["rows"].push_back(json{{"n", rows[r]}, {"cells", std::move(cells)}});
        }
        out << doc.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "n,a_n,b_n,c_n\n";
        for (std::size_t r = 0; r < rows.size(); ++r)
            out << rows[r] << ',' << reports[0].rows[r].rendering.digits << ',' << reports[1].rows[r].rendering.digits
                << ',' << reports[2].rows[r].rendering.digits << '\n';
    } else {
        out << "| n | a_n | b_n | c_n |\n|---|---|---|---|\n";
        for (std::size_t r = 0; r < rows.size(); ++r)
            out << "| " << rows[r] << " | " << reports[0].rows[r].rendering.digits << " | "
                << reports[1].rows[r].rendering.digits << " | " << reports[2].rows[r].rendering.digits << " |\n";
    }
    return exit_code::success;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    const auto results = run_suite(o.suite);
    std::size_t counts[3] = {0, 0, 0};
    const CheckResult* first_failure = nullptr;
    for (const auto& r : results) {
        ++counts[static_cast<int>(r.status)];
        if (r.status == CheckStatus::fail && !first_failure) first_failure = &r;
    }

    if (o.format == "json") {
        json doc{{"suite", o.suite}, {"checks", json::array()}};
        for (const auto& r : results)
            doc["checks"].push_back(json{{"name", r.name}, {"status", status_name(r.status)}, {"detail", r.detail}});
        doc["pass"] = counts[0];
        doc["warn"] = counts[1];
        doc["fail"] = counts[2];
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& r : results) out << status_name(r.status) << ' ' << r.name << ": " << r.detail << '\n';
        out << "verify " << o.suite << ": " << counts[0] << " pass, " << counts[1] << " warn, " << counts[2]
            << " fail\n";
    }
    if (first_failure) {
        err << "first failing check: " << first_failure->name << '\n';
        return exit_code::verification_failure;
    }
    return exit_code::success;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic acceleration of the Madhava-Leibniz series for pi", "madhava"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* c = app.add_subcommand("compute", "Approximate pi by one method, with a certified error bound");
    c->add_option("--method", compute.method, "raw, corrected, series-a, series-b, series-c, aitken, aitken-iter, "
                                              "brouncker or averaged")
        ->required();
    c->add_option("--n", compute.n, "Terms, index or depth (brouncker)")->required();
    auto* cf_opt = c->add_option("--cf-order", compute.cf_order, "Convergent used as corrector (corrected)");
    auto* rounds_opt = c->add_option("--rounds", compute.rounds, "Delta-squared rounds (aitken-iter)");
    c->add_option("--series", compute.series, "Base sequence for averaged: a, b or c")->capture_default_str();
    c->add_option("--digits", compute.digits, "Fractional digits printed")->capture_default_str()->check(
        CLI::Range(0u, kMaxDecimalScale));
    c->add_option("--format", compute.format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();
    c->add_option("--rounding", compute.rounding)->transform(CLI::CheckedTransformer(kRoundings));

    TableOptions table;
    auto* t = app.add_subcommand("table", "Tabulate series a, b and c");
    t->add_option("--rows", table.rows, "Comma-separated values of n")->delimiter(',');
    t->add_option("--digits", table.digits)->capture_default_str()->check(CLI::Range(0u, kMaxDecimalScale));
    t->add_option("--format", table.format)->check(CLI::IsMember({"markdown", "csv", "json"}))->capture_default_str();
    t->add_option("--rounding", table.rounding)->transform(CLI::CheckedTransformer(kRoundings));

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Run a verification suite");
    v->add_option("suite", verify.suite, "madhava, identities, table or all")
        ->check(CLI::IsMember({"madhava", "identities", "table", "all"}))
        ->capture_default_str();
    v->add_option("--format", verify.format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();

    std::vector<const char*> argv{"madhava"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::success : exit_code::usage_error;
    }

    if (c->parsed()) return cmd_compute(compute, cf_opt->count() > 0, rounds_opt->count() > 0, out, err);
    if (t->parsed()) return cmd_table(table, out, err);
    return cmd_verify(verify, out, err);
}

}  // namespace madhava
