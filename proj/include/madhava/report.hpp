#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "madhava/enclosure.hpp"
#include "madhava/rational.hpp"
#include "madhava/series.hpp"

namespace madhava {

enum class Method { raw, corrected, series_a, series_b, series_c, aitken, aitken_iter, brouncker, averaged };

std::optional<Method> parse_method(std::string_view name);
std::string_view method_name(Method m);

struct MethodParams {
    Method method = Method::raw;
    Index n = 1;
    std::optional<unsigned> cf_order;  // corrected only
    std::optional<unsigned> rounds;    // aitken-iter only
    char base = 'c';                   // averaged: which of series a/b/c
};

/// Throws std::invalid_argument for an invalid parameter combination and
/// UndefinedTransform when a delta-squared step is undefined.
void validate(const MethodParams& p);

/// The method's approximation of pi. Validates first.
Rational evaluate(const MethodParams& p);

/// pi bracketed to width 10^-30 by the c-series; computed once per process.
const Enclosure& reference_pi();

/// Number of leading decimals of x that agree with pi, where the digits of
/// pi are only counted when both ends of `pi` truncate identically.
unsigned correct_digits(const Rational& x, const Enclosure& pi, unsigned max_digits = 28);

struct ReportRow {
    Index n = 0;
    Rational value;
    DecimalRendering rendering;
    Rational abs_error_bound;
    unsigned correct_digits = 0;
};

struct ConvergenceReport {
    std::string method;
    std::vector<ReportRow> rows;  // sorted by n
};

ReportRow make_row(Index n, const Rational& value, unsigned digits, Rounding rounding, const Enclosure& pi);

/// The first k significant digits of a decimal string, sign and point removed.
std::string leading_significant_digits(std::string_view decimal, std::size_t k);

}  // namespace madhava
