#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "madhava/series.hpp"

namespace madhava {

/// One cell of the historical comparison table, as printed (decimal point
/// normalized to '.').
struct PrintedCell {
    Index n;
    char column;  // 'a', 'b' or 'c'
    std::string_view printed;
    /// The printed digits are known to differ from the exact value
    /// truncated to 13 decimals (last-place transcription noise).
    bool known_deviation;
};

std::span<const PrintedCell> printed_table();

/// Rows of the printed table, ascending.
std::vector<Index> default_table_rows();

enum class CheckStatus { pass, warn, fail };

std::string_view status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

/// Suites: "madhava", "identities", "table", "all". Throws
/// std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite);

bool is_known_suite(std::string_view suite);

}  // namespace madhava
