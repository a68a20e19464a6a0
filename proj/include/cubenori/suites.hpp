#pragma once

#include "cubenori/corpus.hpp"
#include "cubenori/report.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cubenori {

struct SuiteOptions
{
    /// Degree window; per-instance default [-1, dim X + 1] when absent.
    std::optional<std::pair<int, int>> window;
    /// Coefficients of the logic suite.
    long modulus = 2;
    /// Products larger than this are skipped by the axioms and kunneth suites.
    std::size_t max_product_cubes = 200;
    /// Assignments visited per sequent evaluation before it is skipped.
    std::uint64_t search_limit = 1ull << 22;
};

struct InstanceVerdict
{
    std::string key;
    bool passed = true;
    bool skipped = false;
    std::string note;
    Report report;
};

/// Instance verdicts of one suite, sorted by key. Timing is kept out of to_json.
struct SuiteReport
{
    std::string suite;
    std::vector<InstanceVerdict> instances;
    double seconds = 0;

    bool ok() const;
    std::size_t failure_count() const;
    std::size_t skipped_count() const;
    nlohmann::json to_json() const;
};

inline constexpr const char* report_schema = "cubenori.report";
inline constexpr int report_version = 1;

/// les, excision, mv, cellularity, axioms, kunneth, quiver, logic.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const Corpus& corpus, const SuiteOptions& options = {});

/// "all" runs every suite in order.
std::vector<SuiteReport> run_suites(const std::string& selector, const Corpus& corpus, const SuiteOptions& options = {});

/// {"schema", "version", "ok", "suites": [...]}.
nlohmann::json reports_to_json(const std::vector<SuiteReport>& reports);

/// One line per suite plus the failing instance keys.
std::string human_summary(const std::vector<SuiteReport>& reports);

} // namespace cubenori
