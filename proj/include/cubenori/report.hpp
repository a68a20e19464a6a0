#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace cubenori {

/// One verdict inside a report, with free-form detail for failures.
struct Check
{
    std::string name;
    bool passed = true;
    nlohmann::json detail = nlohmann::json::object();
};

/// Named list of verdicts. Serializes deterministically.
class Report
{
public:
    Report() = default;
    explicit Report(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }
    const std::vector<Check>& checks() const noexcept { return checks_; }

    void add(std::string check, bool passed, nlohmann::json detail = nlohmann::json::object());
    /// Appends every check of other, prefixing names with its report name.
    void merge(const Report& other);

    bool ok() const;
    std::size_t failure_count() const;
    std::vector<std::string> failures() const;

    nlohmann::json to_json() const;

private:
    std::string name_;
    std::vector<Check> checks_;
};

} // namespace cubenori
