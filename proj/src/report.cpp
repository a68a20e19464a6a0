#include "cubenori/report.hpp"

namespace cubenori {

void Report::add(std::string check, bool passed, nlohmann::json detail)
{
    checks_.push_back(Check{std::move(check), passed, std::move(detail)});
}

void Report::merge(const Report& other)
{
    for (const auto& c : other.checks_)
        checks_.push_back(Check{other.name_ + "/" + c.name, c.passed, c.detail});
}

bool Report::ok() const
{
    return failure_count() == 0;
}

std::size_t Report::failure_count() const
{
    std::size_t n = 0;
    for (const auto& c : checks_)
        if (!c.passed)
            ++n;
    return n;
}

std::vector<std::string> Report::failures() const
{
    std::vector<std::string> out;
    for (const auto& c : checks_)
        if (!c.passed)
            out.push_back(c.name);
    return out;
}

nlohmann::json Report::to_json() const
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : checks_) {
        nlohmann::json j = {{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty())
            j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    return {{"name", name_}, {"checks", checks}, {"failures", failure_count()}};
}

} // namespace cubenori
