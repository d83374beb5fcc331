#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace contactlie {

enum class Status { pass, fail, skipped };

inline const char* status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "fail";
}

struct CheckResult {
    std::string check_id;
    Status status = Status::pass;
    std::string witness;  ///< residual or counterexample, only on failure
};

/// Ordered collection of named checks.
class Report {
public:
    /// Records a check; the witness is only rendered when it failed.
    bool check(const std::string& id, bool ok, const std::function<std::string()>& witness = {})
    {
        results_.push_back({id, ok ? Status::pass : Status::fail, (!ok && witness) ? witness() : std::string()});
        return ok;
    }
    void skip(const std::string& id, std::string why) { results_.push_back({id, Status::skipped, std::move(why)}); }
    void fail(const std::string& id, std::string witness) { results_.push_back({id, Status::fail, std::move(witness)}); }

    void append(const Report& other, const std::string& prefix = {})
    {
        for (auto r : other.results_) {
            r.check_id = prefix + r.check_id;
            results_.push_back(std::move(r));
        }
    }

    const std::vector<CheckResult>& results() const { return results_; }
    bool passed() const
    {
        return std::none_of(results_.begin(), results_.end(), [](const auto& r) { return r.status == Status::fail; });
    }
    std::size_t count(Status s) const
    {
        return static_cast<std::size_t>(
            std::count_if(results_.begin(), results_.end(), [s](const auto& r) { return r.status == s; }));
    }

    void sort()
    {
        std::stable_sort(results_.begin(), results_.end(),
                         [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
    }

private:
    std::vector<CheckResult> results_;
};

}  // namespace contactlie
