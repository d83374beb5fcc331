// Runs every acceptance criterion with its time limit and prints one line each.
// Exit status is nonzero if any criterion fails.

#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

using namespace contactlie;

namespace {

struct Line {
    int id;
    std::string name;
    bool ok;
    double seconds;
    std::string detail;
};

void print(const Line& l)
{
    std::printf("[%s] criterion %2d %-26s %8.3fs  %s\n", l.ok ? "PASS" : "FAIL", l.id, l.name.c_str(), l.seconds, l.detail.c_str());
}

}  // namespace

int main()
{
    const std::uint64_t seed = cli::default_seed;
    std::vector<Line> lines;
    for (const auto& c : acceptance_criteria()) {
        const auto t0 = std::chrono::steady_clock::now();
        Report r;
        std::string detail;
        try {
            r = c.run(seed + static_cast<std::uint64_t>(c.id));
        } catch (const std::exception& e) {
            r.fail("exception", e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = r.passed() && !r.results().empty();
        detail = std::to_string(r.count(Status::pass)) + " checks passed";
        if (r.count(Status::skipped)) detail += ", " + std::to_string(r.count(Status::skipped)) + " skipped";
        for (const auto& x : r.results())
            if (x.status == Status::fail) {
                detail += "; first failure " + x.check_id + ": " + x.witness;
                break;
            }
        if (c.time_limit_s > 0 && s > c.time_limit_s) {
            ok = false;
            detail += "; over the " + std::to_string(static_cast<int>(c.time_limit_s)) + "s limit";
        }
        lines.push_back({c.id, c.name, ok, s, detail});
        print(lines.back());
    }

    {
        const auto t0 = std::chrono::steady_clock::now();
        std::ostringstream a, b, err;
        const int ca = cli::run({"all"}, a, err);
        const int cb = cli::run({"all"}, b, err);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool same = a.str() == b.str();
        std::string detail = same ? std::to_string(a.str().size()) + " identical bytes" : "outputs differ";
        detail += ", exit codes " + std::to_string(ca) + "/" + std::to_string(cb);
        lines.push_back({10, "determinism of all", same && ca == 0 && cb == 0, s, detail});
        print(lines.back());
    }

    std::size_t failed = 0;
    for (const auto& l : lines) failed += !l.ok;
    std::printf("%zu of %zu criteria passed\n", lines.size() - failed, lines.size());
    return failed == 0 ? 0 : 1;
}
