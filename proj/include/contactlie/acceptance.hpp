#pragma once

// The acceptance criteria as seeded runs. Criterion k draws from Rng(seed + k)
// so criteria stay independent of each other's sample counts.

#include "contactlie/suites.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

namespace contactlie {

struct Criterion {
    int id = 0;
    std::string name;
    double time_limit_s = 0;  ///< 0 means no stated limit
    std::function<Report(std::uint64_t)> run;
};

inline Report criterion_algebra(std::uint64_t)
{
    Report r;
    for (const char* t : {"A1", "A2", "A3", "C2", "B3", "G2"}) {
        const AlgebraData a = algebra_of_type(t);
        r.append(algebra_suite(a.g, a.kd, a.gd), std::string(t) + ".");
    }
    return r;
}

/// Eigenspace dimensions of ad H_rho against counts of roots by rho-height.
inline Report criterion_grading(std::uint64_t)
{
    Report r;
    const std::vector<std::pair<std::string, std::array<std::size_t, 5>>> expected{
        {"A2", {1, 2, 2, 2, 1}}, {"C2", {1, 2, 4, 2, 1}}, {"G2", {1, 4, 4, 4, 1}}};
    for (const auto& [t, dims] : expected) {
        const AlgebraData a = algebra_of_type(t);
        std::array<std::size_t, 5> by_height{};
        by_height[2] = a.g.rank();
        for (const auto& root : a.g.roots().roots()) ++by_height[static_cast<std::size_t>(a.g.roots().rho_height(root) + 2)];
        std::array<std::size_t, 5> eig{};
        for (int i = -2; i <= 2; ++i) eig[static_cast<std::size_t>(i + 2)] = a.gd.piece_dim(i);
        auto show = [](const std::array<std::size_t, 5>& d) {
            std::string s = "(";
            for (std::size_t k = 0; k < 5; ++k) s += (k ? "," : "") + std::to_string(d[k]);
            return s + ")";
        };
        r.check(t + ".piece_dims", eig == dims && by_height == dims,
                [&] { return "eigenspaces " + show(eig) + ", rho-heights " + show(by_height) + ", expected " + show(dims); });
    }
    return r;
}

inline Report criterion_contact(std::uint64_t seed)
{
    Report r;
    Rng rng(seed);
    for (int n = 0; n <= 2; ++n) r.append(contact_suite(ContactChart::hopf(n), rng, 10), "hopf.n" + std::to_string(n) + ".");
    for (int d : {-2, -1, 1, 2, 3})
        r.append(contact_suite(ContactChart::fibered(1, d), rng, 10), "fibered.delta" + std::to_string(d) + ".");
    bool rejected = false;
    try {
        (void)ContactChart::fibered(1, 0);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    r.check("fibered.delta0_rejected", rejected, [] { return std::string("delta = 0 chart was constructed"); });
    return r;
}

inline Report criterion_lemma21(std::uint64_t seed)
{
    Report r;
    Rng rng(seed);
    const std::vector<std::tuple<std::string, int, int>> models{
        {"hopf", 0, 2}, {"hopf", 1, 2}, {"fibered", 0, 1}, {"fibered", 1, -1}, {"fibered", 1, 2}, {"fibered", 1, 3}};
    std::size_t pairs = 0;
    for (const auto& [m, n, d] : models) {
        const ContactChart cc = make_model(m, n, d);
        const int lo = cc.chart()->fibered() ? -2 : 0;
        for (int l1 = lo; l1 <= 4; ++l1)
            for (int l2 = lo; l2 <= 4; ++l2) {
                const std::string prefix = m + ".n" + std::to_string(n) + ".delta" + std::to_string(d) + ".f" +
                                           std::to_string(l1) + ".g" + std::to_string(l2) + ".";
                r.append(lemma21_suite(cc, rng, l1, l2, 1), prefix);
                ++pairs;
            }
    }
    r.check("pair_count_at_least_200", pairs >= 200 && r.count(Status::skipped) == 0,
            [&] { return std::to_string(pairs) + " pairs, " + std::to_string(r.count(Status::skipped)) + " skipped"; });
    return r;
}

inline Report criterion_lemma22(std::uint64_t seed)
{
    Report r;
    Rng rng(seed);
    r.append(lemma22_suite(ContactChart::hopf(1), rng, 50), "hopf.n1.");
    r.append(lemma22_suite(ContactChart::fibered(1, 2), rng, 50), "fibered.delta2.");
    r.append(lemma22_suite(ContactChart::fibered(1, -1), rng, 50), "fibered.delta-1.");
    return r;
}

inline Report criterion_cocycle(std::uint64_t) { return cocycle_suite(); }

inline Report criterion_quotient(std::uint64_t seed)
{
    Report r;
    Rng rng(seed);
    for (int n = 0; n <= 2; ++n) r.append(quotient_suite(n, rng), "n" + std::to_string(n) + ".");
    return r;
}

inline Report criterion_immersion(std::uint64_t seed)
{
    Report r;
    Rng rng(seed);
    for (int n = 0; n <= 1; ++n) r.append(immersion_suite(n, rng, 25), "n" + std::to_string(n) + ".");
    return r;
}

inline Report criterion_adjoint(std::uint64_t seed)
{
    Report r;
    Rng rng(seed);
    for (const auto& t : CartanMatrix::shipped_types()) r.append(adjoint_full_suite(algebra_of_type(t), rng, 20), t + ".");
    return r;
}

inline std::vector<Criterion> acceptance_criteria()
{
    return {
        {1, "lie algebra suite", 60, criterion_algebra},
        {2, "grading dimensions", 0, criterion_grading},
        {3, "contact axioms", 30, criterion_contact},
        {4, "hamiltonian identities", 0, criterion_lemma21},
        {5, "theta-preserving fields", 0, criterion_lemma22},
        {6, "canonical cocycle", 0, criterion_cocycle},
        {7, "quotient by +-1", 0, criterion_quotient},
        {8, "immersion rank", 0, criterion_immersion},
        {9, "adjoint suite", 120, criterion_adjoint},
    };
}

inline Report run_acceptance(std::uint64_t seed)
{
    Report r;
    for (const auto& c : acceptance_criteria()) {
        char prefix[16];
        std::snprintf(prefix, sizeof prefix, "c%02d.", c.id);
        r.append(c.run(seed + static_cast<std::uint64_t>(c.id)), prefix);
    }
    return r;
}

}  // namespace contactlie
