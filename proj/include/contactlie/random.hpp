#pragma once

// Seeded sampling for property checks. Draws go through mt19937_64 with our
// own bounded-integer reduction so that sequences do not depend on the
// standard library's distribution implementations.

#include "contactlie/laurent.hpp"
#include "contactlie/poly.hpp"
#include "contactlie/scalar.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace contactlie {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi] by rejection sampling.
    long uniform(long lo, long hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

    bool coin() { return uniform(0, 1) == 1; }

    /// p/q with |p| <= bound, 1 <= q <= bound.
    Scalar rational(long bound = 7) { return Scalar::ratio(uniform(-bound, bound), uniform(1, bound)); }

    Scalar nonzero_rational(long bound = 7)
    {
        long p = 0;
        while (p == 0) p = uniform(-bound, bound);
        return Scalar::ratio(p, uniform(1, bound));
    }

    /// Sometimes a Gaussian rational, to exercise the imaginary part.
    Scalar gaussian(long bound = 7)
    {
        if (uniform(0, 3) == 0) return Scalar(rational(bound).re(), nonzero_rational(bound).re());
        return nonzero_rational(bound);
    }

    /// Exponent vector of total degree `degree` over `nvars` variables.
    Monomial monomial(std::size_t nvars, int degree)
    {
        Monomial m(nvars, 0);
        if (nvars == 0) return m;
        for (int k = 0; k < degree; ++k) ++m[static_cast<std::size_t>(uniform(0, static_cast<long>(nvars) - 1))];
        return m;
    }

    /// Random homogeneous polynomial of the given degree with up to `terms` terms.
    MultiPoly homogeneous(const VarList& vars, int degree, int terms = 3)
    {
        MultiPoly p;
        for (int t = 0; t < terms; ++t) p += MultiPoly::monomial(vars, monomial(vars.size(), degree), gaussian());
        return p;
    }

    /// Random polynomial with total degree at most max_degree.
    MultiPoly polynomial(const VarList& vars, int max_degree, int terms = 3)
    {
        MultiPoly p;
        for (int t = 0; t < terms; ++t)
            p += MultiPoly::monomial(vars, monomial(vars.size(), static_cast<int>(uniform(0, max_degree))), gaussian());
        return p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace contactlie
