// Highest-root grading of each shipped simple Lie algebra.

#include "contactlie/liealg.hpp"

#include <cstdio>

using namespace contactlie;

int main()
{
    std::printf("%-4s %5s   g-2 g-1  g0  g1  g2   dim g00\n", "type", "dim");
    for (const auto& t : CartanMatrix::shipped_types()) {
        const LieAlgebra g(RootSystem(CartanMatrix::of_type(t)));
        const KillingData kd = killing(g);
        const GradedDecomposition gd = grade(g, kd);
        std::printf("%-4s %5zu  ", t.c_str(), g.dim());
        for (int i = -2; i <= 2; ++i) std::printf("%4zu", gd.piece_dim(i));
        std::printf("   %7zu\n", gd.G00.dim());
    }
}
