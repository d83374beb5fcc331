// Hamiltonian fields on the Hopf model C^2 \ 0 and their brackets.

#include "contactlie/contact.hpp"

#include <iostream>

using namespace contactlie;

int main()
{
    const ContactChart cc = ContactChart::hopf(0);
    const LaurentPoly z0 = cc.coord("z0"), z1 = cc.coord("z1");
    std::cout << "theta        = " << cc.theta().to_string() << "\n";
    std::cout << "d theta      = " << cc.dtheta().to_string() << "\n";
    std::cout << "Euler field  = " << euler_field(cc).to_string() << "\n\n";

    const std::vector<std::pair<std::string, LaurentPoly>> quad{{"z0^2", z0 * z0}, {"z0*z1", z0 * z1}, {"z1^2", z1 * z1}};
    for (const auto& [name, f] : quad) std::cout << "X'(" << name << ") = " << hamiltonian_field(cc, f).to_string() << "\n";
    std::cout << "\n";
    for (std::size_t i = 0; i < quad.size(); ++i)
        for (std::size_t j = i + 1; j < quad.size(); ++j) {
            const LaurentPoly pb = poisson_bracket(cc, quad[i].second, quad[j].second);
            const bool ok = lie_bracket(hamiltonian_field(cc, quad[i].second), hamiltonian_field(cc, quad[j].second)) ==
                            hamiltonian_field(cc, pb);
            std::cout << "{" << quad[i].first << ", " << quad[j].first << "} = " << pb.to_string()
                      << (ok ? "   [X', X'] matches" : "   MISMATCH") << "\n";
        }
}
