// Builds a small domain in code and prints its Cheeger constants, the first
// nontrivial Neumann eigenvalue, and the bounds relating them.

#include <cmath>
#include <iostream>

#include "ncheeger/ncheeger.hpp"

int main() {
    using namespace ncheeger;

    const auto graph = build_graph({{"v1", "v2", Rational(1)},
                                    {"v2", "v3", Rational(1)}});
    const auto domain = build_domain(graph, {"v1", "v3"});
    const auto mg = build_modified_graph(domain);

    const auto hn = neumann_cheeger(domain);
    const auto ht = modified_cheeger(mg);
    const auto spectrum = neumann_spectrum_via_modified(mg);
    const double lambda1 = spectrum.eigenvalues[1];

    std::cout << "hN       = " << render_rational(hn.value) << '\n';
    std::cout << "hTilde   = " << render_rational(ht.value) << '\n';
    std::cout << "lambda1N = " << lambda1 << '\n';

    const double hn_d = to_double(hn.value);
    const double ht_d = to_double(ht.value);
    std::cout << "bounds: " << 2.0 - std::sqrt(4.0 - hn_d * hn_d) << " <= lambda1N <= "
              << 2.0 * hn_d << "  (via hN)\n";
    std::cout << "bounds: " << 1.0 - std::sqrt(1.0 - ht_d * ht_d) << " <= lambda1N <= "
              << 2.0 * ht_d << "  (via hTilde)\n";

    for (const auto& p : hn.minimizers) {
        std::cout << "hN minimizer side:";
        for (int v : p.side()) std::cout << ' ' << graph.name(v);
        std::cout << '\n';
    }
    return 0;
}
