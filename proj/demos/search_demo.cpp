// Shows the budgeted first-one search on the exact amplitude backend: how
// many charged oracle queries it spends to locate the first set bit, next to
// the position itself, across a few vector lengths.

#include <cstddef>
#include <iostream>
#include <vector>

#include "qrag/qrag.hpp"

int main() {
    using namespace qrag;

    Rng rng(7);
    const BackendConfig backend = BackendConfig::exact();

    for (const std::size_t n : {64u, 256u, 1024u}) {
        std::vector<Bit> bits(n, 0);
        const std::size_t target = n / 3 + 1;
        for (std::size_t i = target; i <= n; i += 17) bits[i - 1] = 1;

        FunctionOracle oracle(n, [&](std::size_t pos) { return bits[pos - 1] != 0; });
        const std::size_t found = first_one_search(oracle, backend, rng);

        std::cout << "n=" << n << ": first set bit at " << target << ", search returned "
                  << found << " using " << oracle.charged() << " charged queries\n";
    }
    return 0;
}
