// Colors every 1324-avoider of order 6 red/blue so that red avoids 132 and
// blue avoids 213, and prints a few of the colorings.

#include <iostream>

#include "splitperm/splitperm.hpp"

using namespace splitperm;

int main() {
    const Permutation alpha{1}, beta{2, 1}, gamma{1};
    const auto avoiders = enumerate_avoiders({Permutation{1, 3, 2, 4}}, 6);
    std::size_t shown = 0;
    for (const auto& p : avoiders) {
        const auto cert = greedy_three_sum(alpha, beta, gamma, p);
        if (!oracle::merge_check(cert)) {
            std::cerr << "invalid coloring for " << to_string(p) << '\n';
            return 1;
        }
        if (shown++ < 5) std::cout << to_json(cert).dump() << '\n';
    }
    std::cout << avoiders.size() << " permutations colored\n";
}
