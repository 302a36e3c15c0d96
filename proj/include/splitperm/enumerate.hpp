#ifndef SPLITPERM_ENUMERATE_HPP
#define SPLITPERM_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "splitperm/permutation.hpp"

namespace splitperm {

// Members of Av(basis) of order exactly n, sorted lexicographically.
// Built level by level: every avoider of order k+1 arises by inserting the
// value k+1 into an avoider of order k, since the class is hereditary.
inline std::vector<Permutation> enumerate_avoiders(std::span<const Permutation> basis, std::size_t n) {
    std::vector<Permutation> level{Permutation{}};
    if (!avoids_all(level.front(), basis)) return {};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Permutation> next;
        for (const auto& p : level) {
            const auto& v = p.values();
            for (std::size_t pos = 0; pos <= v.size(); ++pos) {
                std::vector<int> w;
                w.reserve(v.size() + 1);
                w.insert(w.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pos));
                w.push_back(static_cast<int>(k + 1));
                w.insert(w.end(), v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
                Permutation q(std::move(w));
                if (avoids_all(q, basis)) next.push_back(std::move(q));
            }
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return level;
}

inline std::vector<Permutation> enumerate_avoiders(std::initializer_list<Permutation> basis, std::size_t n) {
    return enumerate_avoiders(std::span<const Permutation>(basis.begin(), basis.size()), n);
}

// Members of Av(basis) of every order 0..n_max, smallest first.
inline std::vector<Permutation> enumerate_avoiders_upto(std::span<const Permutation> basis, std::size_t n_max) {
    std::vector<Permutation> out;
    for (std::size_t n = 0; n <= n_max; ++n) {
        auto level = enumerate_avoiders(basis, n);
        out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return out;
}

inline std::vector<Permutation> enumerate_avoiders_upto(std::initializer_list<Permutation> basis, std::size_t n_max) {
    return enumerate_avoiders_upto(std::span<const Permutation>(basis.begin(), basis.size()), n_max);
}

// All n! permutations of order n in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace splitperm

#endif
