#ifndef SPLITPERM_WITNESS_HPP
#define SPLITPERM_WITNESS_HPP

// Witness constructions for the one-plus-sigma splittings: the weight-reduced
// matchings M+ / M-, the connected avoiders N+ / N-, the swapped matching M',
// and the pattern tau(N) read off an envelope matching.
//
// Every construction re-checks its guarantees and throws ConstructionError
// when they fail.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "splitperm/envelope.hpp"
#include "splitperm/error.hpp"
#include "splitperm/matching.hpp"
#include "splitperm/permutation.hpp"

namespace splitperm {

namespace detail {

inline std::vector<std::pair<double, double>> coordinates(const Matching& m) {
    std::vector<std::pair<double, double>> out;
    out.reserve(m.size());
    for (const auto& a : m) out.emplace_back(a.left, a.right);
    return out;
}

inline void require_sigma(const Permutation& sigma, std::size_t min_size, const char* who) {
    if (sigma.size() < min_size)
        throw PreconditionError(std::string(who) + ": pattern of order at least " + std::to_string(min_size) + " required");
    if (is_sum_decomposable(sigma)) throw PreconditionError(std::string(who) + ": pattern must be sum-indecomposable");
}

}  // namespace detail

// Replace the arc (1,x) by the short arc (x-0.5,x).
inline Matching m_plus(const Matching& m) {
    if (m.size() < 2 || is_decomposable(m)) throw PreconditionError("m_plus: matching must be indecomposable with at least two arcs");
    auto arcs = detail::coordinates(m);
    const double x = arcs.front().second;  // arcs are sorted by left, so arc 0 is (1,x)
    arcs.front() = {x - 0.5, x};
    return Matching::from_coordinates(arcs);
}

// Replace the arc (y,2m) by the short arc (y,y+0.5).
inline Matching m_minus(const Matching& m) { return mirror(m_plus(mirror(m))); }

namespace detail {

// Arcs gamma_i = (i-0.4, i+0.4) for x <= i <= 2m and delta_j = (j+0.2, j+0.8)
// for x <= j < 2m, added to M+.
inline Matching n_plus_explicit(const Matching& m) {
    auto arcs = coordinates(m);
    const double x = arcs.front().second;
    arcs.front() = {x - 0.5, x};
    const int top = m.endpoints();
    for (int i = static_cast<int>(x); i <= top; ++i) arcs.emplace_back(i - 0.4, i + 0.4);
    for (int j = static_cast<int>(x); j < top; ++j) arcs.emplace_back(j + 0.2, j + 0.8);
    return Matching::from_coordinates(arcs);
}

// Breadth-first search over supersets of M+ obtained by adding up to
// max_added arcs, one at a time, with endpoints in the gaps of the current
// matching. Returns the first connected M-avoider found.
inline std::optional<Matching> n_plus_search(const Matching& m, std::size_t max_added = 6) {
    const Matching start = m_plus(m);
    std::vector<Matching> frontier{start};
    std::set<Matching> seen{start};
    for (std::size_t depth = 0; depth <= max_added; ++depth) {
        for (const auto& cand : frontier)
            if (is_connected(cand) && !matching_contains(m, cand)) return cand;
        if (depth == max_added) break;
        std::vector<Matching> next;
        for (const auto& cand : frontier) {
            const int e = cand.endpoints();
            for (int g1 = 0; g1 <= e; ++g1) {
                for (int g2 = g1; g2 <= e; ++g2) {
                    auto arcs = coordinates(cand);
                    arcs.emplace_back(g1 + 0.25, g2 + 0.75);
                    Matching grown = Matching::from_coordinates(arcs);
                    if (matching_contains(m, grown)) continue;  // supersets would contain it too
                    if (seen.insert(grown).second) next.push_back(std::move(grown));
                }
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

inline Matching n_plus_of_matching(const Matching& m) {
    auto n = m.size() >= 4 ? std::optional<Matching>(n_plus_explicit(m)) : n_plus_search(m);
    if (!n) throw ConstructionError("n_plus: no connected avoiding superset found");
    if (!is_connected(*n)) throw ConstructionError("n_plus: result is not connected");
    if (matching_contains(m, *n)) throw ConstructionError("n_plus: result contains the pattern matching");
    return *n;
}

}  // namespace detail

// A connected matching containing M+ and avoiding M = m_of(sigma).
inline Matching n_plus(const Permutation& sigma) {
    detail::require_sigma(sigma, 3, "n_plus");
    return detail::n_plus_of_matching(m_of(sigma));
}

// The mirror-image construction, containing M- and avoiding m_of(sigma).
inline Matching n_minus(const Permutation& sigma) {
    detail::require_sigma(sigma, 3, "n_minus");
    const Matching m = m_of(sigma);
    Matching n = mirror(detail::n_plus_of_matching(mirror(m)));
    if (!is_connected(n) || matching_contains(m, n)) throw ConstructionError("n_minus: verification failed");
    return n;
}

// With i the partner of m and j the partner of m+1 in m_of(sigma), replace
// (m,i), (j,m+1) by (m+1,i), (j,m).
inline Matching m_prime(const Permutation& sigma) {
    detail::require_sigma(sigma, 2, "m_prime");
    const Matching mm = m_of(sigma);
    const int m = static_cast<int>(sigma.size());
    const int i = mm.partner(m);
    const int j = mm.partner(m + 1);
    std::vector<std::pair<int, int>> arcs;
    for (const auto& a : mm) {
        if (a.left == m) arcs.emplace_back(m + 1, i);
        else if (a.left == j) arcs.emplace_back(j, m);
        else arcs.emplace_back(a.left, a.right);
    }
    return Matching::from_arcs(arcs);
}

// The permutation whose reduced envelope is N with a copy of M' placed in
// every gap between a right endpoint and the left endpoint after it.
inline Permutation tau_of(const Matching& n, const Permutation& sigma) {
    detail::require_sigma(sigma, 2, "tau_of");
    const Matching mm = m_of(sigma);
    if (matching_contains(mm, n)) throw PreconditionError("tau_of: matching contains m_of(sigma)");
    const auto prime_word = m_prime(sigma).word();
    const auto word = n.word();
    const auto lefts = n.left_mask();
    std::size_t fresh = n.size();
    std::vector<std::size_t> out;
    for (int e = 1; e <= n.endpoints(); ++e) {
        out.push_back(word[e - 1]);
        if (e < n.endpoints() && !lefts[e - 1] && lefts[e]) {
            for (std::size_t w : prime_word) out.push_back(fresh + w);
            fresh += sigma.size();
        }
    }
    const Matching with_copies = Matching::from_word(out);
    const Permutation tau = matching_to_perm(with_copies);
    if (contains(direct_sum(Permutation{1}, sigma), tau))
        throw ConstructionError("tau_of: result contains 1 (+) sigma");
    return tau;
}

struct WitnessPair {
    Permutation sigma;
    Matching n_plus;
    Matching n_minus;
    Permutation tau_plus;
    Permutation tau_minus;
};

inline WitnessPair make_witnesses(const Permutation& sigma) {
    WitnessPair w;
    w.sigma = sigma;
    w.n_plus = n_plus(sigma);
    w.n_minus = n_minus(sigma);
    w.tau_plus = tau_of(w.n_plus, sigma);
    w.tau_minus = tau_of(w.n_minus, sigma);
    return w;
}

}  // namespace splitperm

#endif
