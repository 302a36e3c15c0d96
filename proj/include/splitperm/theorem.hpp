#ifndef SPLITPERM_THEOREM_HPP
#define SPLITPERM_THEOREM_HPP

// Splittings of Av(p) for sum- or skew-decomposable p, and a classifier for
// which principal classes are known to be splittable.
//
// Routes, applied to a sum-decomposable pattern q:
//   a  q = alpha (+) beta with both summands of order >= 2
//   b  q = alpha (+) beta (+) gamma (three or more components)
//   c  q = 1 (+) sigma, sigma sum-indecomposable of order >= 3
//   d  q = sigma (+) 1, reduced to c by reverse-complement
// A skew-decomposable pattern is first complemented (route e).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitperm/envelope.hpp"
#include "splitperm/error.hpp"
#include "splitperm/permutation.hpp"
#include "splitperm/splitters.hpp"
#include "splitperm/splitting.hpp"
#include "splitperm/witness.hpp"

namespace splitperm {

struct TheoremSplit {
    Permutation pattern;
    SplittingSpec spec;
    char route = 'a';                // route taken by the pattern itself
    char core_route = 'a';           // route applied after the symmetries (a, b or c)
    std::vector<Symmetry> symmetry;  // applied to the pattern, in order, before core_route
    Permutation core_pattern;        // pattern after the symmetries
    Permutation alpha, beta, gamma;  // summands for routes a and b
    std::optional<WitnessPair> witnesses;  // route c
};

inline bool in_exception_list(const Permutation& p) {
    static const std::vector<Permutation> list{{1}, {1, 2}, {2, 1}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}};
    return std::find(list.begin(), list.end(), p) != list.end();
}

namespace detail {

// Least k with 2 <= k <= n-2 splitting q as a direct sum; 0 if none.
inline std::size_t wide_split_point(const Permutation& q) {
    int hi = 0;
    for (std::size_t k = 1; k + 2 <= q.size(); ++k) {
        hi = std::max(hi, q[k - 1]);
        if (k >= 2 && static_cast<std::size_t>(hi) == k) return k;
    }
    return 0;
}

inline void plan_sum_route(TheoremSplit& ts) {
    const Permutation& q = ts.core_pattern;
    const Permutation one{1};
    if (const std::size_t k = wide_split_point(q)) {
        ts.core_route = 'a';
        std::vector<int> a(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(k));
        std::vector<int> b;
        for (std::size_t i = k; i < q.size(); ++i) b.push_back(q[i] - static_cast<int>(k));
        ts.alpha = Permutation(std::move(a));
        ts.beta = Permutation(std::move(b));
        ts.spec = easy_split_parts(ts.alpha, ts.beta);
        return;
    }
    const auto comps = sum_components(q);
    if (comps.size() >= 3) {
        ts.core_route = 'b';
        ts.alpha = comps.front();
        ts.gamma = comps.back();
        ts.beta = direct_sum(std::span<const Permutation>(comps.data() + 1, comps.size() - 2));
        ts.spec = SplittingSpec{{direct_sum(ts.alpha, ts.beta), direct_sum(ts.beta, ts.gamma)}};
        return;
    }
    if (comps.size() == 2 && comps[0].size() == 1) {
        ts.core_route = 'c';
        ts.witnesses = make_witnesses(comps[1]);
        const auto& w = *ts.witnesses;
        ts.spec = SplittingSpec{{w.tau_plus, w.tau_plus, w.tau_minus, w.tau_minus}};
        return;
    }
    throw PreconditionError("theorem_split: no route for " + to_string(q));
}

}  // namespace detail

inline TheoremSplit theorem_split(const Permutation& pattern) {
    if (in_exception_list(pattern) || pattern.empty())
        throw PreconditionError("theorem_split: Av(" + to_string(pattern) + ") has no splitting of this form");
    TheoremSplit ts;
    ts.pattern = pattern;
    ts.core_pattern = pattern;
    if (is_sum_decomposable(pattern)) {
        const auto comps = sum_components(pattern);
        const bool ends_in_one = comps.size() == 2 && comps[1].size() == 1 && comps[0].size() >= 3;
        ts.route = detail::wide_split_point(pattern) ? 'a' : comps.size() >= 3 ? 'b' : ends_in_one ? 'd' : 'c';
    } else if (is_skew_decomposable(pattern)) {
        ts.route = 'e';
        ts.symmetry.push_back(Symmetry::complement);
        ts.core_pattern = apply(Symmetry::complement, pattern);
    } else {
        throw PreconditionError("theorem_split: " + to_string(pattern) + " is neither sum- nor skew-decomposable");
    }
    // sigma (+) 1 becomes 1 (+) rc(sigma)
    const auto comps = sum_components(ts.core_pattern);
    if (!detail::wide_split_point(ts.core_pattern) && comps.size() == 2 && comps[1].size() == 1 && comps[0].size() >= 3) {
        ts.symmetry.push_back(Symmetry::reverse_complement);
        ts.core_pattern = apply(Symmetry::reverse_complement, ts.core_pattern);
    }
    detail::plan_sum_route(ts);
    // complement and reverse-complement are involutions, so undoing them is reapplying in reverse
    for (auto it = ts.symmetry.rbegin(); it != ts.symmetry.rend(); ++it)
        for (auto& part : ts.spec.parts) part = apply(*it, part);
    if (ts.witnesses) {
        for (const auto& tau : ts.spec.parts)
            if (contains(pattern, tau)) throw ConstructionError("theorem_split: witness contains the class pattern");
    }
    return ts;
}

inline std::string symmetry_label(const std::vector<Symmetry>& chain) {
    if (chain.empty()) return "none";
    std::string out;
    for (Symmetry s : chain) {
        if (!out.empty()) out += ',';
        out += symmetry_name(s);
    }
    return out;
}

namespace detail {

// Parts 0..3 = even plus, odd plus, even minus, odd minus levels of the
// reduced envelope, component by component; LR-minima go to part 0.
inline std::vector<std::size_t> level_block_colors(const Permutation& rho) {
    const auto reduced = reduced_envelope_map(rho);
    std::vector<std::size_t> colors(rho.size(), 0);
    for (const auto& comp : components(reduced.arcs)) {
        const Matching sub = restrict_to(reduced.arcs, comp);
        const auto sides = level_sides(sub);
        for (std::size_t k = 0; k < comp.size(); ++k) {
            const std::size_t c = (sides[k].plus ? 0 : 2) + sides[k].level % 2;
            colors[reduced.element[comp[k]]] = c;
        }
    }
    return colors;
}

}  // namespace detail

// A certificate for rho against ts.spec, built constructively along the route.
inline ColoringCertificate theorem_color(const TheoremSplit& ts, const Permutation& rho) {
    if (contains(ts.pattern, rho)) throw PreconditionError("theorem_color: input contains the class pattern");
    Permutation q = rho;
    std::vector<std::size_t> where(rho.size());
    for (std::size_t i = 0; i < where.size(); ++i) where[i] = i;
    for (Symmetry s : ts.symmetry) {
        for (auto& w : where) w = transported_position(s, q, w);
        q = apply(s, q);
    }
    std::vector<std::size_t> core;
    switch (ts.core_route) {
        case 'a': core = easy_split(ts.alpha, ts.beta, q).colors; break;
        case 'b': core = greedy_three_sum(ts.alpha, ts.beta, ts.gamma, q).colors; break;
        default: core = detail::level_block_colors(q); break;
    }
    std::vector<std::size_t> colors(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) colors[i] = core[where[i]];
    return detail::checked(rho, ts.spec, std::move(colors), "theorem_color");
}

enum class Verdict { splittable, unsplittable, unknown };

inline std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::splittable: return "splittable";
        case Verdict::unsplittable: return "unsplittable";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

struct Classification {
    Verdict verdict;
    std::string reason;
};

inline Classification classify_pattern(const Permutation& p) {
    if (is_simple(p)) return {Verdict::unsplittable, "simple"};
    if (in_exception_list(p)) return {Verdict::unsplittable, "symmetry of 132"};
    if (is_sum_decomposable(p)) return {Verdict::splittable, "sum-decomposable"};
    if (is_skew_decomposable(p)) return {Verdict::splittable, "skew-decomposable"};
    return {Verdict::unknown, "not simple and indecomposable both ways"};
}

}  // namespace splitperm

#endif
