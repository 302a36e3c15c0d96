#ifndef SPLITPERM_SPLITTERS_HPP
#define SPLITPERM_SPLITTERS_HPP

// Coloring algorithms that produce splitting certificates.
//
// Each splitter checks its own output before returning it and throws
// InternalError if a class fails to avoid its part pattern.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "splitperm/envelope.hpp"
#include "splitperm/error.hpp"
#include "splitperm/matching.hpp"
#include "splitperm/permutation.hpp"
#include "splitperm/splitting.hpp"
#include "splitperm/witness.hpp"

namespace splitperm {

using PermutationColorer = std::function<std::vector<std::size_t>(const Permutation&)>;
using MatchingColorer = std::function<std::vector<std::size_t>(const Matching&)>;

// A splitting of some permutation class together with a colorer realizing it.
struct PermutationBase {
    SplittingSpec spec;
    PermutationColorer colorer;
};

// The same for permutation matchings; part p means "avoid m_of(p)".
struct MatchingBase {
    SplittingSpec spec;
    MatchingColorer colorer;
};

namespace detail {

inline bool classes_avoid(const Permutation& p, const SplittingSpec& spec, const std::vector<std::size_t>& colors) {
    if (colors.size() != p.size()) return false;
    for (std::size_t c = 0; c < spec.size(); ++c)
        if (contains(spec.parts[c], restrict_to(p, color_class(colors, c)))) return false;
    return std::all_of(colors.begin(), colors.end(), [&](std::size_t c) { return c < spec.size(); });
}

inline bool classes_avoid(const Matching& m, const SplittingSpec& spec, const std::vector<std::size_t>& colors) {
    if (colors.size() != m.size()) return false;
    for (std::size_t c = 0; c < spec.size(); ++c)
        if (matching_contains(m_of(spec.parts[c]), restrict_to(m, color_class(colors, c)))) return false;
    return std::all_of(colors.begin(), colors.end(), [&](std::size_t c) { return c < spec.size(); });
}

inline ColoringCertificate checked(Subject subject, SplittingSpec spec, std::vector<std::size_t> colors, const char* who) {
    const bool ok = std::visit([&](const auto& s) { return classes_avoid(s, spec, colors); }, subject);
    ensure(ok, std::string(who) + ": produced an invalid certificate");
    return {std::move(subject), std::move(spec), std::move(colors)};
}

}  // namespace detail

// Two colors: red (part 0, avoids alpha+beta) and blue (part 1, avoids beta+gamma).
// An element turns blue if making it red would complete a red alpha+beta, or
// if an earlier blue element is smaller; otherwise it is red.
inline ColoringCertificate greedy_three_sum(const Permutation& alpha, const Permutation& beta, const Permutation& gamma,
                                            const Permutation& p) {
    if (alpha.empty() || beta.empty() || gamma.empty()) throw PreconditionError("greedy_three_sum: empty summand");
    const Permutation ab = direct_sum(alpha, beta);
    const Permutation bg = direct_sum(beta, gamma);
    if (contains(direct_sum(ab, gamma), p)) throw PreconditionError("greedy_three_sum: input contains alpha+beta+gamma");

    constexpr std::size_t red = 0, blue = 1;
    std::vector<std::size_t> colors(p.size());
    std::vector<std::size_t> reds;
    int least_blue = static_cast<int>(p.size()) + 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        reds.push_back(i);
        const bool completes = contains(ab, restrict_to(p, reds)).has_value();
        if (completes || least_blue < p[i]) {
            reds.pop_back();
            colors[i] = blue;
            least_blue = std::min(least_blue, p[i]);
        } else {
            colors[i] = red;
        }
        detail::ensure(!contains(ab, restrict_to(p, reds)), "greedy_three_sum: red prefix contains alpha+beta");
    }
    return detail::checked(p, SplittingSpec{{ab, bg}}, std::move(colors), "greedy_three_sum");
}

// The two parts {Av(alpha+1), Av(1+beta)} of Av(alpha+beta).
inline SplittingSpec easy_split_parts(const Permutation& alpha, const Permutation& beta) {
    if (alpha.size() < 2 || beta.size() < 2) throw PreconditionError("easy_split_parts: summands of order at least two required");
    const Permutation one{1};
    return SplittingSpec{{direct_sum(alpha, one), direct_sum(one, beta)}};
}

inline ColoringCertificate easy_split(const Permutation& alpha, const Permutation& beta, const Permutation& p) {
    easy_split_parts(alpha, beta);
    return greedy_three_sum(alpha, Permutation{1}, beta, p);
}

// Color each element by (length of the longest decreasing subsequence ending there) - 1.
inline std::vector<std::size_t> dilworth_colors(const Permutation& p) {
    std::vector<std::size_t> lds(p.size(), 1);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (p[j] > p[i]) lds[i] = std::max(lds[i], lds[j] + 1);
    for (auto& c : lds) --c;
    return lds;
}

inline SplittingSpec dilworth_parts(std::size_t n) {
    if (n < 2) throw PreconditionError("dilworth: n must be at least 2");
    return SplittingSpec{std::vector<Permutation>(n - 1, Permutation{2, 1})};
}

// n-1 increasing classes for a permutation avoiding the decreasing pattern of order n.
inline ColoringCertificate dilworth_split(std::size_t n, const Permutation& p) {
    SplittingSpec spec = dilworth_parts(n);
    if (contains(Permutation::decreasing(n), p)) throw PreconditionError("dilworth_split: input contains the decreasing pattern");
    return detail::checked(p, std::move(spec), dilworth_colors(p), "dilworth_split");
}

inline PermutationBase dilworth_base(std::size_t n) {
    return {dilworth_parts(n), [n](const Permutation& p) { return dilworth_split(n, p).colors; }};
}

// Splits part part_index = a (+) b of a splitting of Av(pi) into a splitting
// where that part is Av(a) or Av(b): color p (+) p and keep whichever copy
// avoids the corresponding summand in that color.
inline ColoringCertificate refine_colorer(const Permutation& pi, const SplittingSpec& spec, std::size_t part_index,
                                          const PermutationColorer& colorer, const Permutation& p) {
    if (part_index >= spec.size()) throw PreconditionError("refine_colorer: part index out of range");
    if (is_sum_decomposable(pi)) throw PreconditionError("refine_colorer: pi must be sum-indecomposable");
    const auto split = sum_decompose(spec.parts[part_index]);
    if (!split) throw PreconditionError("refine_colorer: refined part must be sum-decomposable");
    if (contains(pi, p)) throw PreconditionError("refine_colorer: input contains pi");

    const Permutation doubled = direct_sum(p, p);
    std::vector<std::size_t> colors = colorer(doubled);
    if (!detail::classes_avoid(doubled, spec, colors)) throw InvalidColorerError("refine_colorer: colorer returned an invalid certificate");

    const std::size_t n = p.size();
    std::vector<std::size_t> bottom(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<std::size_t> top(colors.begin() + static_cast<std::ptrdiff_t>(n), colors.end());
    for (const auto& [copy, summand] : {std::pair{&bottom, &split->first}, std::pair{&top, &split->second}}) {
        if (!contains(*summand, restrict_to(p, color_class(*copy, part_index)))) {
            SplittingSpec refined = spec;
            refined.parts[part_index] = *summand;
            return detail::checked(p, std::move(refined), std::move(*copy), "refine_colorer");
        }
    }
    throw InvalidColorerError("refine_colorer: both copies contain their summand in the refined color");
}

// Base colorer lifted to permutation matchings: the arc with right endpoint r
// plays the element at position r - m.
inline MatchingBase lift_to_matchings(PermutationBase base) {
    auto colorer = [inner = std::move(base.colorer)](const Matching& m) {
        const auto p = perm_of(m);
        detail::require(p.has_value(), "lifted colorer: not a permutation matching");
        const auto element_colors = inner(*p);
        const std::size_t half = m.size();
        std::vector<std::size_t> out(m.size());
        for (std::size_t k = 0; k < m.size(); ++k) out[k] = element_colors[static_cast<std::size_t>(m[k].right) - half - 1];
        return out;
    };
    return {std::move(base.spec), std::move(colorer)};
}

struct MatchSplitTrace {
    int depth = 0;
    std::string branch;
    std::vector<std::size_t> arcs;  // arc indices into the input matching
    Matching obstacle;
    std::size_t copies = 0;
};

struct MatchSplitResult {
    ColoringCertificate certificate;
    std::size_t copies = 0;  // copies of the base parts actually allocated
    std::vector<MatchSplitTrace> trace;
};

namespace detail {

inline std::uint64_t pow4(int w) { return w >= 31 ? UINT64_MAX : std::uint64_t{1} << (2 * w); }

class MatchSplitRun {
public:
    MatchSplitRun(const Matching& host, const MatchingBase& base)
        : host_(host), base_(base), copy_(host.size(), 0), part_(host.size(), 0) {}

    // Colors the arcs ids (sorted) of the host so that for every copy c and
    // base part j the arcs colored (c, j) avoid m_of(base part j). Returns the
    // number of copies used.
    std::size_t run(const std::vector<std::size_t>& ids, const Matching& obstacle, int depth) {
        if (ids.empty()) return 0;
        const Matching sub = restrict_to(host_, ids);
        ensure(!matching_contains(obstacle, sub), "match_split: submatching contains its obstacle");

        std::size_t copies = 0;
        std::string branch;
        const auto obstacle_blocks = block_indices(obstacle);
        if (obstacle_blocks.size() > 1) {
            std::vector<std::size_t> rest;
            for (std::size_t b = 1; b < obstacle_blocks.size(); ++b)
                rest.insert(rest.end(), obstacle_blocks[b].begin(), obstacle_blocks[b].end());
            std::sort(rest.begin(), rest.end());
            const Matching first = restrict_to(obstacle, obstacle_blocks[0]);
            const Matching second = restrict_to(obstacle, rest);
            const int cut = least_prefix_containing(sub, first);
            if (cut == 0) {
                branch = "decomposable-avoids-first";
                copies = run(ids, first, depth + 1);
            } else {
                branch = "decomposable";
                std::vector<std::size_t> below, above, straddle;
                for (std::size_t k = 0; k < sub.size(); ++k) {
                    if (sub[k].right < cut) below.push_back(ids[k]);
                    else if (sub[k].left > cut) above.push_back(ids[k]);
                    else straddle.push_back(ids[k]);
                }
                const std::size_t k1 = run(below, first, depth + 1);
                const std::size_t k2 = run(above, second, depth + 1);
                shift(above, k1);
                base_color(straddle);
                shift(straddle, k1 + k2);
                copies = k1 + k2 + 1;
            }
        } else if (!is_connected(sub)) {
            branch = "components";
            for (const auto& comp : components(sub)) copies = std::max(copies, run(globals(ids, comp), obstacle, depth + 1));
        } else {
            branch = "levels";
            copies = split_levels(ids, sub, obstacle, depth);
        }
        ensure(copies <= pow4(weight(obstacle)), "match_split: copy bound exceeded");
        trace.push_back({depth, std::move(branch), ids, obstacle, copies});
        return copies;
    }

    std::vector<std::size_t> colors() const {
        const std::size_t k = base_.spec.size();
        std::vector<std::size_t> out(host_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = copy_[i] * k + part_[i];
        return out;
    }

    std::vector<MatchSplitTrace> trace;

private:
    static std::vector<std::size_t> globals(const std::vector<std::size_t>& ids, const std::vector<std::size_t>& local) {
        std::vector<std::size_t> out;
        out.reserve(local.size());
        for (std::size_t k : local) out.push_back(ids[k]);
        return out;
    }

    // Least i such that the arcs with both endpoints <= i contain m; 0 if none.
    static int least_prefix_containing(const Matching& sub, const Matching& m) {
        for (int i = 1; i <= sub.endpoints(); ++i) {
            std::vector<std::size_t> prefix;
            for (std::size_t k = 0; k < sub.size(); ++k)
                if (sub[k].right <= i) prefix.push_back(k);
            if (prefix.size() >= m.size() && matching_contains(m, restrict_to(sub, prefix))) return i;
        }
        return 0;
    }

    void shift(const std::vector<std::size_t>& ids, std::size_t offset) {
        for (std::size_t id : ids) copy_[id] += offset;
    }

    void base_color(const std::vector<std::size_t>& ids) {
        if (ids.empty()) return;
        const Matching sub = restrict_to(host_, ids);
        ensure(is_permutation_matching(sub), "match_split: base input is not a permutation matching");
        const auto c = base_.colorer(sub);
        ensure(c.size() == ids.size(), "match_split: base colorer returned the wrong number of colors");
        for (std::size_t k = 0; k < ids.size(); ++k) {
            ensure(c[k] < base_.spec.size(), "match_split: base color out of range");
            copy_[ids[k]] = 0;
            part_[ids[k]] = c[k];
        }
    }

    std::size_t split_levels(const std::vector<std::size_t>& ids, const Matching& sub, const Matching& obstacle, int depth) {
        const auto sides = level_sides(sub);
        std::size_t depth_max = 0;
        for (const auto& s : sides) depth_max = std::max(depth_max, s.level);
        const Matching plus_obstacle = m_plus(obstacle);
        const Matching minus_obstacle = m_minus(obstacle);

        std::vector<std::size_t> level0;
        std::vector<std::vector<std::size_t>> plus(depth_max + 1), minus(depth_max + 1);
        for (std::size_t k = 0; k < sub.size(); ++k) {
            if (sides[k].level == 0) level0.push_back(ids[k]);
            else (sides[k].plus ? plus : minus)[sides[k].level].push_back(ids[k]);
        }
        base_color(level0);
        std::size_t even = 1, odd = 0;
        std::vector<std::size_t> odd_arcs;
        for (std::size_t i = 1; i <= depth_max; ++i) {
            const std::size_t kp = split_blocks(plus[i], plus_obstacle, depth);
            const std::size_t km = split_blocks(minus[i], minus_obstacle, depth);
            shift(minus[i], kp);
            if (i % 2 == 0) {
                even = std::max(even, kp + km);
            } else {
                odd = std::max(odd, kp + km);
                odd_arcs.insert(odd_arcs.end(), plus[i].begin(), plus[i].end());
                odd_arcs.insert(odd_arcs.end(), minus[i].begin(), minus[i].end());
            }
        }
        shift(odd_arcs, even);
        return even + odd;
    }

    // Blocks share one palette; returns the largest number of copies any block needed.
    std::size_t split_blocks(const std::vector<std::size_t>& ids, const Matching& obstacle, int depth) {
        if (ids.empty()) return 0;
        std::size_t copies = 0;
        const Matching sub = restrict_to(host_, ids);
        for (const auto& blk : block_indices(sub)) {
            std::vector<std::size_t> sorted = globals(ids, blk);
            std::sort(sorted.begin(), sorted.end());
            copies = std::max(copies, run(sorted, obstacle, depth + 1));
        }
        return copies;
    }

    const Matching& host_;
    const MatchingBase& base_;
    std::vector<std::size_t> copy_;
    std::vector<std::size_t> part_;
};

}  // namespace detail

// Splits a matching avoiding both m_of(pattern) and obstacle into copies of
// the base parts, recursing on the structure of the obstacle.
inline MatchSplitResult match_split(const Matching& n, const Permutation& pattern, const Matching& obstacle,
                                    const MatchingBase& base) {
    if (base.spec.size() == 0) throw PreconditionError("match_split: base spec has no parts");
    for (const auto& part : base.spec.parts)
        if (part.empty() || is_sum_decomposable(part))
            throw PreconditionError("match_split: base parts must be nonempty and sum-indecomposable");
    if (matching_contains(m_of(pattern), n)) throw PreconditionError("match_split: matching contains m_of(pattern)");
    if (matching_contains(obstacle, n)) throw PreconditionError("match_split: matching contains the obstacle");

    detail::MatchSplitRun run(n, base);
    std::vector<std::size_t> all(n.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const std::size_t copies = run.run(all, obstacle, 0);

    MatchSplitResult out;
    out.copies = copies;
    out.trace = std::move(run.trace);
    out.certificate = detail::checked(n, base.spec.repeated(std::max<std::size_t>(copies, 1)), run.colors(), "match_split");
    return out;
}

// Colors rho avoiding 1 (+) sigma from a splitting of Av(sigma): split the
// reduced envelope of rho with match_split, give each covered element the
// color of its arc, and put every LR-minimum in part 0. Part c*k+j of the
// result is Av(1 (+) base part j).
inline ColoringCertificate oneplus_split(const Permutation& sigma, const PermutationBase& base, const Permutation& rho) {
    if (sigma.empty() || is_sum_decomposable(sigma)) throw PreconditionError("oneplus_split: sigma must be sum-indecomposable");
    const Permutation one{1};
    if (contains(direct_sum(one, sigma), rho)) throw PreconditionError("oneplus_split: input contains 1 (+) sigma");

    const auto reduced = reduced_envelope_map(rho);
    const auto split = match_split(reduced.arcs, sigma, m_of(sigma), lift_to_matchings(base));
    std::vector<std::size_t> colors(rho.size(), 0);
    for (std::size_t k = 0; k < reduced.arcs.size(); ++k) colors[reduced.element[k]] = split.certificate.colors[k];

    SplittingSpec spec;
    for (const auto& part : split.certificate.spec.parts) spec.parts.push_back(direct_sum(one, part));
    return detail::checked(rho, std::move(spec), std::move(colors), "oneplus_split");
}

struct CircleColoring {
    std::vector<std::size_t> colors;  // per arc, compacted to 0..count-1
    std::size_t count = 0;
    std::size_t copies = 0;
};

// Proper coloring of the crossing graph of a matching with no n pairwise crossing arcs.
inline CircleColoring circle_color(const Matching& m, std::size_t n) {
    if (n < 2) throw PreconditionError("circle_color: n must be at least 2");
    const Permutation jn = Permutation::decreasing(n);
    if (matching_contains(m_of(jn), m)) throw PreconditionError("circle_color: matching has n pairwise crossing arcs");
    const auto split = match_split(m, jn, m_of(jn), lift_to_matchings(dilworth_base(n)));

    CircleColoring out;
    out.copies = split.copies;
    std::vector<std::size_t> relabel;
    for (std::size_t c : split.certificate.colors) {
        auto it = std::find(relabel.begin(), relabel.end(), c);
        out.colors.push_back(static_cast<std::size_t>(it - relabel.begin()));
        if (it == relabel.end()) relabel.push_back(c);
    }
    out.count = relabel.size();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            detail::ensure(!crosses(m[i], m[j]) || out.colors[i] != out.colors[j], "circle_color: improper coloring");
    return out;
}

}  // namespace splitperm

#endif
