#ifndef SPLITPERM_ENVELOPE_HPP
#define SPLITPERM_ENVELOPE_HPP

// Envelope path of a permutation diagram and the envelope matching read off it.
//
// The path starts at (0,n) and, for each column i, first steps down to height
// min(p(1..i)) - 1 and then right. Steps are labelled 1..2n. The element at
// position i becomes the arc (down step of row p(i), right step of column i).

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "splitperm/error.hpp"
#include "splitperm/matching.hpp"
#include "splitperm/permutation.hpp"

namespace splitperm {

struct EnvelopeDecomposition {
    Permutation perm;
    std::string path;                  // 'D' and 'R' steps
    Matching arcs;
    std::vector<std::size_t> elem_to_arc;  // position -> index into arcs
};

inline EnvelopeDecomposition envelope_of(const Permutation& p) {
    const std::size_t n = p.size();
    EnvelopeDecomposition out;
    out.perm = p;
    std::vector<int> down_label(n + 1, 0);  // by row
    std::vector<int> right_label(n, 0);     // by column
    int height = static_cast<int>(n);
    int lo = height + 1;
    int label = 0;
    for (std::size_t i = 0; i < n; ++i) {
        lo = std::min(lo, p[i]);
        while (height > lo - 1) {
            down_label[height] = ++label;
            out.path += 'D';
            --height;
        }
        right_label[i] = ++label;
        out.path += 'R';
    }
    std::vector<std::pair<int, int>> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = {down_label[p[i]], right_label[i]};
    out.arcs = Matching::from_arcs(raw);  // already normalized; only sorted here
    out.elem_to_arc.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (out.arcs[k].left == raw[i].first) out.elem_to_arc[i] = k;
    return out;
}

// Every left endpoint a that is immediately followed by a right endpoint is
// matched to it.
inline bool satisfies_envelope_condition(const Matching& m) {
    const auto lefts = m.left_mask();
    for (int a = 1; a < m.endpoints(); ++a)
        if (lefts[a - 1] && !lefts[a] && m.partner(a) != a + 1) return false;
    return true;
}

// The unique p with E(p) = m, if m is an envelope matching.
inline std::optional<Permutation> decode_envelope(const Matching& m) {
    if (!satisfies_envelope_condition(m)) return std::nullopt;
    const std::size_t n = m.size();
    const auto lefts = m.left_mask();
    std::vector<int> row_of(2 * n + 1, 0), col_of(2 * n + 1, 0);
    int row = static_cast<int>(n);
    int col = 0;
    for (int e = 1; e <= m.endpoints(); ++e) {
        if (lefts[e - 1]) row_of[e] = row--;
        else col_of[e] = col++;
    }
    std::vector<int> v(n);
    for (const auto& a : m) v[col_of[a.right]] = row_of[a.left];
    Permutation p(std::move(v));
    if (envelope_of(p).arcs != m) return std::nullopt;
    return p;
}

struct ReducedEnvelope {
    Matching arcs;                    // long arcs of E(p), renormalized
    std::vector<std::size_t> element;  // arc index -> position in p
};

inline ReducedEnvelope reduced_envelope_map(const Permutation& p) {
    const auto env = envelope_of(p);
    std::vector<std::size_t> arc_to_elem(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) arc_to_elem[env.elem_to_arc[i]] = i;
    std::vector<std::size_t> ids;
    ReducedEnvelope out;
    for (std::size_t k = 0; k < env.arcs.size(); ++k) {
        if (is_long(env.arcs[k])) {
            ids.push_back(k);
            out.element.push_back(arc_to_elem[k]);
        }
    }
    out.arcs = restrict_to(env.arcs, ids);
    return out;
}

inline Matching reduced_envelope(const Permutation& p) { return reduced_envelope_map(p).arcs; }

inline constexpr double infinity = std::numeric_limits<double>::infinity();

// Reorder the endpoints strictly inside (lo, hi) so the left endpoints come
// first, then insert a new short arc between the two groups.
inline Matching tangle(const Matching& m, double lo, double hi) {
    if (!(lo < hi)) throw PreconditionError("tangle: empty interval");
    const auto word = m.word();
    const auto lefts = m.left_mask();
    const std::size_t fresh = m.size();
    std::vector<std::size_t> before, in_left, in_right, after;
    for (int e = 1; e <= m.endpoints(); ++e) {
        const std::size_t w = word[e - 1];
        if (e <= lo) before.push_back(w);
        else if (e >= hi) after.push_back(w);
        else if (lefts[e - 1]) in_left.push_back(w);
        else in_right.push_back(w);
    }
    std::vector<std::size_t> out = before;
    out.insert(out.end(), in_left.begin(), in_left.end());
    out.push_back(fresh);
    out.push_back(fresh);
    out.insert(out.end(), in_right.begin(), in_right.end());
    out.insert(out.end(), after.begin(), after.end());
    return Matching::from_word(out);
}

// Insert a new short arc wherever a left endpoint is immediately followed by
// a right endpoint.
inline Matching add_short_arcs(const Matching& m) {
    const auto word = m.word();
    const auto lefts = m.left_mask();
    std::size_t fresh = m.size();
    std::vector<std::size_t> out;
    for (int e = 1; e <= m.endpoints(); ++e) {
        out.push_back(word[e - 1]);
        if (e < m.endpoints() && lefts[e - 1] && !lefts[e]) {
            out.push_back(fresh);
            out.push_back(fresh);
            ++fresh;
        }
    }
    return Matching::from_word(out);
}

// A permutation whose reduced envelope is isomorphic to m.
inline Permutation matching_to_perm(const Matching& m) {
    auto p = decode_envelope(add_short_arcs(m));
    detail::ensure(p.has_value(), "matching_to_perm: short-arc completion is not an envelope matching");
    return *p;
}

}  // namespace splitperm

#endif
