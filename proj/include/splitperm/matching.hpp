#ifndef SPLITPERM_MATCHING_HPP
#define SPLITPERM_MATCHING_HPP

// Ordered perfect matchings (chord diagrams).
//
// A Matching is stored in canonical form: endpoints are exactly 1..2m and
// arcs are sorted by left endpoint. Two matchings are isomorphic iff their
// canonical forms are equal, so operator== is isomorphism.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitperm/error.hpp"
#include "splitperm/permutation.hpp"

namespace splitperm {

struct Arc {
    int left = 0;
    int right = 0;
    bool operator==(const Arc&) const = default;
    auto operator<=>(const Arc&) const = default;
};

enum class ArcRelation { crosses_from_left, crosses_from_right, nested_below, nests_above, series_before, series_after };

inline std::string_view relation_name(ArcRelation r) {
    switch (r) {
        case ArcRelation::crosses_from_left: return "crosses-from-left";
        case ArcRelation::crosses_from_right: return "crosses-from-right";
        case ArcRelation::nested_below: return "nested-below";
        case ArcRelation::nests_above: return "nests-above";
        case ArcRelation::series_before: return "series-before";
        case ArcRelation::series_after: return "series-after";
    }
    return "?";
}

// How arc a = (a1,a2) sits relative to arc b = (b1,b2).
template <class T>
ArcRelation relation(T a1, T a2, T b1, T b2) {
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) throw PreconditionError("relation: arcs share an endpoint");
    if (a2 < b1) return ArcRelation::series_before;
    if (b2 < a1) return ArcRelation::series_after;
    if (a1 < b1) return a2 < b2 ? ArcRelation::crosses_from_left : ArcRelation::nests_above;
    return a2 < b2 ? ArcRelation::nested_below : ArcRelation::crosses_from_right;
}

inline ArcRelation relation(const Arc& a, const Arc& b) { return relation(a.left, a.right, b.left, b.right); }

inline bool crosses(const Arc& a, const Arc& b) {
    return (a.left < b.left && b.left < a.right && a.right < b.right) ||
           (b.left < a.left && a.left < b.right && b.right < a.right);
}

class Matching {
public:
    Matching() = default;

    // Arcs with arbitrary distinct integer endpoints; renormalized to 1..2m.
    static Matching from_arcs(std::span<const std::pair<int, int>> arcs) {
        std::vector<std::pair<double, double>> d;
        d.reserve(arcs.size());
        for (auto [l, r] : arcs) d.emplace_back(l, r);
        return from_coordinates(d);
    }

    static Matching from_arcs(std::initializer_list<std::pair<int, int>> arcs) {
        return from_arcs(std::span<const std::pair<int, int>>(arcs.begin(), arcs.size()));
    }

    // Arcs with real-valued endpoints such as x-0.5 or i+0.4.
    static Matching from_coordinates(std::span<const std::pair<double, double>> arcs) {
        struct Point {
            double x;
            std::size_t arc;
        };
        std::vector<Point> pts;
        pts.reserve(arcs.size() * 2);
        for (std::size_t k = 0; k < arcs.size(); ++k) {
            if (!(arcs[k].first < arcs[k].second)) throw PreconditionError("matching: arc with left >= right");
            pts.push_back({arcs[k].first, k});
            pts.push_back({arcs[k].second, k});
        }
        std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (pts[i].x == pts[i - 1].x) throw PreconditionError("matching: shared endpoint");
        std::vector<std::size_t> word(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) word[i] = pts[i].arc;
        return from_word(word);
    }

    // A word in which every label occurs exactly twice; position i+1 is an
    // endpoint of the arc labelled word[i].
    static Matching from_word(std::span<const std::size_t> word) {
        std::size_t max_label = 0;
        for (std::size_t w : word) max_label = std::max(max_label, w + 1);
        std::vector<int> first(max_label, 0);
        std::vector<int> count(max_label, 0);
        Matching m;
        m.arcs_.reserve(word.size() / 2);
        for (std::size_t i = 0; i < word.size(); ++i) {
            const std::size_t w = word[i];
            if (count[w] == 0) {
                first[w] = static_cast<int>(i + 1);
            } else if (count[w] == 1) {
                m.arcs_.push_back({first[w], static_cast<int>(i + 1)});
            }
            ++count[w];
        }
        for (int c : count)
            if (c != 0 && c != 2) throw PreconditionError("matching word: label not used exactly twice");
        std::sort(m.arcs_.begin(), m.arcs_.end());
        return m;
    }

    std::size_t size() const noexcept { return arcs_.size(); }
    bool empty() const noexcept { return arcs_.empty(); }
    const Arc& operator[](std::size_t k) const { return arcs_[k]; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    auto begin() const noexcept { return arcs_.begin(); }
    auto end() const noexcept { return arcs_.end(); }
    int endpoints() const noexcept { return static_cast<int>(2 * arcs_.size()); }

    // For every endpoint 1..2m (index e-1), the index of the arc it belongs to.
    std::vector<std::size_t> arc_at() const {
        std::vector<std::size_t> out(2 * arcs_.size());
        for (std::size_t k = 0; k < arcs_.size(); ++k) {
            out[arcs_[k].left - 1] = k;
            out[arcs_[k].right - 1] = k;
        }
        return out;
    }

    // Arc-label word; inverse of from_word up to relabelling.
    std::vector<std::size_t> word() const { return arc_at(); }

    // Endpoint e is a left endpoint.
    std::vector<bool> left_mask() const {
        std::vector<bool> out(2 * arcs_.size(), false);
        for (const auto& a : arcs_) out[a.left - 1] = true;
        return out;
    }

    int partner(int e) const {
        for (const auto& a : arcs_) {
            if (a.left == e) return a.right;
            if (a.right == e) return a.left;
        }
        throw PreconditionError("partner: no such endpoint");
    }

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching& a, const Matching& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.arcs_ <=> b.arcs_;
    }

private:
    std::vector<Arc> arcs_;
};

// Submatching on the given arc indices, renormalized. Arc k of the result is
// ids[k] when ids is increasing.
inline Matching restrict_to(const Matching& m, std::span<const std::size_t> ids) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(ids.size());
    for (std::size_t k : ids) arcs.emplace_back(m[k].left, m[k].right);
    return Matching::from_arcs(arcs);
}

// Arc with right endpoint n+i for the element at position i, left endpoint n+1-p(i).
inline Matching m_of(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(p.size());
    for (int i = 1; i <= n; ++i) arcs.emplace_back(n + 1 - p[i - 1], n + i);
    return Matching::from_arcs(arcs);
}

// All left endpoints precede all right endpoints.
inline bool is_permutation_matching(const Matching& m) {
    const int half = static_cast<int>(m.size());
    return std::all_of(m.begin(), m.end(), [&](const Arc& a) { return a.left <= half && a.right > half; });
}

inline std::optional<Permutation> perm_of(const Matching& m) {
    if (!is_permutation_matching(m)) return std::nullopt;
    const int half = static_cast<int>(m.size());
    std::vector<int> v(m.size());
    for (const auto& a : m) v[a.right - half - 1] = half + 1 - a.left;
    return Permutation(std::move(v));
}

// Some |pattern|-subset of host's arcs is isomorphic to pattern. Arcs are
// matched in left-endpoint order; every pair must keep its relation, which
// pins down the relative order of all endpoints.
inline bool matching_contains(const Matching& pattern, const Matching& host) {
    const std::size_t k = pattern.size();
    const std::size_t n = host.size();
    if (k == 0) return true;
    if (k > n) return false;

    std::vector<std::vector<ArcRelation>> rel(k, std::vector<ArcRelation>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j) rel[i][j] = relation(pattern[i], pattern[j]);

    std::vector<std::size_t> img(k);
    std::size_t d = 0;
    img[0] = 0;
    while (true) {
        bool placed = false;
        for (std::size_t h = img[d]; h + (k - d) <= n; ++h) {
            bool ok = true;
            for (std::size_t j = 0; j < d && ok; ++j) ok = relation(host[h], host[img[j]]) == rel[d][j];
            if (ok) {
                img[d] = h;
                placed = true;
                break;
            }
        }
        if (placed) {
            if (d + 1 == k) return true;
            img[d + 1] = img[d] + 1;
            ++d;
        } else {
            if (d == 0) return false;
            --d;
            ++img[d];
        }
    }
}

inline bool matching_avoids(const Matching& host, const Matching& pattern) { return !matching_contains(pattern, host); }

// M1 followed by M2, with every endpoint of M2 to the right of M1.
inline Matching disjoint_union(const Matching& a, const Matching& b) {
    std::vector<std::pair<int, int>> arcs;
    for (const auto& x : a) arcs.emplace_back(x.left, x.right);
    const int shift = a.endpoints();
    for (const auto& x : b) arcs.emplace_back(x.left + shift, x.right + shift);
    return Matching::from_arcs(arcs);
}

// Arc indices of each block, left to right.
inline std::vector<std::vector<std::size_t>> block_indices(const Matching& m) {
    std::vector<std::vector<std::size_t>> out;
    const auto at = m.arc_at();
    int reach = 0;
    std::vector<std::size_t> cur;
    for (int e = 1; e <= m.endpoints(); ++e) {
        const std::size_t k = at[e - 1];
        if (m[k].left == e) {
            cur.push_back(k);
            reach = std::max(reach, m[k].right);
        }
        if (e == reach) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    return out;
}

inline std::vector<Matching> blocks(const Matching& m) {
    std::vector<Matching> out;
    for (const auto& ids : block_indices(m)) out.push_back(restrict_to(m, ids));
    return out;
}

inline bool is_decomposable(const Matching& m) { return block_indices(m).size() > 1; }

// Adjacency lists of the crossing graph.
inline std::vector<std::vector<std::size_t>> crossing_graph(const Matching& m) {
    std::vector<std::vector<std::size_t>> adj(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (crosses(m[i], m[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    return adj;
}

// Connected components of the crossing graph, each sorted, ordered by least arc index.
inline std::vector<std::vector<std::size_t>> components(const Matching& m) {
    const auto adj = crossing_graph(m);
    std::vector<int> comp(m.size(), -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < m.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> ids{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t q = 0; q < ids.size(); ++q)
            for (std::size_t t : adj[ids[q]])
                if (comp[t] < 0) {
                    comp[t] = static_cast<int>(out.size());
                    ids.push_back(t);
                }
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    return out;
}

// The crossing graph is connected. The empty matching is not connected.
inline bool is_connected(const Matching& m) { return !m.empty() && components(m).size() == 1; }

// Breadth-first layers of the crossing graph starting from the arc at endpoint 1.
inline std::vector<std::vector<std::size_t>> levels(const Matching& m) {
    if (!is_connected(m)) throw PreconditionError("levels: matching is not connected");
    const auto adj = crossing_graph(m);
    std::vector<int> depth(m.size(), -1);
    std::vector<std::vector<std::size_t>> out{{0}};
    depth[0] = 0;
    while (true) {
        std::vector<std::size_t> next;
        for (std::size_t a : out.back())
            for (std::size_t b : adj[a])
                if (depth[b] < 0) {
                    depth[b] = static_cast<int>(out.size());
                    next.push_back(b);
                }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        out.push_back(std::move(next));
    }
    return out;
}

// For a connected matching: the level of every arc and whether its parent,
// the crossing arc one level down with the least left endpoint, crosses it
// from the left. The level-0 arc counts as crossed from the left.
struct LevelSide {
    std::size_t level = 0;
    bool plus = true;
};

inline std::vector<LevelSide> level_sides(const Matching& m) {
    const auto lv = levels(m);
    std::vector<LevelSide> out(m.size());
    for (std::size_t i = 1; i < lv.size(); ++i) {
        for (std::size_t beta : lv[i]) {
            std::size_t nu = m.size();
            for (std::size_t a : lv[i - 1])
                if (crosses(m[a], m[beta])) {
                    nu = a;  // levels are sorted and arcs sorted by left endpoint
                    break;
                }
            detail::ensure(nu < m.size(), "level_sides: arc without a parent");
            out[beta] = {i, m[nu].left < m[beta].left};
        }
    }
    return out;
}

inline bool is_long(const Arc& a) { return a.right - a.left > 1; }

inline int long_arc_count(const Matching& m) {
    return static_cast<int>(std::count_if(m.begin(), m.end(), [](const Arc& a) { return is_long(a); }));
}

inline int weight(const Matching& m) { return static_cast<int>(m.size()) + long_arc_count(m); }

inline int crossing_count(const Matching& m) {
    int c = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) c += crosses(m[i], m[j]);
    return c;
}

// Left-right reflection.
inline Matching mirror(const Matching& m) {
    const int e = m.endpoints() + 1;
    std::vector<std::pair<int, int>> arcs;
    for (const auto& a : m) arcs.emplace_back(e - a.right, e - a.left);
    return Matching::from_arcs(arcs);
}

// "1-5 2-4 3-6"; endpoints may be any distinct non-negative integers.
inline Matching parse_matching(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok;
    std::vector<std::pair<int, int>> arcs;
    while (in >> tok) {
        const auto dash = tok.find('-');
        auto digits = [](std::string_view s) {
            return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        };
        if (dash == std::string::npos || !digits(std::string_view(tok).substr(0, dash)) ||
            !digits(std::string_view(tok).substr(dash + 1)))
            throw ParseError("bad arc '" + tok + "'");
        arcs.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    }
    try {
        return Matching::from_arcs(arcs);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("bad matching: ") + e.what());
    }
}

inline std::string to_string(const Matching& m) {
    std::string out;
    for (const auto& a : m) {
        if (!out.empty()) out += ' ';
        out += std::to_string(a.left) + "-" + std::to_string(a.right);
    }
    return out;
}

}  // namespace splitperm

#endif
