#ifndef SPLITPERM_PERMUTATION_HPP
#define SPLITPERM_PERMUTATION_HPP

// Permutations in one-line notation and the structural operations on them:
// containment, direct/skew sums, inflation, symmetries, intervals and
// left-to-right minima.
//
// Positions are 0-based throughout the C++ API. Values are ranks 1..n.
// The text and JSON layers convert positions to 1-based.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitperm/error.hpp"

namespace splitperm {

class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> values) : values_(std::move(values)) { validate(); }

    Permutation(std::initializer_list<int> values) : values_(values) { validate(); }

    // Increasing permutation 12...n.
    static Permutation identity(std::size_t n) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
        return Permutation(std::move(v), Trusted{});
    }

    // Decreasing permutation n...21, written J_n in the literature.
    static Permutation decreasing(std::size_t n) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
        return Permutation(std::move(v), Trusted{});
    }

    // Order-isomorphic standardization of an arbitrary sequence of distinct integers.
    static Permutation standardize(std::span<const int> seq) {
        std::vector<std::size_t> idx(seq.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
        std::vector<int> v(seq.size());
        for (std::size_t r = 0; r < idx.size(); ++r) {
            if (r > 0 && seq[idx[r]] == seq[idx[r - 1]]) throw PreconditionError("standardize: repeated value");
            v[idx[r]] = static_cast<int>(r + 1);
        }
        return Permutation(std::move(v), Trusted{});
    }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    int operator[](std::size_t i) const { return values_[i]; }
    const std::vector<int>& values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    // Lexicographic on (size, values): this is the size-then-lex search order.
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.values_ <=> b.values_;
    }

private:
    struct Trusted {};
    Permutation(std::vector<int> values, Trusted) : values_(std::move(values)) {}

    void validate() const {
        const std::size_t n = values_.size();
        std::vector<bool> seen(n + 1, false);
        for (int v : values_) {
            if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
                throw PreconditionError("not a permutation of 1..n");
            seen[v] = true;
        }
    }

    std::vector<int> values_;
};

// Strictly increasing positions into the host; positions[k] is the image of pattern entry k.
struct Embedding {
    std::vector<std::size_t> positions;
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Subsequence of p at the given (increasing) positions, standardized.
inline Permutation restrict_to(const Permutation& p, std::span<const std::size_t> positions) {
    std::vector<int> seq;
    seq.reserve(positions.size());
    for (std::size_t pos : positions) seq.push_back(p[pos]);
    return Permutation::standardize(seq);
}

namespace detail {

// For each pattern entry k, the earlier entries whose values are the nearest
// below and above pattern[k]. Checking the host against those two neighbours
// at every step keeps the partial image order-isomorphic to the pattern prefix.
struct PrefixNeighbours {
    std::vector<int> below;
    std::vector<int> above;

    explicit PrefixNeighbours(const Permutation& pattern) : below(pattern.size(), -1), above(pattern.size(), -1) {
        for (std::size_t k = 0; k < pattern.size(); ++k) {
            for (std::size_t j = 0; j < k; ++j) {
                if (pattern[j] < pattern[k] && (below[k] < 0 || pattern[j] > pattern[below[k]]))
                    below[k] = static_cast<int>(j);
                if (pattern[j] > pattern[k] && (above[k] < 0 || pattern[j] < pattern[above[k]]))
                    above[k] = static_cast<int>(j);
            }
        }
    }
};

}  // namespace detail

// Lexicographically least embedding of pattern into host, if any.
inline std::optional<Embedding> contains(const Permutation& pattern, const Permutation& host) {
    const std::size_t m = pattern.size();
    const std::size_t n = host.size();
    if (m == 0) return Embedding{};
    if (m > n) return std::nullopt;

    const detail::PrefixNeighbours nb(pattern);
    std::vector<std::size_t> pos(m);
    std::size_t k = 0;
    pos[0] = 0;
    while (true) {
        bool placed = false;
        for (std::size_t p = pos[k]; p + (m - k) <= n; ++p) {
            const int v = host[p];
            if (nb.below[k] >= 0 && host[pos[nb.below[k]]] > v) continue;
            if (nb.above[k] >= 0 && host[pos[nb.above[k]]] < v) continue;
            pos[k] = p;
            placed = true;
            break;
        }
        if (placed) {
            if (k + 1 == m) return Embedding{std::move(pos)};
            pos[k + 1] = pos[k] + 1;
            ++k;
        } else {
            if (k == 0) return std::nullopt;
            --k;
            ++pos[k];
        }
    }
}

inline bool avoids(const Permutation& host, const Permutation& pattern) { return !contains(pattern, host); }

inline bool avoids_all(const Permutation& host, std::span<const Permutation> basis) {
    return std::none_of(basis.begin(), basis.end(), [&](const Permutation& b) { return contains(b, host).has_value(); });
}

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v(a.begin(), a.end());
    const int shift = static_cast<int>(a.size());
    for (int x : b) v.push_back(x + shift);
    return Permutation(std::move(v));
}

inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v;
    v.reserve(a.size() + b.size());
    const int shift = static_cast<int>(b.size());
    for (int x : a) v.push_back(x + shift);
    for (int x : b) v.push_back(x);
    return Permutation(std::move(v));
}

enum class Symmetry { reverse, complement, inverse, reverse_complement };

inline constexpr Symmetry all_symmetries[] = {Symmetry::reverse, Symmetry::complement, Symmetry::inverse,
                                              Symmetry::reverse_complement};

inline std::string_view symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::reverse: return "reverse";
        case Symmetry::complement: return "complement";
        case Symmetry::inverse: return "inverse";
        case Symmetry::reverse_complement: return "reverse-complement";
    }
    return "?";
}

inline Permutation apply(Symmetry s, const Permutation& p) {
    const std::size_t n = p.size();
    const int n1 = static_cast<int>(n) + 1;
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        switch (s) {
            case Symmetry::reverse: v[i] = p[n - 1 - i]; break;
            case Symmetry::complement: v[i] = n1 - p[i]; break;
            case Symmetry::inverse: v[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i + 1); break;
            case Symmetry::reverse_complement: v[i] = n1 - p[n - 1 - i]; break;
        }
    }
    return Permutation(std::move(v));
}

// Where the element at position i of p lands in apply(s, p).
inline std::size_t transported_position(Symmetry s, const Permutation& p, std::size_t i) {
    switch (s) {
        case Symmetry::reverse:
        case Symmetry::reverse_complement: return p.size() - 1 - i;
        case Symmetry::complement: return i;
        case Symmetry::inverse: return static_cast<std::size_t>(p[i] - 1);
    }
    return i;
}

// skeleton[parts[0], ..., parts[n-1]].
inline Permutation inflate(const Permutation& skeleton, std::span<const Permutation> parts) {
    if (parts.size() != skeleton.size()) throw PreconditionError("inflate: arity mismatch");
    for (const auto& part : parts)
        if (part.empty()) throw PreconditionError("inflate: empty part");

    // base[v] = number of values used by blocks whose skeleton value is below v
    std::vector<int> size_by_value(skeleton.size() + 1, 0);
    for (std::size_t i = 0; i < skeleton.size(); ++i) size_by_value[skeleton[i]] = static_cast<int>(parts[i].size());
    std::vector<int> base(skeleton.size() + 2, 0);
    for (std::size_t v = 1; v <= skeleton.size(); ++v) base[v + 1] = base[v] + size_by_value[v];

    std::vector<int> out;
    for (std::size_t i = 0; i < skeleton.size(); ++i)
        for (int x : parts[i]) out.push_back(base[skeleton[i]] + x);
    return Permutation(std::move(out));
}

// True iff p has no interval of length strictly between 1 and n.
inline bool is_simple(const Permutation& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        int lo = p[i];
        int hi = p[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
            const std::size_t len = j - i + 1;
            if (len < n && static_cast<std::size_t>(hi - lo) + 1 == len) return false;
        }
    }
    return true;
}

// Split p = a (+) b at the least k with {p_1..p_k} = {1..k}, 0 < k < n.
inline std::optional<std::pair<Permutation, Permutation>> sum_decompose(const Permutation& p) {
    int hi = 0;
    for (std::size_t k = 1; k < p.size(); ++k) {
        hi = std::max(hi, p[k - 1]);
        if (static_cast<std::size_t>(hi) == k) {
            std::vector<int> a(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
            std::vector<int> b;
            for (std::size_t i = k; i < p.size(); ++i) b.push_back(p[i] - static_cast<int>(k));
            return std::pair{Permutation(std::move(a)), Permutation(std::move(b))};
        }
    }
    return std::nullopt;
}

// Split p = a (-) b at the least k with {p_1..p_k} = {n-k+1..n}, 0 < k < n.
inline std::optional<std::pair<Permutation, Permutation>> skew_decompose(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    int lo = n + 1;
    for (std::size_t k = 1; k < p.size(); ++k) {
        lo = std::min(lo, p[k - 1]);
        if (lo == n - static_cast<int>(k) + 1) {
            const int shift = n - static_cast<int>(k);
            std::vector<int> a;
            for (std::size_t i = 0; i < k; ++i) a.push_back(p[i] - shift);
            std::vector<int> b(p.begin() + static_cast<std::ptrdiff_t>(k), p.end());
            return std::pair{Permutation(std::move(a)), Permutation(std::move(b))};
        }
    }
    return std::nullopt;
}

inline bool is_sum_decomposable(const Permutation& p) { return sum_decompose(p).has_value(); }
inline bool is_skew_decomposable(const Permutation& p) { return skew_decompose(p).has_value(); }

// Maximal decomposition p = c_1 (+) c_2 (+) ... into sum-indecomposable components.
inline std::vector<Permutation> sum_components(const Permutation& p) {
    std::vector<Permutation> out;
    Permutation rest = p;
    while (auto split = sum_decompose(rest)) {
        out.push_back(std::move(split->first));
        rest = std::move(split->second);
    }
    if (!rest.empty()) out.push_back(std::move(rest));
    return out;
}

inline Permutation direct_sum(std::span<const Permutation> parts) {
    Permutation out;
    for (const auto& part : parts) out = direct_sum(out, part);
    return out;
}

// Positions i with p(i) smaller than everything before it.
inline std::vector<std::size_t> lr_minima(const Permutation& p) {
    std::vector<std::size_t> out;
    int lo = static_cast<int>(p.size()) + 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < lo) {
            lo = p[i];
            out.push_back(i);
        }
    }
    return out;
}

inline std::vector<bool> lr_minimum_mask(const Permutation& p) {
    std::vector<bool> mask(p.size(), false);
    for (std::size_t i : lr_minima(p)) mask[i] = true;
    return mask;
}

// Inflate every LR-minimum of outer by filler, every other element by 1.
inline Permutation inflate_lr_minima(const Permutation& outer, const Permutation& filler) {
    if (filler.empty()) throw PreconditionError("inflate_lr_minima: empty filler");
    const auto mask = lr_minimum_mask(outer);
    const Permutation one{1};
    std::vector<Permutation> parts;
    parts.reserve(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i) parts.push_back(mask[i] ? filler : one);
    return inflate(outer, parts);
}

// Text format: "2413" (digits, n <= 9), "10 2 1 ..." (whitespace separated),
// "" or "ε" for the empty permutation. Output is always whitespace separated.
inline Permutation parse_permutation(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty() || text == "ε" || text == "e") return {};

    std::vector<int> v;
    const bool spaced = std::any_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (spaced) {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) {
            if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("bad permutation token '" + tok + "'");
            v.push_back(std::stoi(tok));
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad permutation '" + std::string(text) + "'");
            v.push_back(c - '0');
        }
    }
    try {
        return Permutation(std::move(v));
    } catch (const PreconditionError&) {
        throw ParseError("not a permutation: '" + std::string(text) + "'");
    }
}

inline std::string to_string(const Permutation& p) {
    if (p.empty()) return "ε";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p[i]);
    }
    return out;
}

// Comma separated list of permutations, e.g. "132,213". Empty text is the empty list.
inline std::vector<Permutation> parse_basis(std::string_view text) {
    std::vector<Permutation> out;
    std::size_t start = 0;
    if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_permutation(text.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace splitperm

#endif
