#ifndef SPLITPERM_SPLITTING_HPP
#define SPLITPERM_SPLITTING_HPP

// Splitting specifications and coloring certificates.
//
// A SplittingSpec is a flattened multiset of forbidden patterns; part i is the
// class Av(parts[i]). A ColoringCertificate assigns every element (or arc) of
// its subject to a part. For a Matching subject, part pattern p stands for the
// matching class that avoids m_of(p).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "splitperm/error.hpp"
#include "splitperm/matching.hpp"
#include "splitperm/permutation.hpp"

namespace splitperm {

struct SplittingSpec {
    std::vector<Permutation> parts;

    std::size_t size() const noexcept { return parts.size(); }
    bool operator==(const SplittingSpec&) const = default;

    // k copies of this spec, copy-major: part c*size()+j is parts[j].
    SplittingSpec repeated(std::size_t copies) const {
        SplittingSpec out;
        for (std::size_t c = 0; c < copies; ++c) out.parts.insert(out.parts.end(), parts.begin(), parts.end());
        return out;
    }

    // Distinct patterns with multiplicities, in order of first appearance.
    std::vector<std::pair<Permutation, std::size_t>> grouped() const {
        std::vector<std::pair<Permutation, std::size_t>> out;
        for (const auto& p : parts) {
            auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == p; });
            if (it == out.end()) out.emplace_back(p, 1);
            else ++it->second;
        }
        return out;
    }
};

using Subject = std::variant<Permutation, Matching>;

inline std::size_t subject_size(const Subject& s) {
    return std::visit([](const auto& x) { return x.size(); }, s);
}

struct ColoringCertificate {
    Subject subject;
    SplittingSpec spec;
    std::vector<std::size_t> colors;  // element/arc index -> part index
};

// Indices carrying the given color, increasing.
inline std::vector<std::size_t> color_class(const std::vector<std::size_t>& colors, std::size_t color) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == color) out.push_back(i);
    return out;
}

// "2*132,213": comma separated patterns with an optional multiplicity prefix.
inline SplittingSpec parse_spec(std::string_view text) {
    SplittingSpec spec;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (item.empty()) throw ParseError("empty part in splitting spec");
        std::size_t copies = 1;
        if (const auto star = item.find('*'); star != std::string_view::npos) {
            const std::string count(item.substr(0, star));
            if (count.empty() || !std::all_of(count.begin(), count.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("bad multiplicity '" + count + "'");
            copies = std::stoul(count);
            if (copies == 0) throw ParseError("zero multiplicity");
            item = item.substr(star + 1);
        }
        Permutation p = parse_permutation(item);
        if (p.empty()) throw ParseError("empty pattern in splitting spec");
        for (std::size_t c = 0; c < copies; ++c) spec.parts.push_back(p);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return spec;
}

inline std::string to_string(const SplittingSpec& spec) {
    std::string out;
    for (const auto& [p, k] : spec.grouped()) {
        if (!out.empty()) out += ',';
        if (k > 1) out += std::to_string(k) + "*";
        out += to_string(p);
    }
    return out;
}

}  // namespace splitperm

#endif
