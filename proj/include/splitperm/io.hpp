#ifndef SPLITPERM_IO_HPP
#define SPLITPERM_IO_HPP

// JSON forms of the library values. Permutations and matchings are embedded
// as their canonical text; positions in occurrences are 1-based.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "splitperm/envelope.hpp"
#include "splitperm/error.hpp"
#include "splitperm/matching.hpp"
#include "splitperm/oracle.hpp"
#include "splitperm/permutation.hpp"
#include "splitperm/splitting.hpp"
#include "splitperm/theorem.hpp"

namespace splitperm {

using json = nlohmann::ordered_json;

inline json parts_json(const SplittingSpec& spec) {
    json parts = json::array();
    for (const auto& p : spec.parts) parts.push_back(to_string(p));
    return parts;
}

inline SplittingSpec parts_from_json(const json& j) {
    SplittingSpec spec;
    for (const auto& p : j) spec.parts.push_back(parse_permutation(p.get<std::string>()));
    return spec;
}

inline json to_json(const ColoringCertificate& cert) {
    json j;
    if (const auto* p = std::get_if<Permutation>(&cert.subject)) {
        j["subject"] = to_string(*p);
        j["type"] = "permutation";
    } else {
        j["subject"] = to_string(std::get<Matching>(cert.subject));
        j["type"] = "matching";
    }
    j["parts"] = parts_json(cert.spec);
    j["colors"] = cert.colors;
    return j;
}

inline ColoringCertificate certificate_from_json(const json& j) {
    ColoringCertificate cert;
    try {
        const std::string subject = j.at("subject").get<std::string>();
        if (j.value("type", std::string("permutation")) == "matching") cert.subject = parse_matching(subject);
        else cert.subject = parse_permutation(subject);
        cert.spec = parts_from_json(j.at("parts"));
        cert.colors = j.at("colors").get<std::vector<std::size_t>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad certificate JSON: ") + e.what());
    }
    return cert;
}

inline json grouped_parts_json(const SplittingSpec& spec) {
    json parts = json::array();
    for (const auto& [p, k] : spec.grouped()) parts.push_back({{"pattern", to_string(p)}, {"multiplicity", k}});
    return parts;
}

inline SplittingSpec grouped_parts_from_json(const json& j) {
    SplittingSpec spec;
    for (const auto& item : j) {
        const Permutation p = parse_permutation(item.at("pattern").get<std::string>());
        const auto k = item.at("multiplicity").get<std::size_t>();
        for (std::size_t c = 0; c < k; ++c) spec.parts.push_back(p);
    }
    return spec;
}

inline json to_json(const TheoremSplit& ts) {
    return {{"class", to_string(ts.pattern)},
            {"parts", grouped_parts_json(ts.spec)},
            {"route", std::string(1, ts.route)},
            {"core_route", std::string(1, ts.core_route)},
            {"symmetry", symmetry_label(ts.symmetry)}};
}

inline json to_json(const EnvelopeDecomposition& env) {
    return {{"perm", to_string(env.perm)}, {"path", env.path}, {"arcs", to_string(env.arcs)}};
}

inline json to_json(const oracle::Failure& f) {
    json occ = json::array();
    for (const auto& o : f.occurrences) {
        std::vector<std::size_t> pos;
        for (std::size_t i : o.positions) pos.push_back(i + 1);
        occ.push_back({{"part", o.part}, {"positions", pos}});
    }
    return {{"subject", to_string(f.subject)}, {"detail", f.detail}, {"occurrences", occ}};
}

inline json to_json(const oracle::VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back(to_json(f));
    json splitter = json::array();
    for (const auto& f : r.splitter_failure_details) splitter.push_back(to_json(f));
    return {{"pass", r.pass()},
            {"checked", r.checked},
            {"max_colors_used", r.max_colors_used},
            {"failures", failures},
            {"splitter_failures", r.splitter_failures},
            {"splitter_failure_details", splitter}};
}

}  // namespace splitperm

#endif
