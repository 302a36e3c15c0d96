#ifndef SPLITPERM_ORACLE_HPP
#define SPLITPERM_ORACLE_HPP

// Brute-force verification: merge membership, exhaustive splitting sweeps,
// unavoidability witnesses and 1-amalgamation search.
//
// Apart from contains() on permutations, nothing here reuses the splitter
// code paths: matching containment, occurrence enumeration and incremental
// checks are re-implemented by plain exhaustive search.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "splitperm/enumerate.hpp"
#include "splitperm/error.hpp"
#include "splitperm/matching.hpp"
#include "splitperm/permutation.hpp"
#include "splitperm/splitting.hpp"

namespace splitperm::oracle {

namespace detail {

// Calls f on every increasing k-subset of 0..n-1 until it returns true.
inline bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (f(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool order_isomorphic(const Permutation& pattern, const std::vector<int>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if ((pattern[i] < pattern[j]) != (values[i] < values[j])) return false;
    return true;
}

// Some occurrence of pattern in seq uses the last entry of seq.
inline bool occurrence_through_last(const Permutation& pattern, const std::vector<int>& seq) {
    const std::size_t k = pattern.size();
    if (k == 0 || seq.empty() || k > seq.size()) return false;
    const std::size_t last = seq.size() - 1;
    return for_each_subset(last, k - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<int> vals;
        for (std::size_t i : idx) vals.push_back(seq[i]);
        vals.push_back(seq[last]);
        return order_isomorphic(pattern, vals);
    });
}

// Brute-force matching containment over all arc subsets.
inline bool matching_contains_brute(const Matching& pattern, const Matching& host) {
    if (pattern.empty()) return true;
    return for_each_subset(host.size(), pattern.size(),
                           [&](const std::vector<std::size_t>& idx) { return restrict_to(host, idx) == pattern; });
}

}  // namespace detail

// All occurrences of pattern in host, lexicographic by positions.
inline std::vector<Embedding> all_embeddings(const Permutation& pattern, const Permutation& host) {
    std::vector<Embedding> out;
    detail::for_each_subset(host.size(), pattern.size(), [&](const std::vector<std::size_t>& idx) {
        std::vector<int> vals;
        for (std::size_t i : idx) vals.push_back(host[i]);
        if (detail::order_isomorphic(pattern, vals)) out.push_back({idx});
        return false;
    });
    return out;
}

struct Occurrence {
    std::size_t part = 0;
    std::vector<std::size_t> positions;  // into the subject
};

// First occurrence of each part pattern inside its color class; empty iff the certificate is valid.
inline std::vector<Occurrence> offending_classes(const ColoringCertificate& cert) {
    std::vector<Occurrence> out;
    const std::size_t n = subject_size(cert.subject);
    if (cert.colors.size() != n) return {{0, {}}};
    for (std::size_t c : cert.colors)
        if (c >= cert.spec.size()) return {{c, {}}};
    for (std::size_t part = 0; part < cert.spec.size(); ++part) {
        const auto cls = color_class(cert.colors, part);
        if (const auto* p = std::get_if<Permutation>(&cert.subject)) {
            if (auto e = contains(cert.spec.parts[part], restrict_to(*p, cls))) {
                Occurrence o{part, {}};
                for (std::size_t i : e->positions) o.positions.push_back(cls[i]);
                out.push_back(std::move(o));
            }
        } else {
            const auto& m = std::get<Matching>(cert.subject);
            const Matching sub = restrict_to(m, cls);
            const Matching pat = m_of(cert.spec.parts[part]);
            detail::for_each_subset(sub.size(), pat.size(), [&](const std::vector<std::size_t>& idx) {
                if (restrict_to(sub, idx) != pat) return false;
                Occurrence o{part, {}};
                for (std::size_t i : idx) o.positions.push_back(cls[i]);
                out.push_back(std::move(o));
                return true;
            });
        }
    }
    return out;
}

// Every color class avoids its part pattern.
inline bool merge_check(const ColoringCertificate& cert) { return offending_classes(cert).empty(); }

// Exhaustive search for a coloring of p against spec, pruning as soon as a
// class gains an occurrence through its newest element.
inline std::optional<ColoringCertificate> merge_member(const Permutation& p, const SplittingSpec& spec) {
    const std::size_t n = p.size();
    const std::size_t k = spec.size();
    if (k == 0) {
        if (n == 0) return ColoringCertificate{p, spec, {}};
        return std::nullopt;
    }
    std::vector<std::vector<int>> cls(k);
    std::vector<std::size_t> colors(n, 0);

    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == n) return true;
        for (std::size_t c = 0; c < k; ++c) {
            // identical empty parts are interchangeable; try only the first
            bool redundant = false;
            if (cls[c].empty())
                for (std::size_t d = 0; d < c && !redundant; ++d)
                    redundant = cls[d].empty() && spec.parts[d] == spec.parts[c];
            if (redundant) continue;
            cls[c].push_back(p[i]);
            if (!detail::occurrence_through_last(spec.parts[c], cls[c])) {
                colors[i] = c;
                if (place(i + 1)) return true;
            }
            cls[c].pop_back();
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return ColoringCertificate{p, spec, std::move(colors)};
}

using Splitter = std::function<std::vector<std::size_t>(const Permutation&)>;

struct Failure {
    Permutation subject;
    std::string detail;
    std::vector<Occurrence> occurrences;
};

struct VerificationReport {
    std::size_t checked = 0;
    std::vector<Failure> failures;
    std::size_t max_colors_used = 0;
    std::size_t splitter_failures = 0;  // subjects where the splitter failed and the oracle was consulted
    std::vector<Failure> splitter_failure_details;

    bool pass() const noexcept { return failures.empty(); }

    void merge(VerificationReport other) {
        checked += other.checked;
        max_colors_used = std::max(max_colors_used, other.max_colors_used);
        splitter_failures += other.splitter_failures;
        for (auto& f : other.failures) failures.push_back(std::move(f));
        for (auto& f : other.splitter_failure_details) splitter_failure_details.push_back(std::move(f));
    }
};

struct VerifyOptions {
    Splitter splitter;            // optional constructive colorer
    std::size_t jobs = 1;         // worker threads
    bool cross_validate = false;  // also require merge_member to succeed when the splitter does
};

namespace detail {

inline std::size_t colors_used(const std::vector<std::size_t>& colors) {
    return std::set<std::size_t>(colors.begin(), colors.end()).size();
}

inline VerificationReport verify_one(const Permutation& p, const SplittingSpec& spec, const VerifyOptions& opt) {
    VerificationReport r;
    r.checked = 1;
    if (opt.splitter) {
        std::string why;
        std::vector<Occurrence> occ;
        try {
            ColoringCertificate cert{p, spec, opt.splitter(p)};
            occ = offending_classes(cert);
            if (occ.empty()) {
                r.max_colors_used = colors_used(cert.colors);
                if (opt.cross_validate && !merge_member(p, spec))
                    r.failures.push_back({p, "oracle found no merge although the splitter certificate validates", {}});
                return r;
            }
            why = "splitter certificate does not validate";
        } catch (const Error& e) {
            why = std::string("splitter error: ") + e.what();
        }
        ++r.splitter_failures;
        r.splitter_failure_details.push_back({p, why, std::move(occ)});
    }
    if (auto cert = merge_member(p, spec)) r.max_colors_used = std::max(r.max_colors_used, colors_used(cert->colors));
    else r.failures.push_back({p, "no merge exists", {}});
    return r;
}

}  // namespace detail

inline VerificationReport verify_subjects(const std::vector<Permutation>& subjects, const SplittingSpec& spec,
                                          const VerifyOptions& opt = {}) {
    const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, subjects.size()));
    std::vector<VerificationReport> partial(jobs);
    auto work = [&](std::size_t w) {
        for (std::size_t i = w; i < subjects.size(); i += jobs) partial[w].merge(detail::verify_one(subjects[i], spec, opt));
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    VerificationReport out;
    for (auto& r : partial) out.merge(std::move(r));
    auto by_subject = [](const Failure& a, const Failure& b) { return a.subject < b.subject; };
    std::sort(out.failures.begin(), out.failures.end(), by_subject);
    std::sort(out.splitter_failure_details.begin(), out.splitter_failure_details.end(), by_subject);
    return out;
}

// Every member of Av(basis) of order <= n_max merges from the parts of spec.
inline VerificationReport verify_splitting(const std::vector<Permutation>& basis, const SplittingSpec& spec,
                                           std::size_t n_max, const VerifyOptions& opt = {}) {
    return verify_subjects(enumerate_avoiders_upto(basis, n_max), spec, opt);
}

// Every red/blue coloring of sigma has a red tau or a blue pi; checked over all 2^n colorings.
inline bool forces_red_or_blue(const Permutation& sigma, const Permutation& tau, const Permutation& pi) {
    const std::size_t n = sigma.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> red, blue;
        for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? blue : red).push_back(i);
        if (!contains(tau, restrict_to(sigma, red)) && !contains(pi, restrict_to(sigma, blue))) return false;
    }
    return true;
}

// Least sigma in Av(basis), size then lex, whose every 2-coloring has a red tau or a blue pi.
inline std::optional<Permutation> unavoidable_witness(const std::vector<Permutation>& basis, const Permutation& tau,
                                                      const Permutation& pi, std::size_t size_bound) {
    if (!avoids_all(tau, basis) || !avoids_all(pi, basis)) throw PreconditionError("unavoidable_witness: tau and pi must lie in the class");
    const SplittingSpec two{{tau, pi}};
    for (std::size_t n = 0; n <= size_bound; ++n)
        for (const auto& sigma : enumerate_avoiders(basis, n))
            if (!merge_member(sigma, two)) return sigma;
    return std::nullopt;
}

struct MarkedPermutation {
    Permutation perm;
    std::size_t mark = 0;  // position, 0-based
};

struct Amalgamation {
    Permutation sigma;
    Embedding first;
    Embedding second;
};

// Least sigma in Av(basis), size then lex, with embeddings of r1 and r2 that
// send both marked elements to the same position.
inline std::optional<Amalgamation> amalgamation_search(const std::vector<Permutation>& basis, const MarkedPermutation& r1,
                                                      const MarkedPermutation& r2, std::size_t size_bound) {
    if (r1.mark >= r1.perm.size() || r2.mark >= r2.perm.size()) throw PreconditionError("amalgamation_search: mark out of range");
    if (!avoids_all(r1.perm, basis) || !avoids_all(r2.perm, basis))
        throw PreconditionError("amalgamation_search: marked permutations must lie in the class");
    for (std::size_t n = 1; n <= size_bound; ++n) {
        for (const auto& sigma : enumerate_avoiders(basis, n)) {
            const auto e1 = all_embeddings(r1.perm, sigma);
            if (e1.empty()) continue;
            const auto e2 = all_embeddings(r2.perm, sigma);
            for (const auto& a : e1)
                for (const auto& b : e2)
                    if (a.positions[r1.mark] == b.positions[r2.mark]) return Amalgamation{sigma, a, b};
        }
    }
    return std::nullopt;
}

// Blue (part 1) iff some occurrence of r1 puts its mark there; red (part 0)
// otherwise. The red class avoids r1 by construction; the blue class avoids
// r2 whenever r1 and r2 have no 1-amalgamation in a class containing sigma.
inline ColoringCertificate ama_coloring(const Permutation& sigma, const MarkedPermutation& r1, const MarkedPermutation& r2) {
    if (r1.mark >= r1.perm.size()) throw PreconditionError("ama_coloring: mark out of range");
    std::vector<std::size_t> colors(sigma.size(), 0);
    for (const auto& e : all_embeddings(r1.perm, sigma)) colors[e.positions[r1.mark]] = 1;
    return ColoringCertificate{sigma, SplittingSpec{{r1.perm, r2.perm}}, std::move(colors)};
}

}  // namespace splitperm::oracle

#endif
