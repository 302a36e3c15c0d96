// Command-line front end: one JSON line per subject on stdout, diagnostics on
// stderr. Exit status 0 = success, 1 = verification or precondition failure,
// 2 = usage error.

#include <cstddef>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "splitperm/splitperm.hpp"

using namespace splitperm;

namespace {

struct UsageError : Error {
    using Error::Error;
};

std::vector<std::string> read_lines(const std::string& source) {
    std::vector<std::string> lines;
    std::string line;
    auto slurp = [&](std::istream& in) {
        while (std::getline(in, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    };
    if (source == "-") {
        slurp(std::cin);
    } else {
        std::ifstream in(source);
        if (!in) throw UsageError("cannot open " + source);
        slurp(in);
    }
    return lines;
}

// A subject line is raw text or a JSON object with a "perm", "subject" or "matching" field.
std::string subject_text(const std::string& line) {
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '{') {
        const auto j = json::parse(line, nullptr, false);
        if (j.is_discarded()) throw ParseError("bad JSON line: " + line);
        for (const char* key : {"perm", "subject", "matching"})
            if (j.contains(key)) return j[key].get<std::string>();
        throw ParseError("JSON line has no perm/subject/matching field: " + line);
    }
    return line;
}

// Runs f on every line, in parallel when jobs > 1, and prints results in input order.
// f returns the JSON line and whether the subject succeeded.
int process_lines(const std::vector<std::string>& lines, std::size_t jobs,
                  const std::function<std::pair<json, bool>(const std::string&)>& f) {
    std::vector<json> out(lines.size());
    std::vector<char> ok(lines.size(), 1);
    auto work = [&](std::size_t w, std::size_t stride) {
        for (std::size_t i = w; i < lines.size(); i += stride) {
            try {
                auto [j, good] = f(subject_text(lines[i]));
                out[i] = std::move(j);
                ok[i] = good;
            } catch (const Error& e) {
                out[i] = json{{"subject", lines[i]}, {"error", e.what()}};
                ok[i] = 0;
            }
        }
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, lines.size()));
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w, jobs);
        for (auto& t : pool) t.join();
    }
    int status = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::cout << out[i].dump() << '\n';
        if (!ok[i]) status = 1;
    }
    return status;
}

Permutation perm_arg(const std::string& text) {
    try {
        return parse_permutation(text);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

std::vector<Permutation> basis_arg(const std::string& text) {
    try {
        return parse_basis(text);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

SplittingSpec spec_arg(const std::string& text) {
    try {
        return parse_spec(text);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

Matching matching_arg(const std::string& text) {
    try {
        return parse_matching(text);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

json spec_json(const Permutation& pattern, const SplittingSpec& spec, const std::string& method) {
    return {{"class", to_string(pattern)}, {"parts", grouped_parts_json(spec)}, {"method", method}};
}

// Splitter for one --method: the spec it certifies and a colorer for subjects.
struct MethodPlan {
    SplittingSpec spec;
    std::function<ColoringCertificate(const Permutation&)> color;
    json description;
};

MethodPlan plan_method(const std::string& method, const Permutation& pattern, const std::string& base_parts,
                       const std::string& alpha_text, const std::string& beta_text, const std::string& gamma_text) {
    MethodPlan plan;
    if (method == "greedy3") {
        Permutation a, b, g;
        if (!alpha_text.empty() || !beta_text.empty() || !gamma_text.empty()) {
            a = perm_arg(alpha_text);
            b = perm_arg(beta_text);
            g = perm_arg(gamma_text);
        } else {
            const auto comps = sum_components(pattern);
            if (comps.size() < 3) throw PreconditionError("greedy3: pattern needs at least three sum components");
            a = comps.front();
            g = comps.back();
            b = direct_sum(std::span<const Permutation>(comps.data() + 1, comps.size() - 2));
        }
        if (direct_sum(direct_sum(a, b), g) != pattern) throw PreconditionError("greedy3: alpha+beta+gamma must equal the pattern");
        plan.spec = SplittingSpec{{direct_sum(a, b), direct_sum(b, g)}};
        plan.color = [a, b, g](const Permutation& p) { return greedy_three_sum(a, b, g, p); };
        plan.description = spec_json(pattern, plan.spec, method);
    } else if (method == "dilworth") {
        if (pattern != Permutation::decreasing(pattern.size())) throw PreconditionError("dilworth: pattern must be decreasing");
        const std::size_t n = pattern.size();
        plan.spec = dilworth_parts(n);
        plan.color = [n](const Permutation& p) { return dilworth_split(n, p); };
        plan.description = spec_json(pattern, plan.spec, method);
    } else if (method == "oneplus") {
        const auto split = sum_decompose(pattern);
        if (!split || split->first.size() != 1 || is_sum_decomposable(split->second))
            throw PreconditionError("oneplus: pattern must be 1 (+) sigma with sigma sum-indecomposable");
        const Permutation sigma = split->second;
        PermutationBase base;
        if (base_parts.empty()) {
            if (sigma != Permutation::decreasing(sigma.size()) || sigma.size() < 2)
                throw PreconditionError("oneplus: --base-parts is required unless sigma is decreasing");
            base = dilworth_base(sigma.size());
        } else {
            // oracle-backed base colorer for an arbitrary claimed splitting of Av(sigma)
            SplittingSpec spec = spec_arg(base_parts);
            base.colorer = [spec](const Permutation& p) {
                auto cert = oracle::merge_member(p, spec);
                if (!cert) throw PreconditionError("oneplus: base parts do not split " + to_string(p));
                return cert->colors;
            };
            base.spec = std::move(spec);
        }
        plan.color = [sigma, base](const Permutation& p) { return oneplus_split(sigma, base, p); };
        for (const auto& part : base.spec.parts) plan.spec.parts.push_back(direct_sum(Permutation{1}, part));
        plan.description = spec_json(pattern, plan.spec, method);
        plan.description["note"] = "parts repeat per copy allocated by the matching splitter";
    } else if (method == "theorem") {
        auto ts = std::make_shared<TheoremSplit>(theorem_split(pattern));
        plan.spec = ts->spec;
        plan.color = [ts](const Permutation& p) { return theorem_color(*ts, p); };
        plan.description = to_json(*ts);
    } else {
        throw UsageError("unknown method " + method);
    }
    return plan;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Splittings of permutation classes: encodings, splitters and brute-force oracles"};
    app.require_subcommand(1);
    app.fallthrough();
    std::size_t jobs = 1;
    long long seed = 0;
    app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Accepted for harness compatibility; all algorithms are deterministic");

    std::function<int()> action;

    auto* enumerate = app.add_subcommand("enumerate", "List Av(basis) of a given order");
    std::string avoid;
    std::size_t order = 0;
    bool count_only = false;
    enumerate->add_option("--avoid", avoid, "Comma separated basis")->required();
    enumerate->add_option("--n", order, "Order")->required();
    enumerate->add_flag("--count", count_only, "Print only the count");
    enumerate->callback([&] {
        action = [&] {
            const auto basis = basis_arg(avoid);
            const auto perms = enumerate_avoiders(basis, order);
            if (count_only) {
                std::cout << json{{"basis", avoid}, {"n", order}, {"count", perms.size()}}.dump() << '\n';
            } else {
                for (const auto& p : perms) std::cout << json{{"perm", to_string(p)}}.dump() << '\n';
            }
            return 0;
        };
    });

    auto* contains_cmd = app.add_subcommand("contains", "Test pattern containment");
    std::string pattern_text, host_text;
    contains_cmd->add_option("pattern", pattern_text)->required();
    contains_cmd->add_option("perm", host_text)->required();
    contains_cmd->callback([&] {
        action = [&] {
            const auto e = contains(perm_arg(pattern_text), perm_arg(host_text));
            json j{{"contains", e.has_value()}};
            if (e) {
                std::vector<std::size_t> pos;
                for (std::size_t i : e->positions) pos.push_back(i + 1);
                j["embedding"] = pos;
            }
            std::cout << j.dump() << '\n';
            return 0;
        };
    });

    auto* split = app.add_subcommand("split", "Color subjects with a constructive splitter");
    std::string method, split_pattern, input, base_parts, alpha, beta, gamma;
    split->add_option("--method", method, "greedy3 | dilworth | oneplus | theorem")
        ->required()
        ->check(CLI::IsMember({"greedy3", "dilworth", "oneplus", "theorem"}));
    split->add_option("--pattern", split_pattern, "Class pattern")->required();
    split->add_option("--input", input, "Subjects file, or - for stdin; without it the spec is printed");
    split->add_option("--base-parts", base_parts, "oneplus: splitting of Av(sigma) used as the base");
    split->add_option("--alpha", alpha, "greedy3: explicit alpha");
    split->add_option("--beta", beta, "greedy3: explicit beta");
    split->add_option("--gamma", gamma, "greedy3: explicit gamma");
    split->callback([&] {
        action = [&] {
            const auto plan = plan_method(method, perm_arg(split_pattern), base_parts, alpha, beta, gamma);
            if (input.empty()) {
                std::cout << plan.description.dump() << '\n';
                return 0;
            }
            return process_lines(read_lines(input), jobs, [&](const std::string& text) {
                const auto cert = plan.color(parse_permutation(text));
                return std::pair{to_json(cert), oracle::merge_check(cert)};
            });
        };
    });

    auto* verify = app.add_subcommand("verify", "Check a claimed splitting exhaustively");
    std::string class_text, parts_text, verify_method;
    std::size_t max_n = 0;
    bool cross = false;
    verify->add_option("--class", class_text, "Comma separated basis of the class")->required();
    verify->add_option("--parts", parts_text, "Spec such as 2*132,213")->required();
    verify->add_option("--max-n", max_n, "Largest order checked")->required();
    verify->add_option("--method", verify_method, "Use the theorem splitter first, oracle as fallback")
        ->check(CLI::IsMember({"theorem"}));
    verify->add_flag("--cross-validate", cross, "Also run the oracle when the splitter succeeds");
    verify->callback([&] {
        action = [&] {
            const auto basis = basis_arg(class_text);
            const auto spec = spec_arg(parts_text);
            oracle::VerifyOptions opt;
            opt.jobs = jobs;
            opt.cross_validate = cross;
            if (verify_method == "theorem") {
                if (basis.size() != 1) throw UsageError("--method theorem needs a single-pattern class");
                auto ts = std::make_shared<TheoremSplit>(theorem_split(basis.front()));
                if (ts->spec.grouped() != spec.grouped()) throw PreconditionError("--parts differ from the theorem splitting");
                opt.splitter = [ts](const Permutation& p) { return theorem_color(*ts, p).colors; };
            }
            const auto report = oracle::verify_splitting(basis, spec, max_n, opt);
            auto j = to_json(report);
            j["class"] = class_text;
            j["parts"] = to_string(spec);
            j["max_n"] = max_n;
            std::cout << j.dump() << '\n';
            return report.pass() ? 0 : 1;
        };
    });

    auto* classify = app.add_subcommand("classify", "Known splittability of Av(pattern)");
    std::string classify_text;
    classify->add_option("pattern", classify_text)->required();
    classify->callback([&] {
        action = [&] {
            const auto c = classify_pattern(perm_arg(classify_text));
            std::cout << json{{"verdict", verdict_name(c.verdict)}, {"reason", c.reason}}.dump() << '\n';
            return 0;
        };
    });

    auto* color = app.add_subcommand("color-matching", "Properly color crossing graphs of clique-free matchings");
    std::size_t clique = 0;
    std::string color_input = "-";
    color->add_option("--forbid-clique", clique, "No n pairwise crossing arcs")->required()->check(CLI::Range(2, 1000));
    color->add_option("--input", color_input, "Matchings file, or - for stdin");
    color->callback([&] {
        action = [&] {
            return process_lines(read_lines(color_input), jobs, [&](const std::string& text) {
                const Matching m = parse_matching(text);
                const auto c = circle_color(m, clique);
                return std::pair{json{{"matching", to_string(m)}, {"colors", c.colors}, {"count", c.count}, {"copies", c.copies}},
                                 true};
            });
        };
    });

    auto* envelope = app.add_subcommand("envelope", "Envelope matchings");
    std::string env_mode, env_arg;
    envelope->add_option("mode", env_mode, "encode | decode | reduce")->required()->check(CLI::IsMember({"encode", "decode", "reduce"}));
    envelope->add_option("arg", env_arg, "Permutation (encode, reduce) or matching (decode)")->required();
    envelope->callback([&] {
        action = [&] {
            if (env_mode == "encode") {
                std::cout << to_json(envelope_of(perm_arg(env_arg))).dump() << '\n';
                return 0;
            }
            if (env_mode == "reduce") {
                const Permutation p = perm_arg(env_arg);
                std::cout << json{{"perm", to_string(p)}, {"arcs", to_string(reduced_envelope(p))}}.dump() << '\n';
                return 0;
            }
            const Matching m = matching_arg(env_arg);
            const auto p = decode_envelope(m);
            json j{{"arcs", to_string(m)}, {"perm", p ? json(to_string(*p)) : json(nullptr)}};
            std::cout << j.dump() << '\n';
            return p ? 0 : 1;
        };
    });

    auto* construct = app.add_subcommand("construct", "Witness constructions");
    std::string what, sigma_text, matching_text;
    construct->add_option("what", what, "nplus | nminus | mprime | tau")->required()->check(CLI::IsMember({"nplus", "nminus", "mprime", "tau"}));
    construct->add_option("--sigma", sigma_text, "Sum-indecomposable sigma")->required();
    construct->add_option("--matching", matching_text, "tau: the matching N (default: N+ of sigma)");
    construct->callback([&] {
        action = [&] {
            const Permutation sigma = perm_arg(sigma_text);
            json j{{"sigma", to_string(sigma)}};
            if (what == "nplus") j["matching"] = to_string(n_plus(sigma));
            else if (what == "nminus") j["matching"] = to_string(n_minus(sigma));
            else if (what == "mprime") j["matching"] = to_string(m_prime(sigma));
            else {
                const Matching n = matching_text.empty() ? n_plus(sigma) : matching_arg(matching_text);
                j["matching"] = to_string(n);
                j["tau"] = to_string(tau_of(n, sigma));
            }
            std::cout << j.dump() << '\n';
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
