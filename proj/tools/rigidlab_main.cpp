#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigidlab/classifier.hpp"
#include "rigidlab/construct.hpp"
#include "rigidlab/graph.hpp"
#include "rigidlab/rigidity.hpp"

namespace {

using namespace rigidlab;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

uint64_t default_seed_from_env() {
    const char* env = std::getenv("RIGIDLAB_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0')
        throw std::invalid_argument("RIGIDLAB_SEED must be an unsigned integer");
    return static_cast<uint64_t>(value);
}

struct KRange {
    size_t lo = 4;
    size_t hi = SIZE_MAX;
};

KRange parse_k_range(const std::string& text) {
    KRange r;
    auto dots = text.find("..");
    auto parse_part = [&](const std::string& part, size_t fallback) -> size_t {
        if (part.empty()) return fallback;
        size_t value = 0;
        for (char c : part) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad -k range '" + text + "'");
            value = value * 10 + static_cast<size_t>(c - '0');
        }
        return value;
    };
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_part(text, 0);
        if (text.empty()) throw std::invalid_argument("bad -k range ''");
    } else {
        r.lo = parse_part(text.substr(0, dots), 2);
        r.hi = parse_part(text.substr(dots + 2), SIZE_MAX);
    }
    if (r.lo > r.hi) throw std::invalid_argument("bad -k range '" + text + "': empty");
    return r;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return from_json(text);
    return from_text(text);
}

int cmd_construct(const std::string& expr, const std::string& format) {
    Graph g = build_graph_from_expression(expr);
    if (format == "json")
        std::cout << to_json(g) << "\n";
    else
        std::cout << to_text(g);
    return kExitOk;
}

int cmd_analyze(const std::string& expr, const std::string& file, uint32_t d,
                const AnalysisOptions& opt, const std::string& format) {
    Graph g = file.empty() ? build_graph_from_expression(expr) : load_graph_file(file);
    RigidityReport report = analyze(g, d, opt);
    if (format == "json")
        std::cout << report.to_json() << "\n";
    else
        std::cout << report.to_text();
    return kExitOk;
}

int cmd_enumerate(uint32_t d, uint32_t v, const KRange& range, const std::string& filter,
                  bool experimental, uint32_t budget_vertices, const AnalysisOptions& opt) {
    if (v > budget_vertices) {
        std::cerr << "error: vertex budget exceeded (" << v << " > " << budget_vertices
                  << "); raise --budget-vertices to confirm\n";
        return kExitInputError;
    }
    for (const ChainSpec& spec : enumerate_kchains(v, range.lo, range.hi)) {
        ChainVerdict verdict = kchain_gpr_predicate(spec, d);
        if (filter == "gpr" && !verdict.predicted_gpr) continue;
        if (experimental) {
            AnalysisOptions sub = opt;
            sub.seed = chain_seed(opt.seed, spec);
            verdict.experimental = analyze(k_chain(spec), d, sub);
        }
        std::cout << verdict.to_json() << "\n";
    }
    return kExitOk;
}

std::string specs_to_string(const std::vector<ChainSpec>& specs) {
    std::ostringstream out;
    for (size_t i = 0; i < specs.size(); ++i) {
        if (i > 0) out << " ";
        out << "[";
        for (size_t j = 0; j < specs[i].sizes.size(); ++j) {
            if (j > 0) out << ",";
            out << specs[i].sizes[j];
        }
        out << "]";
    }
    return out.str();
}

nlohmann::ordered_json specs_to_json(const std::vector<ChainSpec>& specs) {
    auto arr = nlohmann::ordered_json::array();
    for (const ChainSpec& s : specs) arr.push_back(s.sizes);
    return arr;
}

int cmd_verify(const std::string& target, uint32_t d, int samples, unsigned threads,
               uint32_t budget_dim, const AnalysisOptions& opt, const std::string& format) {
    bool pass = false;
    nlohmann::ordered_json j;
    j["target"] = target;
    j["d"] = d;

    if (target == "theorem-main") {
        if (d > budget_dim) {
            std::cerr << "error: dimension budget exceeded (" << d << " > " << budget_dim
                      << "); raise --budget-dim to confirm\n";
            return kExitInputError;
        }
        TheoremMainReport report = verify_theorem_main(d, opt, threads);
        pass = report.pass();
        j["v"] = report.v;
        j["chains"] = report.entries.size();
        j["mismatches"] = report.mismatches;
        j["predicted_gpr"] = specs_to_json(report.predicted_gpr);
        j["experimental_gpr"] = specs_to_json(report.experimental_gpr);
        if (format != "json") {
            std::cout << "theorem-main d=" << d << " v=" << report.v
                      << ": chains=" << report.entries.size()
                      << " mismatches=" << report.mismatches
                      << " gpr=" << specs_to_string(report.predicted_gpr) << "\n";
            for (const SweepEntry& entry : report.entries)
                if (!entry.agree)
                    std::cout << "mismatch (replay seed " << entry.seed
                              << "): " << entry.verdict.to_json() << "\n";
        }
    } else if (target == "bolker-roth") {
        BolkerRothReport report = verify_bolker_roth(d, opt);
        pass = report.pass();
        j["pairs"] = report.entries.size();
        j["mismatches"] = report.mismatches;
        if (format != "json") {
            std::cout << "bolker-roth d=" << d << ": pairs=" << report.entries.size()
                      << " mismatches=" << report.mismatches << "\n";
            for (const BolkerRothEntry& entry : report.entries)
                if (entry.formula != entry.measured)
                    std::cout << "mismatch K_{" << entry.a << "," << entry.b << "}: formula "
                              << entry.formula << " measured " << entry.measured << "\n";
        }
    } else if (target == "hendrickson") {
        HendricksonReport report = verify_hendrickson(d, samples, 10, opt);
        pass = report.pass();
        j["samples"] = report.samples;
        j["ggr_count"] = report.ggr_count;
        j["violations"] = report.violations.size();
        if (format != "json") {
            std::cout << "hendrickson d=" << d << ": samples=" << report.samples
                      << " ggr=" << report.ggr_count << " violations=" << report.violations.size()
                      << "\n";
            for (const auto& violation : report.violations)
                std::cout << "violation (replay seed " << violation.seed
                          << "): " << violation.report.to_json() << "\n";
        }
    } else {  // coning
        ConingReport report = verify_coning(d, samples, 9, opt);
        pass = report.pass();
        j["samples"] = report.samples;
        j["replays"] = report.replays;
        j["disagreements"] = report.disagreements.size();
        if (format != "json") {
            std::cout << "coning d=" << d << ": samples=" << report.samples
                      << " replays=" << report.replays
                      << " disagreements=" << report.disagreements.size() << "\n";
            for (const auto& disagreement : report.disagreements)
                std::cout << "disagreement (replay seed " << disagreement.seed << "): base "
                          << disagreement.base.to_json() << " cone " << disagreement.coned.to_json()
                          << "\n";
        }
    }

    j["pass"] = pass;
    if (format == "json")
        std::cout << j.dump() << "\n";
    else
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigidlab: generic rigidity analysis of graphs over a large prime field"};
    app.require_subcommand(1);

    std::string format = "text";
    uint64_t seed = 0;
    bool seed_given = false;
    uint64_t modulus = kDefaultModulus;
    int trials = 3;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "random seed (default: $RIGIDLAB_SEED or 1729)")
            ->each([&](const std::string&) { seed_given = true; });
        cmd->add_option("--modulus", modulus, "prime modulus (default: 2^61 - 1)");
        cmd->add_option("--trials", trials, "randomized trials per verdict (default: 3)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* construct_cmd = app.add_subcommand("construct", "build a graph and print it");
    std::string expr;
    construct_cmd->add_option("expression", expr,
                              "constructor expression, e.g. \"kchain 1,6,6,2\" or "
                              "\"attach(complete 6; left=0,1; right=2,3,4,5; interior=3,5)\"")
        ->required();
    add_common(construct_cmd);

    auto* analyze_cmd = app.add_subcommand("analyze", "run the full rigidity report on a graph");
    std::string analyze_expr, analyze_file;
    uint32_t dim = 0;
    auto* expr_opt = analyze_cmd->add_option("--construct", analyze_expr, "constructor expression");
    analyze_cmd->add_option("--file", analyze_file, "graph file (text or JSON format)")
        ->excludes(expr_opt);
    analyze_cmd->add_option("-d,--dim", dim, "embedding dimension")->required();
    add_common(analyze_cmd);

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "list canonical k-chains with predicate verdicts");
    uint32_t enum_v = 0;
    std::string k_range_text = "4..";
    std::string filter;
    bool experimental = false;
    uint32_t budget_vertices = 28;
    enumerate_cmd->add_option("-d,--dim", dim, "embedding dimension")->required();
    enumerate_cmd->add_option("-v,--vertices", enum_v, "total vertex count")->required();
    enumerate_cmd->add_option("-k,--chain-lengths", k_range_text,
                              "block-count range, e.g. 4..15 or 4.. (default 4..)");
    enumerate_cmd->add_option("--filter", filter, "keep only predicted-GPR chains")
        ->check(CLI::IsMember({"gpr"}));
    enumerate_cmd->add_flag("--experimental", experimental,
                            "attach a full experimental report to every line");
    enumerate_cmd->add_option("--budget-vertices", budget_vertices,
                              "sweep size cap (default 28)");
    add_common(enumerate_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "cross-check a statement experimentally");
    std::string target;
    int samples = 50;
    unsigned threads = 0;
    uint32_t budget_dim = 5;
    verify_cmd->add_option("target", target, "theorem-main | bolker-roth | hendrickson | coning")
        ->required()
        ->check(CLI::IsMember({"theorem-main", "bolker-roth", "hendrickson", "coning"}));
    verify_cmd->add_option("-d,--dim", dim, "embedding dimension")->required();
    verify_cmd->add_option("--samples", samples, "sample count for randomized targets");
    verify_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    verify_cmd->add_option("--budget-dim", budget_dim, "theorem-main dimension cap (default 5)");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (!seed_given) seed = default_seed_from_env();
        AnalysisOptions opt;
        opt.seed = seed;
        opt.modulus = modulus;
        opt.trials = trials;

        if (construct_cmd->parsed()) return cmd_construct(expr, format);
        if (analyze_cmd->parsed()) {
            if (analyze_expr.empty() && analyze_file.empty())
                throw std::invalid_argument("analyze: need --construct or --file");
            return cmd_analyze(analyze_expr, analyze_file, dim, opt, format);
        }
        if (enumerate_cmd->parsed())
            return cmd_enumerate(dim, enum_v, parse_k_range(k_range_text), filter, experimental,
                                 budget_vertices, opt);
        return cmd_verify(target, dim, samples, threads, budget_dim, opt, format);
    } catch (const GraphParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ExpressionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
}
