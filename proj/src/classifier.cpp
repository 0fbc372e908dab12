#include "rigidlab/classifier.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace rigidlab {

namespace {

uint64_t choose2(uint64_t n) { return n * (n - 1) / 2; }

// C(d+2,2), the vertex count at which the chain characterization lives.
uint32_t chain_vertex_count(uint32_t d) {
    return static_cast<uint32_t>((d + 2) * (d + 1) / 2);
}

uint64_t fnv1a(const std::vector<uint32_t>& values) {
    uint64_t h = 1469598103934665603ULL;
    for (uint32_t x : values) {
        h ^= x;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

ChainVerdict kchain_gpr_predicate(const ChainSpec& spec, uint32_t d) {
    if (spec.k() < 2) throw std::invalid_argument("kchain_gpr_predicate: need k >= 2");
    if (d == 0) throw std::invalid_argument("kchain_gpr_predicate: dimension must be positive");
    ChainVerdict verdict;
    verdict.spec = spec;
    verdict.d = d;
    ConditionFlags& f = verdict.flags;
    const auto& a = spec.sizes;
    size_t k = spec.k();
    f.vertex_count_ok = spec.vertex_total() == chain_vertex_count(d);

    if (k >= 4) {
        f.cond1 = true;
        for (size_t i = 1; i + 1 < k; ++i) f.cond1 = f.cond1 && a[i] >= d + 1;
        f.cond2 = a[1] >= d + 2 && a[k - 2] >= d + 2;
        f.cond3 = true;
        for (size_t i = 0; i + 1 < k; ++i)
            if (a[i] == d + 1 && a[i + 1] == d + 1) f.cond3 = false;
    } else {
        // 2- and 3-chains are complete bipartite graphs; the bipartite
        // conditions apply to the sides (for a 3-chain: a_1+a_3 and a_2).
        uint64_t side_a = k == 2 ? a[0] : a[0] + a[2];
        uint64_t side_b = a[1];
        f.cond1 = std::min(side_a, side_b) >= d + 1;
        f.cond2 = side_a >= d + 2 && side_b >= d + 2;
        f.cond3 = true;
    }
    verdict.predicted_gpr = f.all();
    return verdict;
}

uint64_t bolker_roth_dim(uint32_t a, uint32_t b, uint32_t d) {
    if (a == 0 || b == 0) throw std::invalid_argument("bolker_roth_dim: sides must be positive");
    if (d == 0) throw std::invalid_argument("bolker_roth_dim: dimension must be positive");
    if (static_cast<uint64_t>(a) + b > choose2(d + 2))
        throw std::out_of_range("bolker_roth_dim: requires a+b <= C(d+2,2)");
    if (a < d + 1 || b < d + 1) return 0;
    return static_cast<uint64_t>(a - d - 1) * (b - d - 1);
}

uint64_t chain_cover_stress_dim(const ChainSpec& spec, uint32_t d) {
    if (spec.k() < 2) throw std::invalid_argument("chain_cover_stress_dim: need k >= 2");
    for (size_t i = 1; i + 1 < spec.k(); ++i)
        if (spec.sizes[i] < d + 1)
            throw std::out_of_range(
                "chain_cover_stress_dim: requires every interior block >= d+1");
    if (spec.vertex_total() != chain_vertex_count(d))
        throw std::out_of_range("chain_cover_stress_dim: requires exactly C(d+2,2) vertices");
    int64_t e = static_cast<int64_t>(spec.edge_total());
    int64_t v = spec.vertex_total();
    int64_t dim = e - v * (d + 1) + static_cast<int64_t>(d + 1) * (d + 1);
    return static_cast<uint64_t>(dim);
}

std::vector<ChainSpec> enumerate_kchains(uint32_t v, size_t k_min, size_t k_max) {
    std::vector<ChainSpec> out;
    if (v == 0) return out;
    k_min = std::max<size_t>(k_min, 2);
    k_max = std::min<size_t>(k_max, v);
    std::vector<uint32_t> parts;
    // Compositions of v into k parts in lexicographic order; keep only the
    // canonical representative of each reversal pair.
    auto emit = [&](auto&& self, uint32_t remaining, size_t slots) -> void {
        if (slots == 1) {
            parts.push_back(remaining);
            ChainSpec spec(parts);
            if (spec.is_canonical()) out.push_back(spec);
            parts.pop_back();
            return;
        }
        for (uint32_t first = 1; first + slots - 1 <= remaining; ++first) {
            parts.push_back(first);
            self(self, remaining - first, slots - 1);
            parts.pop_back();
        }
    };
    for (size_t k = k_min; k <= k_max; ++k) {
        if (v < k) break;
        emit(emit, v, k);
    }
    return out;
}

uint64_t chain_seed(uint64_t base_seed, const ChainSpec& spec) {
    return derive_seed(base_seed, fnv1a(spec.sizes));
}

std::string ChainVerdict::to_json() const {
    nlohmann::ordered_json j;
    j["spec"] = spec.sizes;
    j["d"] = d;
    j["predicted_gpr"] = predicted_gpr;
    j["cond1"] = flags.cond1;
    j["cond2"] = flags.cond2;
    j["cond3"] = flags.cond3;
    j["vertex_count_ok"] = flags.vertex_count_ok;
    if (experimental) j["experimental"] = nlohmann::ordered_json::parse(experimental->to_json());
    return j.dump();
}

TheoremMainReport verify_theorem_main(uint32_t d, const AnalysisOptions& opt, unsigned threads) {
    TheoremMainReport report;
    report.d = d;
    report.v = chain_vertex_count(d);
    std::vector<ChainSpec> specs = enumerate_kchains(report.v, 4, report.v);
    report.entries.resize(specs.size());

    auto process = [&](size_t i) {
        const ChainSpec& spec = specs[i];
        SweepEntry entry;
        entry.seed = chain_seed(opt.seed, spec);
        AnalysisOptions sub = opt;
        sub.seed = entry.seed;
        entry.verdict = kchain_gpr_predicate(spec, d);
        entry.verdict.experimental = analyze(k_chain(spec), d, sub);
        entry.agree = entry.verdict.predicted_gpr == is_positive(entry.verdict.experimental->gpr);
        report.entries[i] = std::move(entry);
    };

    unsigned n_threads = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(std::min<size_t>(n_threads, specs.size()));
    if (n_threads <= 1) {
        for (size_t i = 0; i < specs.size(); ++i) process(i);
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= specs.size()) return;
                try {
                    process(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    for (const SweepEntry& entry : report.entries) {
        if (!entry.agree) ++report.mismatches;
        if (entry.verdict.predicted_gpr) report.predicted_gpr.push_back(entry.verdict.spec);
        if (is_positive(entry.verdict.experimental->gpr))
            report.experimental_gpr.push_back(entry.verdict.spec);
    }
    return report;
}

BolkerRothReport verify_bolker_roth(uint32_t d, const AnalysisOptions& opt) {
    BolkerRothReport report;
    report.d = d;
    uint64_t v_cap = choose2(d + 2);
    PrimeField field(opt.modulus);
    for (uint32_t a = 1; 2ULL * a <= v_cap; ++a) {
        for (uint32_t b = a; a + static_cast<uint64_t>(b) <= v_cap; ++b) {
            Graph g = complete_bipartite(a, b);
            uint64_t best_rank = 0;
            uint64_t chain_seed = derive_seed(opt.seed, fnv1a({a, b, d}));
            for (int t = 0; t < opt.trials; ++t) {
                Realization r = random_realization(
                    g, d, field, derive_seed(derive_seed(chain_seed, t), 0));
                best_rank = std::max(best_rank, static_cast<uint64_t>(rank(rigidity_matrix(g, r))));
            }
            BolkerRothEntry entry;
            entry.a = a;
            entry.b = b;
            entry.formula = bolker_roth_dim(a, b, d);
            entry.measured = g.edge_count() - best_rank;
            if (entry.formula != entry.measured) ++report.mismatches;
            report.entries.push_back(entry);
        }
    }
    return report;
}

HendricksonReport verify_hendrickson(uint32_t d, int samples, uint32_t v_max,
                                     const AnalysisOptions& opt) {
    if (v_max < d + 2) throw std::invalid_argument("verify_hendrickson: v_max must be >= d+2");
    HendricksonReport report;
    report.d = d;
    report.samples = samples;
    for (int i = 0; i < samples; ++i) {
        uint64_t sample_seed = derive_seed(opt.seed, 0xA0000000ULL + i);
        SeededRng rng(sample_seed);
        uint32_t v = d + 2 + static_cast<uint32_t>(rng.next_below(v_max - (d + 2) + 1));
        double density = 0.35 + 0.6 * static_cast<double>(rng.next_below(1000)) / 999.0;
        Graph g = random_graph(v, density, rng);
        AnalysisOptions sub = opt;
        sub.seed = derive_seed(sample_seed, 1);
        RigidityReport rep = analyze(g, d, sub);
        if (rep.ggr == Verdict::yes) {
            ++report.ggr_count;
            if (rep.connectivity < d + 1 || rep.grr != Verdict::yes)
                report.violations.push_back(HendricksonViolation{g, sub.seed, rep});
        }
    }
    return report;
}

ConingReport verify_coning(uint32_t d, int samples, uint32_t v_max, const AnalysisOptions& opt,
                           int extra_trials) {
    if (v_max < d + 2) throw std::invalid_argument("verify_coning: v_max must be >= d+2");
    ConingReport report;
    report.d = d;
    report.samples = samples;
    auto triple = [](const RigidityReport& r) {
        return std::array<bool, 3>{is_positive(r.glr), is_positive(r.grr), is_positive(r.ggr)};
    };
    for (int i = 0; i < samples; ++i) {
        uint64_t sample_seed = derive_seed(opt.seed, 0xC0000000ULL + i);
        SeededRng rng(sample_seed);
        uint32_t v = d + 2 + static_cast<uint32_t>(rng.next_below(v_max - (d + 2) + 1));
        double density = 0.35 + 0.6 * static_cast<double>(rng.next_below(1000)) / 999.0;
        Graph g = random_graph(v, density, rng);
        Graph coned = cone(g);
        AnalysisOptions sub = opt;
        sub.seed = derive_seed(sample_seed, 1);
        RigidityReport base = analyze(g, d, sub);
        RigidityReport lifted = analyze(coned, d + 1, sub);
        if (triple(base) != triple(lifted)) {
            // A randomized verdict may simply have been unlucky; replay both
            // sides with extra trials before calling it a disagreement.
            ++report.replays;
            AnalysisOptions retry = sub;
            retry.trials += extra_trials;
            base = analyze(g, d, retry);
            lifted = analyze(coned, d + 1, retry);
            if (triple(base) != triple(lifted))
                report.disagreements.push_back(ConingDisagreement{g, retry.seed, base, lifted});
        }
    }
    return report;
}

}  // namespace rigidlab
