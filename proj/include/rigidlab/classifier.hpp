#ifndef RIGIDLAB_CLASSIFIER_HPP
#define RIGIDLAB_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigidlab/graph.hpp"
#include "rigidlab/rigidity.hpp"

namespace rigidlab {

// Closed-form conditions behind the k-chain partial-rigidity predicate
// (k >= 4):
//   cond1: every interior block has at least d+1 vertices,
//   cond2: the two blocks adjacent to the ends have at least d+2,
//   cond3: no two consecutive blocks both have exactly d+1,
//   vertex_count_ok: the chain has exactly C(d+2,2) vertices.
// For k <= 3 the chain is a complete bipartite graph and the flags mirror
// the bipartite conditions (both sides >= d+2, same vertex count).
struct ConditionFlags {
    bool cond1 = false;
    bool cond2 = false;
    bool cond3 = false;
    bool vertex_count_ok = false;
    bool all() const { return cond1 && cond2 && cond3 && vertex_count_ok; }
};

struct ChainVerdict {
    ChainSpec spec;
    uint32_t d = 0;
    bool predicted_gpr = false;
    ConditionFlags flags;
    std::optional<RigidityReport> experimental;

    std::string to_json() const;  // single JSON line
};

ChainVerdict kchain_gpr_predicate(const ChainSpec& spec, uint32_t d);

// Generic stress-space dimension of K_{a,b} with a+b <= C(d+2,2):
// (a-d-1)(b-d-1), or 0 when either side is below d+1. Throws
// std::out_of_range when a+b exceeds C(d+2,2).
uint64_t bolker_roth_dim(uint32_t a, uint32_t b, uint32_t d);

// Stress dimension of a chain via its 3-chain cover: e - v(d+1) + (d+1)^2.
// Requires cond1 and exactly C(d+2,2) vertices; equals e - vd + C(d+1,2)
// under that vertex count.
uint64_t chain_cover_stress_dim(const ChainSpec& spec, uint32_t d);

// All canonical (reversal-deduplicated) compositions of v into k parts,
// k_min <= k <= k_max, ordered by (k, lexicographic sizes).
std::vector<ChainSpec> enumerate_kchains(uint32_t v, size_t k_min, size_t k_max);

// Replay seed used for a chain inside sweeps; stable across runs and
// independent of enumeration order.
uint64_t chain_seed(uint64_t base_seed, const ChainSpec& spec);

// --- verification sweeps ------------------------------------------------

struct SweepEntry {
    ChainVerdict verdict;     // includes the experimental report
    bool agree = false;       // predicted_gpr == experimental gpr
    uint64_t seed = 0;        // replay seed for this chain
};

struct TheoremMainReport {
    uint32_t d = 0;
    uint32_t v = 0;
    std::vector<SweepEntry> entries;  // sorted by canonical spec
    std::vector<ChainSpec> predicted_gpr;
    std::vector<ChainSpec> experimental_gpr;
    size_t mismatches = 0;
    bool pass() const { return mismatches == 0; }
};

// Exhaustive predicate-vs-experiment sweep over all canonical k-chains with
// k >= 4 and C(d+2,2) vertices. Entries fan out across worker threads
// (0 = hardware concurrency); per-chain seeds make the result independent
// of scheduling.
TheoremMainReport verify_theorem_main(uint32_t d, const AnalysisOptions& opt = {},
                                      unsigned threads = 0);

struct BolkerRothEntry {
    uint32_t a = 0;
    uint32_t b = 0;
    uint64_t formula = 0;
    uint64_t measured = 0;
};

struct BolkerRothReport {
    uint32_t d = 0;
    std::vector<BolkerRothEntry> entries;
    size_t mismatches = 0;
    bool pass() const { return mismatches == 0; }
};

// Measured stress dimension vs. the closed formula for every a <= b with
// a, b >= d+1 and a+b <= C(d+2,2).
BolkerRothReport verify_bolker_roth(uint32_t d, const AnalysisOptions& opt = {});

struct HendricksonViolation {
    Graph graph;
    uint64_t seed = 0;
    RigidityReport report;
};

struct HendricksonReport {
    uint32_t d = 0;
    int samples = 0;
    int ggr_count = 0;  // how many sampled graphs came out GGR
    std::vector<HendricksonViolation> violations;
    bool pass() const { return violations.empty(); }
};

// Samples random graphs and checks the necessity direction: every GGR graph
// must be (d+1)-connected and redundantly rigid.
HendricksonReport verify_hendrickson(uint32_t d, int samples, uint32_t v_max,
                                     const AnalysisOptions& opt = {});

struct ConingDisagreement {
    Graph graph;
    uint64_t seed = 0;
    RigidityReport base;
    RigidityReport coned;
};

struct ConingReport {
    uint32_t d = 0;
    int samples = 0;
    int replays = 0;  // disagreements that were retried with extra trials
    std::vector<ConingDisagreement> disagreements;
    bool pass() const { return disagreements.empty(); }
};

// Samples random graphs and compares the (GLR, GRR, GGR) verdict triple at
// dimension d with the cone's triple at d+1. A disagreement is replayed
// with extra_trials more trials on both sides before it counts.
ConingReport verify_coning(uint32_t d, int samples, uint32_t v_max,
                           const AnalysisOptions& opt = {}, int extra_trials = 5);

}  // namespace rigidlab

#endif
