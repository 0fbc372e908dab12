#ifndef RIGIDLAB_RIGIDITY_HPP
#define RIGIDLAB_RIGIDITY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rigidlab/graph.hpp"
#include "rigidlab/matrix.hpp"
#include "rigidlab/random.hpp"

namespace rigidlab {

inline constexpr uint64_t kDefaultSeed = 1729;

// Randomized verdicts are one-sided: "yes" and "no" are certified by a
// witness (a rank/nullity hit, or an exact degenerate case), while
// "probably_no"/"probably_yes" record that every trial fell short.
enum class Verdict { yes, no, probably_yes, probably_no };

std::string_view to_string(Verdict v);
bool is_positive(Verdict v);

// Field-valued stand-in for a generic placement: v*d fresh field elements,
// reproducible from (d, seed, modulus).
struct Realization {
    uint32_t dimension = 0;
    std::vector<uint64_t> coords;  // vertex-major, length v*d
    uint64_t seed = 0;
    PrimeField field;

    uint32_t vertex_count() const {
        return dimension == 0 ? 0 : static_cast<uint32_t>(coords.size() / dimension);
    }
    uint64_t coord(uint32_t vertex, uint32_t k) const {
        return coords[static_cast<size_t>(vertex) * dimension + k];
    }
};

// Equilibrium stress: one field value per edge, in canonical edge order,
// with the weighted neighbor differences summing to zero at every vertex.
struct Stress {
    std::vector<uint64_t> values;
};

struct AnalysisOptions {
    uint64_t seed = kDefaultSeed;
    uint64_t modulus = kDefaultModulus;
    int trials = 3;
    // Re-derive rank from the untransposed matrix, re-check equilibrium
    // sums and the stress-matrix kernel on every trial; violations throw.
    bool check_invariants = true;
    // Also run the remove-and-retest redundancy route and require agreement
    // with the stress-support route.
    bool cross_check_redundancy = false;
};

struct RigidityReport {
    uint32_t v = 0;
    uint64_t e = 0;
    uint32_t d = 0;
    Verdict glr = Verdict::probably_no;
    Verdict grr = Verdict::probably_no;
    Verdict ggr = Verdict::probably_no;
    Verdict gpr = Verdict::no;
    uint32_t connectivity = 0;
    uint64_t rigidity_rank = 0;
    uint64_t stress_dim = 0;
    uint64_t stress_matrix_nullity = 0;
    std::vector<Edge> non_redundant_edges;
    int trials = 0;
    uint64_t seed = 0;
    uint64_t modulus = 0;

    std::string to_json() const;  // stable field order, no whitespace
    std::string to_text() const;
};

// vd - C(d+1,2); the generic rank of a rigid graph. Requires v >= d+1.
uint64_t rank_target(uint32_t v, uint32_t d);

Realization random_realization(const Graph& g, uint32_t d, const PrimeField& field,
                               uint64_t seed);

// e x vd matrix; the row of edge {i,j} carries p_j - p_i in vertex i's d
// columns and p_i - p_j in vertex j's, rows in canonical edge order.
FieldMatrix rigidity_matrix(const Graph& g, const Realization& r);

// Stresses are ker(df^T); dimension equals e - rank(df).
size_t stress_dim(const Graph& g, const Realization& r);
std::vector<Stress> stress_basis(const Graph& g, const Realization& r);

// Random field-linear combination of the stress basis (zero stress when the
// space is trivial).
Stress random_stress(const Graph& g, const Realization& r, SeededRng& rng);

// Symmetric v x v lift: omega on edges, zero on non-edges, diagonal set so
// every row sums to zero.
FieldMatrix stress_matrix(const Graph& g, const Stress& s, const PrimeField& field);

struct GlrResult {
    Verdict verdict;
    uint64_t best_rank;
    uint64_t target;
    int trials_used;
};

// Rank test; a single trial reaching the target certifies yes (random
// specialization can only lose rank, never gain it). Throws
// std::domain_error when v < d+1, where the rank criterion does not apply.
GlrResult glr(const Graph& g, uint32_t d, const AnalysisOptions& opt = {});

struct GgrResult {
    Verdict verdict;
    uint64_t best_nullity;  // minimum stress-matrix nullity observed
    int trials_used;
};

// Stress-matrix nullity test: yes iff some trial's random stress matrix has
// nullity exactly d+1. Complete graphs short-circuit to yes; an observed
// zero-dimensional stress space on a non-complete graph with v >= d+2
// certifies no.
GgrResult ggr(const Graph& g, uint32_t d, const AnalysisOptions& opt = {});

struct EdgePartition {
    std::vector<Edge> redundant;
    std::vector<Edge> non_redundant;
    bool slow_path = false;  // direct remove-and-retest route was used
};

// An edge is redundant iff the stress space contains a vector that is
// nonzero on it; certificates are only drawn from trials whose rank reached
// the GLR target. Falls back to remove-and-retest when the graph is not
// certified GLR.
EdgePartition redundant_edges(const Graph& g, uint32_t d, const AnalysisOptions& opt = {});

struct GrrResult {
    Verdict verdict;
    std::vector<Edge> non_redundant;
};

GrrResult grr(const Graph& g, uint32_t d, const AnalysisOptions& opt = {});

// Full report: GLR, per-edge redundancy, GRR, exact vertex connectivity,
// GGR, and the partial-rigidity verdict
//   gpr = (v >= d+2) and glr and grr and connectivity >= d+1 and not ggr.
RigidityReport analyze(const Graph& g, uint32_t d, const AnalysisOptions& opt = {});

}  // namespace rigidlab

#endif
