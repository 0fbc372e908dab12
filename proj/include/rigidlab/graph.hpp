#ifndef RIGIDLAB_GRAPH_HPP
#define RIGIDLAB_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigidlab/random.hpp"

namespace rigidlab {

// Undirected edge with endpoints stored low-high.
struct Edge {
    uint32_t u;
    uint32_t v;
    auto operator<=>(const Edge&) const = default;
};

// Immutable simple graph: a vertex count plus a canonically sorted edge set
// (ascending by (min endpoint, max endpoint)). Construction rejects self
// loops, duplicates, and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    Graph(uint32_t vertex_count, std::vector<std::pair<uint32_t, uint32_t>> edges);

    uint32_t vertex_count() const { return vertex_count_; }
    size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(uint32_t i, uint32_t j) const;
    // Position of {i,j} in canonical edge order, or -1.
    std::ptrdiff_t edge_index(uint32_t i, uint32_t j) const;

    std::vector<std::vector<uint32_t>> adjacency() const;

    bool is_complete() const;
    bool is_connected() const;

    bool operator==(const Graph&) const = default;

private:
    uint32_t vertex_count_ = 0;
    std::vector<Edge> edges_;
};

// --- constructors -----------------------------------------------------

Graph complete(uint32_t n);                              // n >= 1
Graph complete_bipartite(uint32_t a, uint32_t b);        // a, b >= 1

// Ordered block sizes (a_1, ..., a_k) of a k-chain, k >= 2. Specs that are
// reverses of each other describe isomorphic graphs; canonical_form() is
// the lexicographic minimum of (sizes, reversed sizes).
struct ChainSpec {
    std::vector<uint32_t> sizes;

    ChainSpec() = default;  // empty placeholder; the validating ctor enforces k >= 2
    explicit ChainSpec(std::vector<uint32_t> s);

    size_t k() const { return sizes.size(); }
    uint32_t vertex_total() const;
    size_t edge_total() const;
    std::vector<uint32_t> canonical_form() const;
    bool is_canonical() const;
    // First vertex index of block i under block-ordered labeling.
    uint32_t block_begin(size_t i) const;

    bool operator==(const ChainSpec&) const = default;
};

// Blocks A_1..A_k labeled consecutively (A_1 first); edges are exactly all
// pairs between consecutive blocks.
Graph k_chain(const ChainSpec& spec);

// k_chain plus all A_1 x A_k pairs; requires k >= 3.
Graph k_ring(const ChainSpec& spec);

// New vertex (index v) adjacent to every original vertex.
Graph cone(const Graph& g);

// Glue a chain onto a host graph: left/right anchors are pre-existing host
// vertices playing the roles of the chain's first and last blocks, and the
// interior blocks are fresh vertices appended after the host's.
struct AttachmentSpec {
    Graph host;
    std::vector<uint32_t> left_anchor;
    std::vector<uint32_t> right_anchor;
    std::vector<uint32_t> interior_sizes;  // nonempty, all >= 1
};

Graph attach(const AttachmentSpec& spec);

// Remove the induced subgraph on h_vertices and put h_prime in its place:
// surviving vertices keep their relative order and come first, h_prime's
// vertices follow. Boundary edges are rerouted through mapping, where
// mapping[i] is the h_prime vertex standing in for h_vertices[i].
Graph replace_subgraph(const Graph& g, const std::vector<uint32_t>& h_vertices,
                       const Graph& h_prime, const std::vector<uint32_t>& mapping);

// Remove edge {i,j}, add a new vertex adjacent to i, j, and d-1 others.
Graph hennenberg(const Graph& g, uint32_t d, uint32_t i, uint32_t j,
                 const std::vector<uint32_t>& others);

// Relabeled copy: vertex x becomes perm[x].
Graph relabel(const Graph& g, const std::vector<uint32_t>& perm);

Graph remove_edge(const Graph& g, uint32_t i, uint32_t j);
Graph add_edge(const Graph& g, uint32_t i, uint32_t j);

// Erdos-Renyi sample; each pair kept independently with the given
// probability (quantized to 32 bits for determinism).
Graph random_graph(uint32_t v, double edge_probability, SeededRng& rng);

// --- connectivity ------------------------------------------------------

// Size of a minimum vertex cut (Menger, via max-flow on the vertex-split
// digraph). Complete graphs return v-1; disconnected graphs return 0.
uint32_t vertex_connectivity(const Graph& g);

// Equivalent to vertex_connectivity(g) >= k, but flows are capped at k so
// it exits early.
bool is_k_connected(const Graph& g, uint32_t k);

// --- serialization -----------------------------------------------------

struct GraphParseError : std::runtime_error {
    size_t line;  // 1-based; 0 when no line applies (e.g. JSON input)
    GraphParseError(size_t line_number, const std::string& message);
};

// Line format: "v <count>" then one "e <i> <j>" per edge in canonical order.
std::string to_text(const Graph& g);
Graph from_text(std::string_view text);

// {"v": n, "edges": [[i,j], ...]}
std::string to_json(const Graph& g);
Graph from_json(std::string_view json_text);

}  // namespace rigidlab

#endif
