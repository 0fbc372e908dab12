#include "rigidlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rigidlab {

Graph::Graph(uint32_t vertex_count, std::vector<std::pair<uint32_t, uint32_t>> edges)
    : vertex_count_(vertex_count) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("Graph: self-loop");
        if (a > b) std::swap(a, b);
        if (b >= vertex_count_) throw std::invalid_argument("Graph: endpoint out of range");
        edges_.push_back(Edge{a, b});
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge");
}

bool Graph::has_edge(uint32_t i, uint32_t j) const { return edge_index(i, j) >= 0; }

std::ptrdiff_t Graph::edge_index(uint32_t i, uint32_t j) const {
    if (i == j) return -1;
    if (i > j) std::swap(i, j);
    Edge key{i, j};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return it - edges_.begin();
}

std::vector<std::vector<uint32_t>> Graph::adjacency() const {
    std::vector<std::vector<uint32_t>> adj(vertex_count_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

bool Graph::is_complete() const {
    return edges_.size() == static_cast<size_t>(vertex_count_) * (vertex_count_ - 1) / 2;
}

bool Graph::is_connected() const {
    if (vertex_count_ <= 1) return true;
    auto adj = adjacency();
    std::vector<bool> seen(vertex_count_, false);
    std::vector<uint32_t> stack{0};
    seen[0] = true;
    uint32_t reached = 1;
    while (!stack.empty()) {
        uint32_t u = stack.back();
        stack.pop_back();
        for (uint32_t w : adj[u]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count_;
}

Graph complete(uint32_t n) {
    if (n == 0) throw std::invalid_argument("complete: n must be positive");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(uint32_t a, uint32_t b) {
    if (a == 0 || b == 0) throw std::invalid_argument("complete_bipartite: sides must be positive");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(static_cast<size_t>(a) * b);
    for (uint32_t i = 0; i < a; ++i)
        for (uint32_t j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, std::move(edges));
}

ChainSpec::ChainSpec(std::vector<uint32_t> s) : sizes(std::move(s)) {
    if (sizes.size() < 2) throw std::invalid_argument("ChainSpec: need at least 2 blocks");
    for (uint32_t a : sizes)
        if (a == 0) throw std::invalid_argument("ChainSpec: block sizes must be positive");
}

uint32_t ChainSpec::vertex_total() const {
    return std::accumulate(sizes.begin(), sizes.end(), 0u);
}

size_t ChainSpec::edge_total() const {
    size_t e = 0;
    for (size_t i = 0; i + 1 < sizes.size(); ++i)
        e += static_cast<size_t>(sizes[i]) * sizes[i + 1];
    return e;
}

std::vector<uint32_t> ChainSpec::canonical_form() const {
    std::vector<uint32_t> rev(sizes.rbegin(), sizes.rend());
    return std::min(sizes, rev);
}

bool ChainSpec::is_canonical() const { return canonical_form() == sizes; }

uint32_t ChainSpec::block_begin(size_t i) const {
    return std::accumulate(sizes.begin(), sizes.begin() + i, 0u);
}

Graph k_chain(const ChainSpec& spec) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(spec.edge_total());
    uint32_t offset = 0;
    for (size_t i = 0; i + 1 < spec.k(); ++i) {
        uint32_t next = offset + spec.sizes[i];
        for (uint32_t a = 0; a < spec.sizes[i]; ++a)
            for (uint32_t b = 0; b < spec.sizes[i + 1]; ++b)
                edges.emplace_back(offset + a, next + b);
        offset = next;
    }
    return Graph(spec.vertex_total(), std::move(edges));
}

Graph k_ring(const ChainSpec& spec) {
    if (spec.k() < 3)
        throw std::invalid_argument("k_ring: need k >= 3 (a 2-ring would duplicate edges)");
    Graph chain = k_chain(spec);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(chain.edge_count() + static_cast<size_t>(spec.sizes.front()) * spec.sizes.back());
    for (const Edge& e : chain.edges()) edges.emplace_back(e.u, e.v);
    uint32_t last_begin = spec.block_begin(spec.k() - 1);
    for (uint32_t a = 0; a < spec.sizes.front(); ++a)
        for (uint32_t b = 0; b < spec.sizes.back(); ++b)
            edges.emplace_back(a, last_begin + b);
    return Graph(spec.vertex_total(), std::move(edges));
}

Graph cone(const Graph& g) {
    uint32_t v = g.vertex_count();
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(g.edge_count() + v);
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    for (uint32_t i = 0; i < v; ++i) edges.emplace_back(i, v);
    return Graph(v + 1, std::move(edges));
}

Graph attach(const AttachmentSpec& spec) {
    const Graph& host = spec.host;
    auto check_anchor = [&](const std::vector<uint32_t>& anchor, const char* name) {
        if (anchor.empty()) throw std::invalid_argument(std::string("attach: empty ") + name);
        std::set<uint32_t> distinct(anchor.begin(), anchor.end());
        if (distinct.size() != anchor.size())
            throw std::invalid_argument(std::string("attach: repeated vertex in ") + name);
        for (uint32_t x : anchor)
            if (x >= host.vertex_count())
                throw std::invalid_argument(std::string("attach: ") + name + " out of range");
    };
    check_anchor(spec.left_anchor, "left anchor");
    check_anchor(spec.right_anchor, "right anchor");
    for (uint32_t x : spec.left_anchor)
        for (uint32_t y : spec.right_anchor)
            if (x == y) throw std::invalid_argument("attach: anchors overlap");
    if (spec.interior_sizes.empty())
        throw std::invalid_argument("attach: interior must be nonempty");
    for (uint32_t a : spec.interior_sizes)
        if (a == 0) throw std::invalid_argument("attach: interior sizes must be positive");

    // Blocks of the glued chain: left anchor, fresh interior blocks, right
    // anchor. Interior vertices are numbered after the host's.
    std::vector<std::vector<uint32_t>> blocks;
    blocks.push_back(spec.left_anchor);
    uint32_t next = host.vertex_count();
    for (uint32_t size : spec.interior_sizes) {
        std::vector<uint32_t> block(size);
        std::iota(block.begin(), block.end(), next);
        next += size;
        blocks.push_back(std::move(block));
    }
    blocks.push_back(spec.right_anchor);

    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (const Edge& e : host.edges()) edges.emplace_back(e.u, e.v);
    for (size_t i = 0; i + 1 < blocks.size(); ++i)
        for (uint32_t a : blocks[i])
            for (uint32_t b : blocks[i + 1]) edges.emplace_back(a, b);
    return Graph(next, std::move(edges));
}

Graph replace_subgraph(const Graph& g, const std::vector<uint32_t>& h_vertices,
                       const Graph& h_prime, const std::vector<uint32_t>& mapping) {
    if (mapping.size() != h_vertices.size())
        throw std::invalid_argument("replace_subgraph: mapping size mismatch");
    std::set<uint32_t> h_set(h_vertices.begin(), h_vertices.end());
    if (h_set.size() != h_vertices.size())
        throw std::invalid_argument("replace_subgraph: repeated vertex in h_vertices");
    for (uint32_t x : h_vertices)
        if (x >= g.vertex_count())
            throw std::invalid_argument("replace_subgraph: h_vertices out of range");
    std::set<uint32_t> image(mapping.begin(), mapping.end());
    if (image.size() != mapping.size())
        throw std::invalid_argument("replace_subgraph: mapping is not injective");
    for (uint32_t y : mapping)
        if (y >= h_prime.vertex_count())
            throw std::invalid_argument("replace_subgraph: mapping out of range");

    // Survivors keep their relative order and come first; h_prime follows.
    std::vector<uint32_t> new_index(g.vertex_count(), UINT32_MAX);
    uint32_t survivors = 0;
    for (uint32_t x = 0; x < g.vertex_count(); ++x)
        if (!h_set.count(x)) new_index[x] = survivors++;

    std::vector<uint32_t> to_prime(g.vertex_count(), UINT32_MAX);
    for (size_t i = 0; i < h_vertices.size(); ++i)
        to_prime[h_vertices[i]] = survivors + mapping[i];

    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (const Edge& e : g.edges()) {
        bool u_in = h_set.count(e.u) != 0;
        bool v_in = h_set.count(e.v) != 0;
        if (u_in && v_in) continue;  // internal H edges are dropped
        if (!u_in && !v_in) {
            edges.emplace_back(new_index[e.u], new_index[e.v]);
        } else {
            uint32_t outside = u_in ? e.v : e.u;
            uint32_t inside = u_in ? e.u : e.v;
            edges.emplace_back(new_index[outside], to_prime[inside]);
        }
    }
    for (const Edge& e : h_prime.edges())
        edges.emplace_back(survivors + e.u, survivors + e.v);
    return Graph(survivors + h_prime.vertex_count(), std::move(edges));
}

Graph hennenberg(const Graph& g, uint32_t d, uint32_t i, uint32_t j,
                 const std::vector<uint32_t>& others) {
    if (d == 0) throw std::invalid_argument("hennenberg: dimension must be positive");
    if (!g.has_edge(i, j)) throw std::invalid_argument("hennenberg: edge {i,j} missing");
    if (others.size() != static_cast<size_t>(d) - 1)
        throw std::invalid_argument("hennenberg: need exactly d-1 other vertices");
    std::set<uint32_t> distinct(others.begin(), others.end());
    if (distinct.size() != others.size())
        throw std::invalid_argument("hennenberg: repeated other vertex");
    for (uint32_t x : others) {
        if (x >= g.vertex_count()) throw std::invalid_argument("hennenberg: vertex out of range");
        if (x == i || x == j)
            throw std::invalid_argument("hennenberg: others must avoid i and j");
    }
    uint32_t fresh = g.vertex_count();
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (const Edge& e : g.edges())
        if (!(e.u == std::min(i, j) && e.v == std::max(i, j)))
            edges.emplace_back(e.u, e.v);
    edges.emplace_back(i, fresh);
    edges.emplace_back(j, fresh);
    for (uint32_t x : others) edges.emplace_back(x, fresh);
    return Graph(fresh + 1, std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<uint32_t>& perm) {
    if (perm.size() != g.vertex_count())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.vertex_count(), std::move(edges));
}

Graph remove_edge(const Graph& g, uint32_t i, uint32_t j) {
    std::ptrdiff_t idx = g.edge_index(i, j);
    if (idx < 0) throw std::invalid_argument("remove_edge: edge missing");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(g.edge_count() - 1);
    for (size_t t = 0; t < g.edge_count(); ++t) {
        if (static_cast<std::ptrdiff_t>(t) == idx) continue;
        edges.emplace_back(g.edges()[t].u, g.edges()[t].v);
    }
    return Graph(g.vertex_count(), std::move(edges));
}

Graph add_edge(const Graph& g, uint32_t i, uint32_t j) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(g.edge_count() + 1);
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    edges.emplace_back(i, j);
    return Graph(g.vertex_count(), std::move(edges));
}

Graph random_graph(uint32_t v, double edge_probability, SeededRng& rng) {
    if (edge_probability < 0.0) edge_probability = 0.0;
    if (edge_probability > 1.0) edge_probability = 1.0;
    auto threshold = static_cast<uint32_t>(edge_probability * 4294967295.0);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t i = 0; i < v; ++i)
        for (uint32_t j = i + 1; j < v; ++j)
            if (rng.chance(threshold)) edges.emplace_back(i, j);
    return Graph(v, std::move(edges));
}

}  // namespace rigidlab
