#include <algorithm>
#include <cstring>
#include <queue>
#include <vector>

#include "rigidlab/graph.hpp"

namespace rigidlab {

namespace {

// Vertex-split flow network for Menger's theorem: every vertex x becomes an
// arc in(x) -> out(x) of capacity 1, and each undirected edge {u,w} becomes
// out(u) -> in(w) and out(w) -> in(u) with effectively unbounded capacity.
// The max flow from out(s) to in(t) equals the number of internally
// vertex-disjoint s-t paths.
struct SplitNetwork {
    int n = 0;                 // 2 * vertex count
    std::vector<int> base_cap;  // n*n capacity matrix
    std::vector<int> cap;       // working copy

    explicit SplitNetwork(const Graph& g) {
        uint32_t v = g.vertex_count();
        n = static_cast<int>(2 * v);
        base_cap.assign(static_cast<size_t>(n) * n, 0);
        int big = static_cast<int>(v) + 1;
        for (uint32_t x = 0; x < v; ++x) base_cap[in(x) * n + out(x)] = 1;
        for (const Edge& e : g.edges()) {
            base_cap[out(e.u) * n + in(e.v)] = big;
            base_cap[out(e.v) * n + in(e.u)] = big;
        }
    }

    static int in(uint32_t x) { return static_cast<int>(2 * x); }
    static int out(uint32_t x) { return static_cast<int>(2 * x + 1); }

    // Edmonds-Karp from out(s) to in(t), stopping once `limit` is reached.
    int max_flow(uint32_t s, uint32_t t, int limit) {
        cap = base_cap;
        int source = out(s);
        int sink = in(t);
        int flow = 0;
        std::vector<int> parent(n);
        while (flow < limit) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[source] = source;
            std::queue<int> q;
            q.push(source);
            while (!q.empty() && parent[sink] < 0) {
                int u = q.front();
                q.pop();
                const int* row = cap.data() + static_cast<size_t>(u) * n;
                for (int w = 0; w < n; ++w) {
                    if (row[w] > 0 && parent[w] < 0) {
                        parent[w] = u;
                        q.push(w);
                    }
                }
            }
            if (parent[sink] < 0) break;
            int bottleneck = limit - flow;
            for (int w = sink; w != source; w = parent[w])
                bottleneck = std::min(bottleneck, cap[static_cast<size_t>(parent[w]) * n + w]);
            for (int w = sink; w != source; w = parent[w]) {
                cap[static_cast<size_t>(parent[w]) * n + w] -= bottleneck;
                cap[static_cast<size_t>(w) * n + parent[w]] += bottleneck;
            }
            flow += bottleneck;
        }
        return flow;
    }
};

}  // namespace

uint32_t vertex_connectivity(const Graph& g) {
    uint32_t v = g.vertex_count();
    if (v <= 1) return 0;
    if (!g.is_connected()) return 0;
    if (g.is_complete()) return v - 1;
    // A minimum cut separates some non-adjacent pair, so the minimum of the
    // pairwise Menger values over those pairs is exact.
    SplitNetwork net(g);
    int best = static_cast<int>(v) - 1;
    for (uint32_t s = 0; s < v && best > 0; ++s) {
        for (uint32_t t = s + 1; t < v && best > 0; ++t) {
            if (g.has_edge(s, t)) continue;
            best = std::min(best, net.max_flow(s, t, best));
        }
    }
    return static_cast<uint32_t>(best);
}

bool is_k_connected(const Graph& g, uint32_t k) {
    if (k == 0) return true;
    uint32_t v = g.vertex_count();
    if (v <= 1) return false;
    if (!g.is_connected()) return false;
    if (g.is_complete()) return v - 1 >= k;
    if (v <= k) return false;  // a non-complete graph has a cut of size <= v-2
    SplitNetwork net(g);
    int need = static_cast<int>(k);
    for (uint32_t s = 0; s < v; ++s)
        for (uint32_t t = s + 1; t < v; ++t)
            if (!g.has_edge(s, t) && net.max_flow(s, t, need) < need) return false;
    return true;
}

}  // namespace rigidlab
