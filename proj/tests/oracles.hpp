#ifndef RIGIDLAB_TESTS_ORACLES_HPP
#define RIGIDLAB_TESTS_ORACLES_HPP

// Test-only oracles, deliberately independent of the library's elimination
// and max-flow code paths: minor-based rank, a from-scratch PLU, exhaustive
// vertex cuts, and brute-force composition enumeration.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rigidlab/field.hpp"
#include "rigidlab/graph.hpp"
#include "rigidlab/matrix.hpp"
#include "rigidlab/rigidity.hpp"

namespace oracles {

using rigidlab::FieldMatrix;
using rigidlab::Graph;
using rigidlab::PrimeField;

// Laplace-expansion determinant of the submatrix picked out by rows/cols.
inline uint64_t laplace_det(const FieldMatrix& m, std::vector<size_t> rows,
                            std::vector<size_t> cols) {
    const PrimeField& f = m.field();
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    uint64_t det = 0;
    std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < cols.size(); ++j) {
        uint64_t entry = m.at(rows[0], cols[j]);
        if (entry == 0) continue;
        std::vector<size_t> sub_cols;
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        uint64_t minor = laplace_det(m, sub_rows, sub_cols);
        uint64_t term = f.mul(entry, minor);
        det = (j % 2 == 0) ? f.add(det, term) : f.sub(det, term);
    }
    return det;
}

template <typename Visit>
inline bool for_each_combination(size_t n, size_t k, Visit visit) {
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return false;
    for (;;) {
        if (visit(idx)) return true;
        size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Largest r such that some r x r minor is nonsingular.
inline size_t minor_rank(const FieldMatrix& m) {
    size_t bound = std::min(m.rows(), m.cols());
    size_t best = 0;
    for (size_t r = 1; r <= bound; ++r) {
        bool found = for_each_combination(m.rows(), r, [&](const std::vector<size_t>& rows) {
            return for_each_combination(m.cols(), r, [&](const std::vector<size_t>& cols) {
                return laplace_det(m, rows, cols) != 0;
            });
        });
        if (!found) break;
        best = r;
    }
    return best;
}

// From-scratch PLU decomposition; returns false if L*U fails to reproduce
// the row-permuted input exactly. rank_out counts nonzero rows of U.
inline bool plu_reproduces(const FieldMatrix& a, size_t& rank_out) {
    const PrimeField& f = a.field();
    size_t n = a.rows(), m = a.cols();
    FieldMatrix u = a;
    FieldMatrix l = FieldMatrix::identity(n, f);
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    size_t row = 0;
    for (size_t col = 0; col < m && row < n; ++col) {
        size_t sel = row;
        while (sel < n && u.at(sel, col) == 0) ++sel;
        if (sel == n) continue;
        if (sel != row) {
            for (size_t j = 0; j < m; ++j) {
                uint64_t tmp = u.at(sel, j);
                u.set(sel, j, u.at(row, j));
                u.set(row, j, tmp);
            }
            // keep L unit lower triangular under the row swap
            for (size_t j = 0; j < row; ++j) {
                uint64_t tmp = l.at(sel, j);
                l.set(sel, j, l.at(row, j));
                l.set(row, j, tmp);
            }
            std::swap(perm[sel], perm[row]);
        }
        uint64_t pivot_inv = f.inv(u.at(row, col));
        for (size_t i = row + 1; i < n; ++i) {
            uint64_t factor = f.mul(u.at(i, col), pivot_inv);
            if (factor == 0) continue;
            l.set(i, row, factor);
            for (size_t j = col; j < m; ++j)
                u.set(i, j, f.sub(u.at(i, j), f.mul(factor, u.at(row, j))));
        }
        ++row;
    }
    rank_out = 0;
    for (size_t i = 0; i < n; ++i) {
        bool nonzero = false;
        for (size_t j = 0; j < m; ++j)
            if (u.at(i, j) != 0) nonzero = true;
        if (nonzero) ++rank_out;
    }
    FieldMatrix pa(n, m, f);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) pa.set(i, j, a.at(perm[i], j));
    return rigidlab::mat_mul(l, u) == pa;
}

inline bool connected_after_removal(const Graph& g, const std::vector<bool>& removed) {
    uint32_t v = g.vertex_count();
    auto adj = g.adjacency();
    uint32_t start = v;
    uint32_t alive = 0;
    for (uint32_t i = 0; i < v; ++i) {
        if (!removed[i]) {
            ++alive;
            if (start == v) start = i;
        }
    }
    if (alive <= 1) return true;
    std::vector<bool> seen(v, false);
    std::vector<uint32_t> stack{start};
    seen[start] = true;
    uint32_t reached = 1;
    while (!stack.empty()) {
        uint32_t u = stack.back();
        stack.pop_back();
        for (uint32_t w : adj[u]) {
            if (!removed[w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == alive;
}

// Exhaustive minimum vertex cut; complete graphs use the v-1 convention.
inline uint32_t brute_connectivity(const Graph& g) {
    uint32_t v = g.vertex_count();
    if (v <= 1) return 0;
    if (g.is_complete()) return v - 1;
    std::vector<bool> removed(v, false);
    if (!connected_after_removal(g, removed)) return 0;
    for (uint32_t size = 1; size + 2 <= v; ++size) {
        bool found = for_each_combination(v, size, [&](const std::vector<size_t>& cut) {
            std::fill(removed.begin(), removed.end(), false);
            for (size_t x : cut) removed[x] = true;
            return !connected_after_removal(g, removed);
        });
        if (found) return size;
    }
    return v - 1;
}

// Every composition of v into parts >= 1 (not deduplicated).
inline std::vector<std::vector<uint32_t>> all_compositions(uint32_t v) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> parts;
    auto rec = [&](auto&& self, uint32_t remaining) -> void {
        if (remaining == 0) {
            out.push_back(parts);
            return;
        }
        for (uint32_t first = 1; first <= remaining; ++first) {
            parts.push_back(first);
            self(self, remaining - first);
            parts.pop_back();
        }
    };
    rec(rec, v);
    return out;
}

// Per-vertex equilibrium residual recomputed from the definition.
inline bool equilibrium_ok(const Graph& g, const rigidlab::Realization& r,
                           const rigidlab::Stress& s) {
    const PrimeField& f = r.field;
    uint32_t d = r.dimension;
    for (uint32_t i = 0; i < g.vertex_count(); ++i) {
        for (uint32_t k = 0; k < d; ++k) {
            uint64_t acc = 0;
            size_t idx = 0;
            for (const rigidlab::Edge& e : g.edges()) {
                uint64_t w = s.values[idx++];
                if (e.u == i)
                    acc = f.add(acc, f.mul(w, f.sub(r.coord(e.v, k), r.coord(i, k))));
                else if (e.v == i)
                    acc = f.add(acc, f.mul(w, f.sub(r.coord(e.u, k), r.coord(i, k))));
            }
            if (acc != 0) return false;
        }
    }
    return true;
}

}  // namespace oracles

#endif
