#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree::detail {

// Mutable tombstone view over a finalized Graph used by the elimination-style
// passes (2-tree recognition, PEO, vertex pruning, pyramid counting).
// A vertex is alive until removed; an edge is alive iff both endpoints are.
class WorkingGraph {
public:
    explicit WorkingGraph(const Graph& g) : g_(&g), degree_(g.id_bound(), kDead) {
        for (VertexId v : g.vertices()) degree_[v] = g.degree(v);
        n_alive_ = g.vertex_count();
    }

    bool alive(VertexId v) const { return degree_[v] != kDead; }
    int degree(VertexId v) const { return degree_[v]; }
    std::size_t alive_count() const { return n_alive_; }

    bool edge_alive(VertexId u, VertexId v) const {
        return alive(u) && alive(v) && g_->has_edge(u, v);
    }

    // Alive neighbors of a degree-2 vertex, ascending.
    std::pair<VertexId, VertexId> two_neighbors(VertexId v) const {
        VertexId a = -1, b = -1;
        for (VertexId w : g_->neighbors(v)) {
            if (!alive(w)) continue;
            if (a == -1)
                a = w;
            else {
                b = w;
                break;
            }
        }
        return {a, b};
    }

    std::vector<VertexId> alive_neighbors(VertexId v) const {
        std::vector<VertexId> out;
        for (VertexId w : g_->neighbors(v))
            if (alive(w)) out.push_back(w);
        return out;
    }

    // Removes a degree-2 vertex whose alive neighbors are already known.
    void remove_degree2(VertexId v, VertexId a, VertexId b) {
        degree_[v] = kDead;
        --n_alive_;
        --degree_[a];
        --degree_[b];
    }

    // Removes v; returns its alive neighbors so callers can react to the
    // degree drops.
    std::vector<VertexId> remove_vertex(VertexId v) {
        auto nbrs = alive_neighbors(v);
        degree_[v] = kDead;
        --n_alive_;
        for (VertexId w : nbrs) --degree_[w];
        return nbrs;
    }

    std::vector<VertexId> alive_vertices() const {
        std::vector<VertexId> out;
        out.reserve(n_alive_);
        for (VertexId v = 0; v < static_cast<VertexId>(degree_.size()); ++v)
            if (alive(v)) out.push_back(v);
        return out;
    }

private:
    static constexpr int kDead = -1;
    const Graph* g_;
    std::vector<int> degree_;
    std::size_t n_alive_ = 0;
};

// Candidate-id set popped in ascending order with lazy re-validation at pop
// time.  Hierarchical 64-ary bitmap: constant-time set/clear/find-min with a
// footprint of bound/8 bytes plus summaries, which stays cache-resident even
// for million-vertex graphs.
class IdHeap {
public:
    explicit IdHeap(int bound) {
        int n = std::max(bound, 1);
        do {
            n = (n + 63) / 64;
            levels_.emplace_back(n, 0);
        } while (n > 1);
    }

    void push(VertexId v) {
        for (auto& lvl : levels_) {
            std::uint64_t& w = lvl[v >> 6];
            std::uint64_t bit = 1ull << (v & 63);
            if (w & bit) break;
            w |= bit;
            v >>= 6;
        }
    }

    bool empty() const { return levels_.back()[0] == 0; }

    // Removes and returns the smallest id; -1 when empty.
    VertexId pop() {
        if (empty()) return -1;
        int idx = std::countr_zero(levels_.back()[0]);
        for (int l = static_cast<int>(levels_.size()) - 2; l >= 0; --l)
            idx = (idx << 6) + std::countr_zero(levels_[l][idx]);
        VertexId v = idx;
        for (auto& lvl : levels_) {
            std::uint64_t& w = lvl[v >> 6];
            w &= ~(1ull << (v & 63));
            if (w) break;
            v >>= 6;
        }
        return idx;
    }

private:
    std::vector<std::vector<std::uint64_t>> levels_;
};

// Flat slot index over the (a < b) halves of a finalized graph's edges;
// lets per-edge state live in arrays instead of hash maps.
struct EdgeSlots {
    std::vector<int> base;        // size id_bound()+1
    std::vector<VertexId> cols;   // ascending per row

    EdgeSlots(std::vector<int> b, std::vector<VertexId> c)
        : base(std::move(b)), cols(std::move(c)) {}

    explicit EdgeSlots(const Graph& g) {
        VertexId bound = g.id_bound();
        base.assign(bound + 1, 0);
        cols.reserve(g.edge_count());
        for (VertexId v = 0; v < bound; ++v) {
            base[v] = static_cast<int>(cols.size());
            if (g.has_vertex(v)) {
                auto nb = g.neighbors(v);
                auto it = std::upper_bound(nb.begin(), nb.end(), v);
                cols.insert(cols.end(), it, nb.end());
            }
        }
        base[bound] = static_cast<int>(cols.size());
    }

    int slot(EdgeKey e) const {
        auto lo = cols.begin() + base[e.a];
        auto hi = cols.begin() + base[e.a + 1];
        auto it = std::lower_bound(lo, hi, e.b);
        if (it == hi || *it != e.b) return -1;
        return static_cast<int>(it - cols.begin());
    }

    std::size_t size() const { return cols.size(); }

    EdgeKey key_of(int slot_id) const {
        auto row = std::upper_bound(base.begin(), base.end(), slot_id) - base.begin() - 1;
        return EdgeKey(static_cast<VertexId>(row), cols[slot_id]);
    }
};

}  // namespace twotree::detail
