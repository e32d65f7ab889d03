#include "twotree/graph.hpp"

#include <algorithm>
#include <stack>

namespace twotree {

Graph Graph::with_vertices(int n) {
    Graph g;
    g.present_.assign(n, 1);
    g.n_vertices_ = static_cast<std::size_t>(n);
    return g;
}

void Graph::add_vertex(VertexId v) {
    if (v < 0) throw Error(Errc::MissingVertex, "negative vertex id");
    if (finalized_) throw Error(Errc::PreconditionViolated, "graph already finalized");
    if (v >= static_cast<VertexId>(present_.size())) present_.resize(v + 1, 0);
    if (!present_[v]) {
        present_[v] = 1;
        ++n_vertices_;
    }
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw Error(Errc::PreconditionViolated, "self-loop rejected");
    add_vertex(u);
    add_vertex(v);
    pending_.emplace_back(u, v);
    ++n_edges_;
}

void Graph::pack() {
    VertexId bound = id_bound();
    offset_.assign(bound + 1, 0);
    for (auto [u, v] : pending_) {
        ++offset_[u + 1];
        ++offset_[v + 1];
    }
    for (VertexId v = 0; v < bound; ++v) offset_[v + 1] += offset_[v];
    nbrs_.resize(pending_.size() * 2);
    std::vector<int> cursor(offset_.begin(), offset_.end() - 1);
    for (auto [u, v] : pending_) {
        nbrs_[cursor[u]++] = v;
        nbrs_[cursor[v]++] = u;
    }
    pending_.clear();
    pending_.shrink_to_fit();
    for (VertexId v = 0; v < bound; ++v) {
        auto lo = nbrs_.begin() + offset_[v];
        auto hi = nbrs_.begin() + offset_[v + 1];
        std::sort(lo, hi);
        if (std::adjacent_find(lo, hi) != hi)
            throw Error(Errc::PreconditionViolated,
                        "parallel edge at vertex " + std::to_string(v));
    }
}

void Graph::finalize() {
    if (finalized_) return;
    pack();
    finalized_ = true;
}

void Graph::require_vertex(VertexId v) const {
    if (!has_vertex(v))
        throw Error(Errc::MissingVertex, "missing vertex " + std::to_string(v));
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    require_vertex(v);
    return {nbrs_.data() + offset_[v], nbrs_.data() + offset_[v + 1]};
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    int du = offset_[u + 1] - offset_[u];
    int dv = offset_[v + 1] - offset_[v];
    VertexId base = du <= dv ? u : v;
    VertexId probe = du <= dv ? v : u;
    auto lo = nbrs_.begin() + offset_[base];
    auto hi = nbrs_.begin() + offset_[base + 1];
    return std::binary_search(lo, hi, probe);
}

int Graph::degree(VertexId v) const {
    require_vertex(v);
    return offset_[v + 1] - offset_[v];
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(n_vertices_);
    for (VertexId v = 0; v < id_bound(); ++v)
        if (present_[v]) out.push_back(v);
    return out;
}

std::vector<EdgeKey> Graph::edges() const {
    std::vector<EdgeKey> out;
    out.reserve(n_edges_);
    for (VertexId v = 0; v < id_bound(); ++v) {
        if (!present_[v]) continue;
        for (int i = offset_[v]; i < offset_[v + 1]; ++i)
            if (nbrs_[i] > v) out.emplace_back(v, nbrs_[i]);
    }
    return out;
}

VertexId Graph::min_vertex() const {
    for (VertexId v = 0; v < id_bound(); ++v)
        if (present_[v]) return v;
    return -1;
}

namespace {

// Shared CSR rebuild: keeps vertex ids, drops vertices/edges per the
// predicates.
template <typename VertexKeep, typename EdgeKeep>
Graph filter_graph(const Graph& g, VertexKeep keep_vertex, EdgeKeep keep_edge) {
    Graph out;
    for (VertexId v = 0; v < g.id_bound(); ++v)
        if (g.has_vertex(v) && keep_vertex(v)) out.add_vertex(v);
    for (VertexId v = 0; v < g.id_bound(); ++v) {
        if (!g.has_vertex(v) || !keep_vertex(v)) continue;
        for (VertexId w : g.neighbors(v)) {
            if (w <= v || !keep_vertex(w)) continue;
            if (!keep_edge(v, w)) continue;
            out.add_edge(v, w);
        }
    }
    out.finalize();
    return out;
}

}  // namespace

Graph Graph::without_vertices(const std::vector<VertexId>& removed) const {
    std::vector<char> dead(present_.size(), 0);
    for (VertexId v : removed) {
        require_vertex(v);
        dead[v] = 1;
    }
    return filter_graph(*this, [&](VertexId v) { return !dead[v]; },
                        [](VertexId, VertexId) { return true; });
}

Graph Graph::without_edges(const std::vector<EdgeKey>& removed) const {
    std::vector<EdgeKey> gone(removed);
    std::sort(gone.begin(), gone.end());
    gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
    return filter_graph(*this, [](VertexId) { return true; },
                        [&](VertexId u, VertexId v) {
                            return !std::binary_search(gone.begin(), gone.end(), EdgeKey(u, v));
                        });
}

Graph Graph::induced(const std::vector<VertexId>& keep) const {
    std::vector<char> in(present_.size(), 0);
    for (VertexId v : keep) {
        require_vertex(v);
        in[v] = 1;
    }
    return filter_graph(*this, [&](VertexId v) { return in[v] != 0; },
                        [](VertexId, VertexId) { return true; });
}

bool Graph::operator==(const Graph& o) const {
    if (n_vertices_ != o.n_vertices_ || n_edges_ != o.n_edges_) return false;
    VertexId hi = std::max(id_bound(), o.id_bound());
    for (VertexId v = 0; v < hi; ++v) {
        bool a = has_vertex(v), b = o.has_vertex(v);
        if (a != b) return false;
        if (a) {
            auto na = neighbors(v);
            auto nb = o.neighbors(v);
            if (!std::equal(na.begin(), na.end(), nb.begin(), nb.end())) return false;
        }
    }
    return true;
}

std::vector<VertexId> common_neighbors(const Graph& g, EdgeKey e) {
    if (!g.has_edge(e))
        throw Error(Errc::MissingEdge, "missing edge (" + std::to_string(e.a) + "," +
                                           std::to_string(e.b) + ")");
    auto na = g.neighbors(e.a);
    auto nb = g.neighbors(e.b);
    std::vector<VertexId> out;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                          std::back_inserter(out));
    return out;
}

std::vector<EdgeKey> close_of_vertex(const Graph& g, VertexId v) {
    auto nb = g.neighbors(v);
    std::vector<EdgeKey> out;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (g.has_edge(nb[i], nb[j])) out.emplace_back(nb[i], nb[j]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<VertexId>> components(const Graph& g,
                                              const std::vector<VertexId>& removed) {
    std::vector<char> blocked(g.id_bound(), 0);
    for (VertexId v : removed) {
        if (!g.has_vertex(v))
            throw Error(Errc::MissingVertex, "removed vertex not in graph");
        blocked[v] = 1;
    }
    std::vector<char> seen(g.id_bound(), 0);
    std::vector<std::vector<VertexId>> comps;
    std::vector<VertexId> stack;
    for (VertexId start = 0; start < g.id_bound(); ++start) {
        if (!g.has_vertex(start) || blocked[start] || seen[start]) continue;
        std::vector<VertexId> comp;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v)) {
                if (blocked[w] || seen[w]) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace detail {

int BlockData::block_of_edge(EdgeKey e) const {
    auto it = std::lower_bound(edge_block_sorted.begin(), edge_block_sorted.end(), e,
                               [](const auto& p, const EdgeKey& k) { return p.first < k; });
    if (it == edge_block_sorted.end() || it->first != e) return -1;
    return it->second;
}

BlockData block_data(const Graph& g) {
    BlockData out;
    VertexId bound = g.id_bound();
    std::vector<int> disc(bound, -1), low(bound, 0);
    std::vector<char> cut(bound, 0);
    std::vector<EdgeKey> edge_stack;
    int timer = 0;

    // Iterative DFS frame: vertex, parent, index into neighbor list.
    struct Frame {
        VertexId v;
        VertexId parent;
        std::size_t next;
        int children;
    };
    std::vector<Frame> stack;

    auto pop_block = [&](EdgeKey until) {
        std::vector<VertexId> verts;
        std::vector<EdgeKey> edges;
        while (!edge_stack.empty()) {
            EdgeKey e = edge_stack.back();
            edge_stack.pop_back();
            edges.push_back(e);
            verts.push_back(e.a);
            verts.push_back(e.b);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::sort(edges.begin(), edges.end());
        out.block_vertices.push_back(std::move(verts));
        out.block_edges.push_back(std::move(edges));
    };

    for (VertexId root = 0; root < bound; ++root) {
        if (!g.has_vertex(root) || disc[root] != -1) continue;
        ++out.n_components;
        if (g.degree(root) == 0) {
            // Isolated vertex: degenerate single-vertex block.
            disc[root] = timer++;
            out.block_vertices.push_back({root});
            out.block_edges.push_back({});
            continue;
        }
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                VertexId w = nb[f.next++];
                if (w == f.parent) continue;  // simple graph: exactly one parent edge
                if (disc[w] == -1) {
                    ++f.children;
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& up = stack.back();
                    low[up.v] = std::min(low[up.v], low[done.v]);
                    if (low[done.v] >= disc[up.v]) {
                        pop_block(EdgeKey(up.v, done.v));
                        if (up.parent != -1 || up.children > 1) cut[up.v] = 1;
                    }
                }
            }
        }
    }

    out.is_cut.assign(bound, 0);
    for (VertexId v = 0; v < bound; ++v) out.is_cut[v] = cut[v];
    out.vertex_blocks.assign(bound, {});
    for (int b = 0; b < static_cast<int>(out.block_vertices.size()); ++b) {
        for (VertexId v : out.block_vertices[b]) out.vertex_blocks[v].push_back(b);
        for (EdgeKey e : out.block_edges[b]) out.edge_block_sorted.emplace_back(e, b);
    }
    std::sort(out.edge_block_sorted.begin(), out.edge_block_sorted.end());
    return out;
}

}  // namespace detail

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
    auto data = detail::block_data(g);
    if (data.n_components > 1)
        throw Error(Errc::Disconnected, "blocks_and_cut_vertices requires a connected graph");
    BlockDecomposition out;
    out.blocks = data.block_vertices;
    for (VertexId v = 0; v < static_cast<VertexId>(data.is_cut.size()); ++v)
        if (data.is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

}  // namespace twotree
