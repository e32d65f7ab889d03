#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twotree {

using VertexId = int;

enum class Errc {
    MissingVertex,
    MissingEdge,
    Disconnected,
    NotTwoTree,
    PreconditionViolated,
    ConstructionFailed,
    TooLarge,
    InfeasibleProfile,
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string what) : std::runtime_error(std::move(what)), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

/// Undirected edge stored with canonical endpoint order a < b, so that
/// (u,v) and (v,u) compare equal.
struct EdgeKey {
    VertexId a = -1;
    VertexId b = -1;

    EdgeKey() = default;
    EdgeKey(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

    VertexId other(VertexId v) const { return v == a ? b : a; }
    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// Simple undirected graph with stable vertex ids.  Ids are dense at
/// construction time; deleting vertices (without_vertices) leaves holes and
/// never renumbers, so ids remain valid across pipeline stages.
///
/// Build with add_vertex/add_edge, then finalize().  Finalization packs the
/// adjacency into a flat CSR layout; finalized graphs are immutable and safe
/// to share across threads, and the without_*/induced operations return new
/// finalized graphs.
class Graph {
public:
    Graph() = default;

    static Graph with_vertices(int n);

    void add_vertex(VertexId v);
    void add_edge(VertexId u, VertexId v);
    void finalize();

    bool finalized() const { return finalized_; }
    bool has_vertex(VertexId v) const {
        return v >= 0 && v < static_cast<VertexId>(present_.size()) && present_[v];
    }
    bool has_edge(VertexId u, VertexId v) const;
    bool has_edge(EdgeKey e) const { return has_edge(e.a, e.b); }

    int degree(VertexId v) const;
    /// Neighbors in ascending id order.
    std::span<const VertexId> neighbors(VertexId v) const;

    std::size_t vertex_count() const { return n_vertices_; }
    std::size_t edge_count() const { return n_edges_; }

    /// One past the largest id ever added (array bound for id-indexed scratch).
    VertexId id_bound() const { return static_cast<VertexId>(present_.size()); }

    std::vector<VertexId> vertices() const;  // ascending
    std::vector<EdgeKey> edges() const;      // ascending
    VertexId min_vertex() const;

    Graph without_vertices(const std::vector<VertexId>& removed) const;
    Graph without_edges(const std::vector<EdgeKey>& removed) const;
    Graph induced(const std::vector<VertexId>& keep) const;

    bool operator==(const Graph& o) const;

private:
    std::vector<std::pair<VertexId, VertexId>> pending_;  // builder phase
    std::vector<char> present_;
    std::vector<int> offset_;       // CSR row starts, size id_bound()+1
    std::vector<VertexId> nbrs_;    // CSR payload, ascending per row
    std::size_t n_vertices_ = 0;
    std::size_t n_edges_ = 0;
    bool finalized_ = false;

    void require_vertex(VertexId v) const;
    void pack();
};

/// Common neighbors N(a) ∩ N(b) of an edge's endpoints, ascending.
/// This is also close(e).  Throws MissingEdge if e is not in g.
std::vector<VertexId> common_neighbors(const Graph& g, EdgeKey e);

/// close(v): all edges between pairs of neighbors of v, ascending.
std::vector<EdgeKey> close_of_vertex(const Graph& g, VertexId v);

/// Connected components of g minus `removed`, each sorted ascending,
/// ordered by smallest contained id.  Empty remainder gives an empty list.
std::vector<std::vector<VertexId>> components(const Graph& g,
                                              const std::vector<VertexId>& removed);

struct BlockDecomposition {
    std::vector<std::vector<VertexId>> blocks;  // vertex sets, ascending
    std::vector<VertexId> cut_vertices;         // ascending
};

/// Blocks (maximal 2-connected subgraphs) and cut vertices via iterative
/// depth-first lowpoint computation.  Throws Disconnected unless g is
/// connected.
BlockDecomposition blocks_and_cut_vertices(const Graph& g);

namespace detail {

/// Full block data used by the edge-pruning stage; tolerates disconnected
/// input (blocks are computed per component).
struct BlockData {
    std::vector<std::vector<VertexId>> block_vertices;
    std::vector<std::vector<EdgeKey>> block_edges;
    std::vector<char> is_cut;                 // indexed by id
    std::vector<std::vector<int>> vertex_blocks;  // block ids per vertex
    int n_components = 0;

    int block_of_edge(EdgeKey e) const;  // -1 if absent
    // edge -> block id
    std::vector<std::pair<EdgeKey, int>> edge_block_sorted;
};

BlockData block_data(const Graph& g);

}  // namespace detail

}  // namespace twotree

template <>
struct std::hash<twotree::EdgeKey> {
    std::size_t operator()(const twotree::EdgeKey& e) const noexcept {
        auto h = static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.a));
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(e.b);
        h ^= h >> 29;
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 32;
        return static_cast<std::size_t>(h);
    }
};
