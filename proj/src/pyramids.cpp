#include "twotree/pyramids.hpp"

#include <algorithm>
#include <functional>

#include "twotree/twotree.hpp"
#include "working_graph.hpp"

namespace twotree {

int PyramidReport::slot_of(EdgeKey e) const {
    if (e.a < 0 || e.a + 1 >= static_cast<VertexId>(slot_base_.size())) return -1;
    auto lo = cols_.begin() + slot_base_[e.a];
    auto hi = cols_.begin() + slot_base_[e.a + 1];
    auto it = std::lower_bound(lo, hi, e.b);
    if (it == hi || *it != e.b) return -1;
    return static_cast<int>(it - cols_.begin());
}

int PyramidReport::count(EdgeKey e) const {
    int slot = slot_of(e);
    return slot < 0 ? 0 : counts_[slot];
}

void PyramidReport::for_each(const std::function<void(EdgeKey, int)>& fn) const {
    for (VertexId v = 0; v + 1 < static_cast<VertexId>(slot_base_.size()); ++v)
        for (int i = slot_base_[v]; i < slot_base_[v + 1]; ++i)
            fn(EdgeKey(v, cols_[i]), counts_[i]);
}

std::string to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::ThreePyramidFree: return "ThreePyramidFree";
        case CaseLabel::ExactlyOneThreePyramid: return "ExactlyOneThreePyramid";
        case CaseLabel::TwoPlusThreePyramids: return "TwoPlusThreePyramids";
        case CaseLabel::HasFourPyramid: return "HasFourPyramid";
    }
    return "?";
}

namespace detail {

namespace {

PyramidReport make_report_skeleton(const Graph& g) {
    PyramidReport report;
    VertexId bound = g.id_bound();
    report.slot_base_.assign(bound + 1, 0);
    report.cols_.reserve(g.edge_count());
    for (VertexId v = 0; v < bound; ++v) {
        report.slot_base_[v] = static_cast<int>(report.cols_.size());
        if (g.has_vertex(v)) {
            const auto& nb = g.neighbors(v);
            auto it = std::upper_bound(nb.begin(), nb.end(), v);
            report.cols_.insert(report.cols_.end(), it, nb.end());
        }
    }
    report.slot_base_[bound] = static_cast<int>(report.cols_.size());
    report.counts_.assign(report.cols_.size(), 0);
    return report;
}

void finish_report(PyramidReport& report) {
    report.for_each([&](EdgeKey e, int c) {
        if (c == 3) report.three_pyramid_edges.push_back(e);
        else if (c >= 4) report.four_plus_edges.push_back(e);
    });
}

}  // namespace

// One elimination pass yields both the 2-tree certificate and the counts:
// every elimination step (v; a, b) is one triangle of g, and each triangle
// shows up exactly once this way.
RecognizeResult recognize_and_count(const Graph& g) {
    RecognizeResult out;
    std::size_t n = g.vertex_count();
    if (n < 2 || g.edge_count() != 2 * n - 3) return out;
    if (n == 2) {
        out.check.ok = true;
        out.report = make_report_skeleton(g);
        return out;
    }

    out.report = make_report_skeleton(g);
    PyramidReport& report = out.report;
    WorkingGraph w(g);
    IdHeap heap(g.id_bound());
    for (VertexId v : g.vertices())
        if (w.degree(v) == 2) heap.push(v);

    while (w.alive_count() > 2 && !heap.empty()) {
        VertexId v = heap.pop();
        if (!w.alive(v) || w.degree(v) != 2) continue;
        auto [a, b] = w.two_neighbors(v);
        int slot = report.slot_of(EdgeKey(a, b));
        if (slot < 0) continue;  // neighbors not adjacent: not simplicial
        ++report.counts_[slot];
        ++report.counts_[report.slot_of(EdgeKey(v, a))];
        ++report.counts_[report.slot_of(EdgeKey(v, b))];
        out.check.trace.push_back(v);
        w.remove_degree2(v, a, b);
        if (w.degree(a) == 2) heap.push(a);
        if (w.degree(b) == 2) heap.push(b);
    }
    if (w.alive_count() != 2) return RecognizeResult{};
    auto rest = w.alive_vertices();
    if (!g.has_edge(rest[0], rest[1])) return RecognizeResult{};
    out.check.ok = true;
    finish_report(report);
    return out;
}

PyramidReport pyramid_report_traced(const Graph& g, const std::vector<VertexId>& trace) {
    PyramidReport report = make_report_skeleton(g);
    WorkingGraph w(g);
    for (VertexId v : trace) {
        auto [a, b] = w.two_neighbors(v);
        ++report.counts_[report.slot_of(EdgeKey(v, a))];
        ++report.counts_[report.slot_of(EdgeKey(v, b))];
        ++report.counts_[report.slot_of(EdgeKey(a, b))];
        w.remove_vertex(v);
    }
    finish_report(report);
    return report;
}

}  // namespace detail

PyramidReport pyramid_report(const Graph& g) {
    auto rec = detail::recognize_and_count(g);
    if (!rec.check.ok) throw Error(Errc::NotTwoTree, "pyramid_report requires a 2-tree");
    return std::move(rec.report);
}

CaseLabel classify(const PyramidReport& report) {
    if (!report.four_plus_edges.empty()) return CaseLabel::HasFourPyramid;
    switch (report.three_pyramid_edges.size()) {
        case 0: return CaseLabel::ThreePyramidFree;
        case 1: return CaseLabel::ExactlyOneThreePyramid;
        default: return CaseLabel::TwoPlusThreePyramids;
    }
}

}  // namespace twotree
