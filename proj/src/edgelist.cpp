#include "twotree/edgelist.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace twotree {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::set<EdgeKey> seen;
    Graph g;
    long long read_edges = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> m) || n < 0 || m < 0) parse_fail(lineno, "expected header 'n m'");
            std::string extra;
            if (ss >> extra) parse_fail(lineno, "trailing tokens after header");
            g = Graph::with_vertices(static_cast<int>(n));
            continue;
        }
        long long a, b;
        if (!(ss >> a >> b)) parse_fail(lineno, "expected edge 'a b'");
        std::string extra;
        if (ss >> extra) parse_fail(lineno, "trailing tokens after edge");
        if (a < 0 || b < 0 || a >= n || b >= n) parse_fail(lineno, "vertex id out of range");
        if (a >= b) parse_fail(lineno, "edges must satisfy a < b");
        EdgeKey e(static_cast<VertexId>(a), static_cast<VertexId>(b));
        if (!seen.insert(e).second) parse_fail(lineno, "duplicate edge");
        g.add_edge(e.a, e.b);
        ++read_edges;
        if (read_edges > m) parse_fail(lineno, "more edges than the header promises");
    }
    if (n < 0) parse_fail(lineno, "missing header");
    if (read_edges != m)
        throw Error(Errc::ParseError, "edge count mismatch: header says " + std::to_string(m) +
                                          ", file has " + std::to_string(read_edges));
    g.finalize();
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (EdgeKey e : g.edges()) out << e.a << " " << e.b << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::ParseError, "cannot open " + path + " for writing");
    write_edge_list(out, g);
}

void write_dot(std::ostream& out, const Graph& g, const DotOptions& opt) {
    std::set<EdgeKey> blue;
    if (opt.blue_edges) blue.insert(opt.blue_edges->begin(), opt.blue_edges->end());
    std::set<EdgeKey> on_path;
    if (opt.path)
        for (std::size_t i = 0; i + 1 < opt.path->size(); ++i)
            on_path.insert(EdgeKey((*opt.path)[i], (*opt.path)[i + 1]));
    auto label_of = [&](EdgeKey e) -> const std::string* {
        if (!opt.blue_labels) return nullptr;
        for (const auto& [key, text] : *opt.blue_labels)
            if (key == e) return &text;
        return nullptr;
    };

    out << "graph g {\n";
    for (VertexId v : g.vertices()) out << "  " << v << ";\n";
    for (EdgeKey e : g.edges()) {
        out << "  " << e.a << " -- " << e.b;
        std::string attrs;
        if (blue.count(e)) {
            attrs += "color=blue";
            if (const std::string* text = label_of(e); text && !text->empty())
                attrs += ",label=\"" + *text + "\"";
        }
        if (on_path.count(e)) {
            if (!attrs.empty()) attrs += ",";
            attrs += "penwidth=3";
        }
        if (!attrs.empty()) out << " [" << attrs << "]";
        out << ";\n";
    }
    out << "}\n";
}

}  // namespace twotree
