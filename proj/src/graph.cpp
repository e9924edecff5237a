#include "sgp/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "sgp/errors.hpp"

namespace sgp {

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0) throw InvalidParameter("vertex_count must be nonnegative");
    Graph g;
    g.adj_.resize(vertex_count);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw InvalidParameter("edge endpoint out of range: " + std::to_string(u) + " " +
                                   std::to_string(v));
        if (u == v) throw InvalidParameter("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw InvalidParameter("duplicate edge");
    }
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (!valid_vertex(u) || !valid_vertex(v)) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

LayerLabeling::LayerLabeling(int left_size, int right_size, FactorKind right_kind)
    : left_(left_size), right_(right_size), kind_(right_kind) {
    if (left_size < 1 || right_size < 1)
        throw InvalidParameter("labeling sizes must be at least 1");
}

int LayerLabeling::encode(int i, int j) const {
    if (i < 1 || i > left_ || j < 1 || j > right_)
        throw InvalidParameter("coordinate (" + std::to_string(i) + "," + std::to_string(j) +
                               ") outside " + std::to_string(left_) + "x" + std::to_string(right_));
    return (i - 1) * right_ + (j - 1);
}

std::pair<int, int> LayerLabeling::decode(int id) const {
    if (id < 0 || id >= total_vertices())
        throw InvalidParameter("vertex id " + std::to_string(id) + " outside labeling");
    return {id / right_ + 1, id % right_ + 1};
}

Graph build_path(int n) {
    if (n < 1) throw InvalidParameter("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int t = 0; t + 1 < n; ++t) edges.emplace_back(t, t + 1);
    return Graph::from_edges(n, edges);
}

Graph build_cycle(int n) {
    if (n < 3) throw InvalidParameter("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int t = 0; t < n; ++t) edges.emplace_back(t, (t + 1) % n);
    return Graph::from_edges(n, edges);
}

std::pair<Graph, LayerLabeling> cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng == 0 || nh == 0) throw InvalidParameter("cartesian product of an empty factor");
    if (static_cast<long long>(ng) * nh > 50'000'000)
        throw InvalidParameter("product too large: " + std::to_string(ng) + " x " +
                               std::to_string(nh) + " vertices");
    LayerLabeling lab(ng, nh);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(ng) * h.edge_count() +
                  static_cast<std::size_t>(nh) * g.edge_count());
    for (int a = 0; a < ng; ++a) {
        for (int b = 0; b < nh; ++b) {
            int id = lab.encode(a + 1, b + 1);
            // fix g-coordinate, step along an H edge
            for (int b2 : h.neighbors(b))
                if (b2 > b) edges.emplace_back(id, lab.encode(a + 1, b2 + 1));
            // fix h-coordinate, step along a G edge
            for (int a2 : g.neighbors(a))
                if (a2 > a) edges.emplace_back(id, lab.encode(a2 + 1, b + 1));
        }
    }
    return {Graph::from_edges(ng * nh, edges), lab};
}

std::pair<Graph, LayerLabeling> build_grid(int r, int n) {
    auto [g, lab] = cartesian_product(build_path(r), build_path(n));
    return {std::move(g), LayerLabeling(r, n, LayerLabeling::FactorKind::path)};
}

std::pair<Graph, LayerLabeling> build_cylinder(int r, int n) {
    auto [g, lab] = cartesian_product(build_path(r), build_cycle(n));
    return {std::move(g), LayerLabeling(r, n, LayerLabeling::FactorKind::cycle)};
}

Graph from_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    int declared = -1;
    int max_id = -1;
    int line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        // strip comments and whitespace-only lines
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;

        if (first == "p") {
            if (declared >= 0) throw ParseError("duplicate header", line_no);
            std::string rest;
            if (!(ls >> declared) || declared < 0 || (ls >> rest))
                throw ParseError("malformed header, expected 'p <num_vertices>'", line_no);
            continue;
        }

        int u, v;
        std::string extra;
        try {
            std::size_t used = 0;
            u = std::stoi(first, &used);
            if (used != first.size()) throw ParseError("malformed edge line", line_no);
        } catch (const ParseError&) {
            throw;
        } catch (...) {
            throw ParseError("malformed edge line", line_no);
        }
        if (!(ls >> v) || (ls >> extra)) throw ParseError("malformed edge line", line_no);
        if (u < 0 || v < 0) throw ParseError("negative vertex id", line_no);
        if (u == v) throw ParseError("self-loop", line_no);
        if (declared >= 0 && (u >= declared || v >= declared))
            throw ParseError("vertex id outside declared range", line_no);
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw ParseError("duplicate edge", line_no);
        edges.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }
    int n = declared >= 0 ? declared : max_id + 1;
    return Graph::from_edges(n, edges);
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (!g.valid_vertex(source)) throw InvalidParameter("bfs source out of range");
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] < 0) throw NotConnected(v);
    return dist;
}

int diameter(const Graph& g) {
    if (g.vertex_count() == 0) throw InvalidParameter("diameter of the empty graph");
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

VertexPath project(const VertexPath& path, const LayerLabeling& labeling, ProjectionSide side) {
    VertexPath out;
    out.reserve(path.size());
    for (int id : path) {
        auto [i, j] = labeling.decode(id);  // throws InvalidParameter when outside
        int coord = (side == ProjectionSide::left ? i : j) - 1;  // back to 0-based factor ids
        if (out.empty() || out.back() != coord) out.push_back(coord);
    }
    return out;
}

}  // namespace sgp
