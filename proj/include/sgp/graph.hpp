#ifndef SGP_GRAPH_HPP
#define SGP_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sgp {

// A path through a graph as an ordered vertex id sequence. Whether it is a
// geodesic is a property checked by is_geodesic, never assumed.
using VertexPath = std::vector<int>;

// Simple undirected graph with contiguous 0-based vertex ids. Neighbor lists
// are kept sorted ascending; every iteration order in the library derives
// from them, which is what makes certificates reproducible.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list, canonicalizing adjacency. Rejects self-loops,
    // duplicate edges and out-of-range ids.
    static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    bool valid_vertex(int v) const { return v >= 0 && v < vertex_count(); }

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Coordinate bookkeeping for a Cartesian product L □ R: the bijection
// between product vertex ids and 1-based factor coordinates (i, j) with
// i in [1..left_size], j in [1..right_size]. Fixed convention:
// id = (i-1) * right_size + (j-1).
class LayerLabeling {
public:
    enum class FactorKind { path, cycle, general };

    LayerLabeling() = default;
    LayerLabeling(int left_size, int right_size, FactorKind right_kind = FactorKind::general);

    int left_size() const { return left_; }
    int right_size() const { return right_; }
    FactorKind right_factor_kind() const { return kind_; }
    int total_vertices() const { return left_ * right_; }

    int encode(int i, int j) const;                // (i, j) 1-based -> id
    std::pair<int, int> decode(int id) const;      // id -> (i, j) 1-based

private:
    int left_ = 0;
    int right_ = 0;
    FactorKind kind_ = FactorKind::general;
};

// P_n: vertices 0..n-1, edges {t, t+1}. Requires n >= 1.
Graph build_path(int n);

// C_n: vertices 0..n-1, edges {t, (t+1) mod n}. Requires n >= 3.
Graph build_cycle(int n);

// Cartesian product G □ H: (g,h) ~ (g',h') iff one coordinate is equal and
// the other pair is an edge of its factor. Labeling has left = G, right = H.
std::pair<Graph, LayerLabeling> cartesian_product(const Graph& g, const Graph& h);

// P_r □ P_n and P_r □ C_n with the labeling's right factor kind set.
std::pair<Graph, LayerLabeling> build_grid(int r, int n);
std::pair<Graph, LayerLabeling> build_cylinder(int r, int n);

// Edge-list text format: optional header "p <num_vertices>", then one edge
// per line as two 0-based decimal ids; '#' starts a comment line. Self-loops,
// duplicate edges, ids outside a declared range and malformed lines are
// ParseErrors carrying the offending line number.
Graph from_edge_list(std::istream& in);
Graph from_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// Exact hop distances from source to every vertex. Throws NotConnected
// naming an unreached vertex if the graph is not connected.
std::vector<int> bfs_distances(const Graph& g, int source);

// Max distance over all pairs. Throws NotConnected on disconnected input.
int diameter(const Graph& g);

enum class ProjectionSide { left, right };

// Projects a product path onto one factor, collapsing consecutive repeats.
// For a geodesic input the result is a factor geodesic (a tested property,
// not an assumption of this function).
VertexPath project(const VertexPath& path, const LayerLabeling& labeling, ProjectionSide side);

}  // namespace sgp

#endif  // SGP_GRAPH_HPP
