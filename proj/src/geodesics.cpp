#include "sgp/geodesics.hpp"

#include <algorithm>

#include "sgp/errors.hpp"

namespace sgp {

ShortestPathDag build_dag(const Graph& g, int source) {
    ShortestPathDag dag;
    dag.source = source;
    dag.dist = bfs_distances(g, source);  // throws NotConnected / InvalidParameter
    const int n = g.vertex_count();
    dag.preds.resize(n);
    dag.sigma.assign(n, BigUint{});

    // vertices in ascending distance order; ties by id keep everything stable
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return dag.dist[a] != dag.dist[b] ? dag.dist[a] < dag.dist[b] : a < b; });

    dag.sigma[source] = BigUint{1};
    for (int v : order) {
        if (v == source) continue;
        for (int u : g.neighbors(v)) {
            if (dag.dist[u] + 1 == dag.dist[v]) {
                dag.preds[v].push_back(u);  // neighbor order is ascending already
                dag.sigma[v] += dag.sigma[u];
            }
        }
    }
    return dag;
}

BigUint count_geodesics(const ShortestPathDag& dag, int target) {
    if (target < 0 || target >= static_cast<int>(dag.dist.size()))
        throw InvalidParameter("count_geodesics: target out of range");
    return dag.sigma[target];
}

GeodesicEnumerator::GeodesicEnumerator(const Graph& g, const ShortestPathDag& dag, int target,
                                       std::uint64_t cap)
    : GeodesicEnumerator(g, dag, target, cap, bfs_distances(g, target)) {}

GeodesicEnumerator::GeodesicEnumerator(const Graph& g, const ShortestPathDag& dag, int target,
                                       std::uint64_t cap, std::vector<int> dist_to_target)
    : g_(g), dist_from_source_(dag.dist), dist_to_target_(std::move(dist_to_target)),
      target_(target), cap_(cap) {
    if (!g.valid_vertex(target)) throw InvalidParameter("enumerate: target out of range");
    if (cap < 1) throw InvalidParameter("enumerate: cap must be >= 1");
    path_length_ = dag.dist[target];
    more_than_cap_ = dag.sigma[target] > BigUint{cap};
    stack_.push_back(dag.source);
}

bool GeodesicEnumerator::on_geodesic(int v) const {
    return dist_from_source_[v] + dist_to_target_[v] == path_length_;
}

std::vector<int> GeodesicEnumerator::successors(int v) const {
    std::vector<int> out;
    for (int w : g_.neighbors(v))
        if (dist_from_source_[w] == dist_from_source_[v] + 1 && on_geodesic(w)) out.push_back(w);
    return out;
}

std::optional<VertexPath> GeodesicEnumerator::next() {
    if (done_) return std::nullopt;
    if (yielded_ >= cap_) {
        done_ = true;
        return std::nullopt;
    }
    if (yielded_ == 0) {
        // leftmost completion from the bare source; every on-geodesic vertex
        // extends to the target, so the greedy descent cannot get stuck
        descend();
    } else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    ++yielded_;
    if (yielded_ == cap_ && more_than_cap_) truncated_ = true;
    return stack_;
}

void GeodesicEnumerator::descend() {
    while (stack_.back() != target_) {
        auto succ = successors(stack_.back());
        stack_.push_back(succ.front());
        branch_.push_back(0);
    }
}

bool GeodesicEnumerator::advance() {
    while (!branch_.empty()) {
        stack_.pop_back();
        auto succ = successors(stack_.back());
        int idx = branch_.back() + 1;
        branch_.pop_back();
        if (idx < static_cast<int>(succ.size())) {
            stack_.push_back(succ[idx]);
            branch_.push_back(idx);
            descend();
            return true;
        }
    }
    return false;
}

EnumerationResult enumerate_geodesics(const Graph& g, const ShortestPathDag& dag, int target,
                                      std::uint64_t cap) {
    GeodesicEnumerator en(g, dag, target, cap);
    EnumerationResult out;
    while (auto p = en.next()) out.paths.push_back(std::move(*p));
    out.truncated = en.truncated();
    return out;
}

VertexSet interval(const Graph& g, int x, int y) {
    if (!g.valid_vertex(x) || !g.valid_vertex(y))
        throw InvalidParameter("interval: vertex out of range");
    auto dx = bfs_distances(g, x);
    auto dy = bfs_distances(g, y);
    VertexSet out(g.vertex_count());
    const int d = dx[y];
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dx[v] + dy[v] == d) out.add(v);
    return out;
}

bool is_geodesic(const Graph& g, const VertexPath& path) {
    if (path.empty()) throw InvalidParameter("is_geodesic: empty path");
    for (int v : path)
        if (!g.valid_vertex(v)) throw InvalidParameter("is_geodesic: vertex out of range");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    auto dist = bfs_distances(g, path.front());
    return static_cast<int>(path.size()) - 1 == dist[path.back()];
}

}  // namespace sgp
