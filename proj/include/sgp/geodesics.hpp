#ifndef SGP_GEODESICS_HPP
#define SGP_GEODESICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sgp/bigint.hpp"
#include "sgp/graph.hpp"
#include "sgp/vertex_set.hpp"

namespace sgp {

// Per-source BFS layering of a connected graph. Immutable once built:
//   u in preds(v)  <=>  uv is an edge and dist(u) + 1 == dist(v)
//   sigma(source) == 1,  sigma(v) == sum of sigma over preds(v)
// sigma(v) is the exact number of geodesics source -> v.
struct ShortestPathDag {
    int source = 0;
    std::vector<int> dist;
    std::vector<std::vector<int>> preds;  // sorted ascending
    std::vector<BigUint> sigma;
};

// Throws NotConnected when some vertex is unreachable.
ShortestPathDag build_dag(const Graph& g, int source);

// Number of distinct geodesics source -> target (== dag.sigma[target]).
BigUint count_geodesics(const ShortestPathDag& dag, int target);

// Lazy generator of the geodesics source -> target in lexicographic order of
// their vertex id sequences. Yields at most `cap` paths; if more exist the
// truncation flag is set (a flagged outcome, not an error).
class GeodesicEnumerator {
public:
    GeodesicEnumerator(const Graph& g, const ShortestPathDag& dag, int target, std::uint64_t cap);
    // Same, with the distance field from the target supplied by the caller
    // (saves the BFS when all-pairs distances are already around).
    GeodesicEnumerator(const Graph& g, const ShortestPathDag& dag, int target, std::uint64_t cap,
                       std::vector<int> dist_to_target);

    std::optional<VertexPath> next();
    std::uint64_t yielded() const { return yielded_; }
    // True iff the cap cut the enumeration short of the full set.
    bool truncated() const { return truncated_; }

private:
    const Graph& g_;
    const std::vector<int>& dist_from_source_;
    std::vector<int> dist_to_target_;
    int target_;
    int path_length_;
    std::uint64_t cap_;
    std::uint64_t yielded_ = 0;
    bool more_than_cap_ = false;
    bool truncated_ = false;
    bool done_ = false;
    VertexPath stack_;                  // current partial path
    std::vector<int> branch_;           // index into candidate successors per level

    bool on_geodesic(int v) const;
    std::vector<int> successors(int v) const;
    void descend();
    bool advance();
};

struct EnumerationResult {
    std::vector<VertexPath> paths;
    bool truncated = false;
};

// Eager convenience wrapper around GeodesicEnumerator.
EnumerationResult enumerate_geodesics(const Graph& g, const ShortestPathDag& dag, int target,
                                      std::uint64_t cap);

// I(x, y): every vertex v with d(x,v) + d(v,y) == d(x,y), i.e. the union of
// all x,y-geodesics. Throws NotConnected on disconnected input.
VertexSet interval(const Graph& g, int x, int y);

// True iff consecutive vertices are adjacent and the path length equals the
// distance between its endpoints.
bool is_geodesic(const Graph& g, const VertexPath& path);

}  // namespace sgp

#endif  // SGP_GEODESICS_HPP
