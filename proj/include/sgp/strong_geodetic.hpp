#ifndef SGP_STRONG_GEODETIC_HPP
#define SGP_STRONG_GEODETIC_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgp/geodesics.hpp"
#include "sgp/graph.hpp"
#include "sgp/vertex_set.hpp"

namespace sgp {

// One fixed geodesic for an unordered vertex pair {u, v}, u < v.
struct PairGeodesic {
    int u = 0;
    int v = 0;
    VertexPath path;
};

// A vertex set S together with one chosen geodesic per unordered pair of S.
// Valid when the records are exactly the C(|S|,2) pairs, every path is a
// geodesic from its u to its v, and the path vertices (plus S itself) cover
// the whole graph.
struct Certificate {
    std::vector<int> vertices;            // strictly ascending
    std::vector<PairGeodesic> geodesics;  // sorted by (u, v)
};

struct SolverConfig {
    std::uint64_t pair_enumeration_cap = 1'000'000;
    std::chrono::milliseconds budget{0};  // 0 = unlimited
    int workers = 1;
    bool deterministic = true;
    // candidate sets tried before the exhaustive sweep, at matching cardinality
    std::vector<std::vector<int>> hints;
};

struct CoverageReport {
    bool valid = false;
    std::vector<int> uncovered;
    std::vector<std::string> violations;
};

enum class AssignmentStatus {
    found,                  // certificate returned
    none,                   // definitively no covering assignment for this S
    inconclusive_truncated, // some pair hit the enumeration cap; absence unproven
    inconclusive_budget,    // deadline hit mid-search
};

struct AssignmentResult {
    AssignmentStatus status = AssignmentStatus::none;
    std::optional<Certificate> certificate;
};

struct SgResult {
    int sg = 0;
    Certificate certificate;
};

// Structural and covering check of a certificate against a graph. Never
// throws for defects: every problem lands in the report. Vertices of S count
// as covered (relevant only for the one-vertex graph, which has no pairs).
CoverageReport verify_certificate(const Graph& g, const Certificate& cert);

// Does some per-pair geodesic selection for S cover V? Searches by
// backtracking over pairs ordered by ascending geodesic count, pruning any
// branch whose covered set plus the intervals of the unassigned pairs cannot
// reach V. Deterministic: returns the lexicographically first certificate in
// enumeration order.
AssignmentResult has_assignment(const Graph& g, const std::vector<int>& s,
                                const SolverConfig& cfg = {});

// Exact sg(G): smallest k admitting a strong geodetic set, with a witness.
// Sweeps k upward from max(2, covering_lower_bound), hints first, then all
// k-subsets in lexicographic order. Throws TruncationInconclusive rather
// than certifying a minimum across an undecided level, and BudgetExhausted
// (carrying the proven lower bound) on timeout.
SgResult strong_geodetic_number(const Graph& g, const SolverConfig& cfg = {});

// Classical geodetic number: smallest S whose pairwise intervals cover V,
// with the lexicographically first witness.
std::pair<int, std::vector<int>> geodetic_number(const Graph& g);

// Smallest k >= 2 with C(k,2) * (diam(G)+1) >= |V(G)|; 1 for the singleton
// graph. Each chosen geodesic covers at most diam(G)+1 vertices, so this is
// a lower bound on sg(G).
int covering_lower_bound(const Graph& g);

// ceil(2*sqrt(m)) computed exactly in integers.
int ceil_two_sqrt(int m);

// Lower bound for sg(P_r [] G): returns ceil(2*sqrt(|V(G)|)) when
// r > diam(G) * C(u,2) + u, where u is any upper bound on sg(P_r [] G);
// absent when the precondition fails. The right side is increasing in u, so
// checking it at u >= sg implies it at sg.
std::optional<int> product_lower_bound(int r, const Graph& g, int u);

// Smallest layer index h (1-based, layers = left coordinate of the labeling)
// such that no certificate path uses an edge inside layer h and no
// certificate vertex lies in layer h; absent if every layer is touched.
std::optional<int> find_uncrossed_layer(const Graph& product, const LayerLabeling& labeling,
                                        const Certificate& cert);

}  // namespace sgp

#endif  // SGP_STRONG_GEODETIC_HPP
