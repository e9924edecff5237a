#ifndef SGP_CONSTRUCTIONS_HPP
#define SGP_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "sgp/graph.hpp"
#include "sgp/strong_geodetic.hpp"

namespace sgp {

// Endpoint layout of a closed-form strong geodetic set on P_r [] P_n or
// P_r [] C_n: column positions c_1 < ... < c_k anchored at both ends of the
// long path factor, plus up to two extra vertices for the non-square cases
// n = k^2 + ell. Always satisfies |S| = ceil(2*sqrt(n)).
struct AnchorSet {
    LayerLabeling::FactorKind factor_kind = LayerLabeling::FactorKind::path;
    int n = 0;    // factor order
    int r = 0;    // long path order
    int k = 0;    // floor(sqrt(n))
    int ell = 0;  // n - k*k
    std::vector<int> positions;                      // 1-based columns
    std::vector<std::pair<int, int>> top_extras;     // (side == 1, column)
    std::vector<std::pair<int, int>> bottom_extras;  // (side == r, column)

    int set_size() const {
        return 2 * static_cast<int>(positions.size()) +
               static_cast<int>(top_extras.size() + bottom_extras.size());
    }
};

// Grid layout: c_i = (i-1)k + i; extras at column n on one or both ends
// depending on ell. Requires 2 <= n <= r.
AnchorSet grid_anchors(int r, int n);

// Cylinder layout: c_i = (i-1)k + 1 for square n. For ell >= 1 the extra
// columns (and, when needed, the base spacing) are chosen by a deterministic
// feasibility search over a small structured family, because fixed extra
// columns do not admit a crossing-row assignment for every n. Requires
// 3 <= n <= r.
AnchorSet cylinder_anchors(int r, int n);

// Turns an anchor layout into a verified certificate. Routing: direct pairs
// run straight along their column; every cross pair is assigned one crossing
// row by a perfect matching against the rows no direct pair covers (greedy
// interval scheduling with an augmenting-path fallback); remaining pairs take
// canonical factor geodesics. Throws MatchingInfeasible if no perfect
// matching exists and VerificationFailed if the result does not verify;
// both indicate a bug, never a silently wrong certificate.
Certificate build_certificate(const AnchorSet& anchors);

// Thin-regime thresholds: for any r strictly above the returned value the
// lower bound meets the construction and sg = ceil(2*sqrt(n)) exactly.
int grid_threshold(int n);      // C(ceil2sqrt,2)*(n-1) + ceil2sqrt, n >= 2
int cylinder_threshold(int n);  // C(ceil2sqrt,2)*floor(n/2) + ceil2sqrt, n >= 3

}  // namespace sgp

#endif  // SGP_CONSTRUCTIONS_HPP
