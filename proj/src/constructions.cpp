#include "sgp/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>

#include "sgp/errors.hpp"

namespace sgp {
namespace {

using FactorKind = LayerLabeling::FactorKind;

int isqrt_floor(int n) {
    int k = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while ((k + 1) * (k + 1) <= n) ++k;
    while (k * k > n) --k;
    return k;
}

int factor_dist(FactorKind kind, int n, int x, int y) {
    int diff = std::abs(x - y);
    return kind == FactorKind::path ? diff : std::min(diff, n - diff);
}

// Columns along a geodesic from x to y passing through s, inclusive.
// s must satisfy d(x,s) + d(s,y) == d(x,y); for cycles the arc direction is
// the one containing s (ascending wins ties).
std::vector<int> factor_geodesic_via(FactorKind kind, int n, int x, int s, int y) {
    std::vector<int> cols;
    if (kind == FactorKind::path) {
        for (int c = x; c != s; c += (s > x ? 1 : -1)) cols.push_back(c);
        for (int c = s; c != y; c += (y > s ? 1 : -1)) cols.push_back(c);
        cols.push_back(y);
        return cols;
    }
    auto fwd = [n](int a, int b) { return ((b - a) % n + n) % n; };  // steps a -> b ascending
    const int d = factor_dist(kind, n, x, y);
    int dir;
    if (fwd(x, y) == d && fwd(x, s) <= d)
        dir = 1;
    else if (fwd(y, x) == d && fwd(s, x) <= d)
        dir = -1;
    else
        throw MatchingInfeasible("crossing row " + std::to_string(s) +
                                 " is not on a shortest arc between columns " +
                                 std::to_string(x) + " and " + std::to_string(y));
    int c = x;
    cols.push_back(c);
    while (c != y) {
        c = (c - 1 + dir + n) % n + 1;  // 1-based wrap
        cols.push_back(c);
    }
    return cols;
}

std::vector<int> factor_geodesic(FactorKind kind, int n, int x, int y) {
    return factor_geodesic_via(kind, n, x, x, y);
}

struct CrossPair {
    int x;  // column at side 1
    int y;  // column at side r
};

// Maximum bipartite matching rows -> cross pairs (Kuhn's augmenting paths,
// rows in ascending order, pairs in index order). Deterministic.
std::vector<int> kuhn_matching(const std::vector<std::vector<int>>& feasible_pairs, int npairs) {
    const int nrows = static_cast<int>(feasible_pairs.size());
    std::vector<int> row_match(nrows, -1), pair_match(npairs, -1);
    std::vector<char> visited(npairs, 0);
    std::function<bool(int)> augment = [&](int row) {
        for (int p : feasible_pairs[row]) {
            if (visited[p]) continue;
            visited[p] = 1;
            if (pair_match[p] < 0 || augment(pair_match[p])) {
                pair_match[p] = row;
                row_match[row] = p;
                return true;
            }
        }
        return false;
    };
    for (int row = 0; row < nrows; ++row) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(row);
    }
    return row_match;
}

// Assign one crossing row to every uncovered row. Greedy first (rows
// ascending, smallest span max(x, y), lexicographic ties), full augmenting
// matching when the greedy stalls. Returns row -> pair index or empty when
// no perfect assignment exists.
std::vector<int> match_rows(const std::vector<int>& rows, const std::vector<CrossPair>& pairs,
                            FactorKind kind, int n) {
    const int nrows = static_cast<int>(rows.size());
    const int npairs = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> feasible(nrows);
    for (int i = 0; i < nrows; ++i)
        for (int p = 0; p < npairs; ++p) {
            const auto& cp = pairs[p];
            if (factor_dist(kind, n, cp.x, rows[i]) + factor_dist(kind, n, rows[i], cp.y) ==
                factor_dist(kind, n, cp.x, cp.y))
                feasible[i].push_back(p);
        }

    std::vector<int> row_match(nrows, -1);
    std::vector<char> used(npairs, 0);
    bool stalled = false;
    for (int i = 0; i < nrows && !stalled; ++i) {
        int best = -1;
        for (int p : feasible[i]) {
            if (used[p]) continue;
            if (best < 0) {
                best = p;
                continue;
            }
            auto key = [&](int q) {
                return std::make_tuple(std::max(pairs[q].x, pairs[q].y), pairs[q].x, pairs[q].y);
            };
            if (key(p) < key(best)) best = p;
        }
        if (best < 0) {
            stalled = true;
            break;
        }
        used[best] = 1;
        row_match[i] = best;
    }
    if (!stalled) return row_match;

    row_match = kuhn_matching(feasible, npairs);
    for (int i = 0; i < nrows; ++i)
        if (row_match[i] < 0) return {};
    return row_match;
}

// Is there a perfect crossing-row assignment for side columns X, Y?
bool layout_feasible(const std::vector<int>& xs, const std::vector<int>& ys, FactorKind kind,
                     int n) {
    std::set<int> direct;
    std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                          std::inserter(direct, direct.begin()));
    std::vector<int> rows;
    for (int c = 1; c <= n; ++c)
        if (!direct.count(c)) rows.push_back(c);
    std::vector<CrossPair> pairs;
    for (int x : xs)
        for (int y : ys)
            if (x != y) pairs.push_back({x, y});
    if (static_cast<int>(pairs.size()) < static_cast<int>(rows.size())) return false;
    auto m = match_rows(rows, pairs, kind, n);
    return !m.empty();
}

std::vector<int> side_columns(const AnchorSet& a, int side) {
    std::vector<int> cols = a.positions;
    const auto& extras = side == 1 ? a.top_extras : a.bottom_extras;
    for (auto [s, c] : extras) {
        (void)s;
        cols.push_back(c);
    }
    std::sort(cols.begin(), cols.end());
    return cols;
}

}  // namespace

AnchorSet grid_anchors(int r, int n) {
    if (n < 2 || n > r)
        throw InvalidParameter("grid anchors need 2 <= n <= r, got n=" + std::to_string(n) +
                               ", r=" + std::to_string(r));
    AnchorSet a;
    a.factor_kind = FactorKind::path;
    a.n = n;
    a.r = r;
    a.k = isqrt_floor(n);
    a.ell = n - a.k * a.k;
    for (int i = 1; i <= a.k; ++i) a.positions.push_back((i - 1) * a.k + i);
    if (a.ell >= 1) a.top_extras.emplace_back(1, n);
    if (a.ell > a.k) a.bottom_extras.emplace_back(r, n);
    return a;
}

AnchorSet cylinder_anchors(int r, int n) {
    if (n < 3 || n > r)
        throw InvalidParameter("cylinder anchors need 3 <= n <= r, got n=" + std::to_string(n) +
                               ", r=" + std::to_string(r));
    AnchorSet a;
    a.factor_kind = FactorKind::cycle;
    a.n = n;
    a.r = r;
    a.k = isqrt_floor(n);
    a.ell = n - a.k * a.k;

    const int k = a.k;
    auto base_positions = [&](int step) {
        std::vector<int> pos;
        for (int i = 1; i <= k; ++i) pos.push_back((i - 1) * step + 1);
        return pos;
    };

    if (a.ell == 0) {
        a.positions = base_positions(k);
        return a;
    }

    // Non-square case: fixed extra columns do not work for every n, so probe
    // a deterministic candidate family and keep the first layout that admits
    // a perfect crossing-row assignment.
    auto try_layout = [&](const std::vector<int>& pos, const std::vector<int>& top,
                          const std::vector<int>& bottom) {
        std::vector<int> xs = pos, ys = pos;
        xs.insert(xs.end(), top.begin(), top.end());
        ys.insert(ys.end(), bottom.begin(), bottom.end());
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) return false;
        if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) return false;
        return layout_feasible(xs, ys, FactorKind::cycle, n);
    };

    for (int step : {k, k + 1}) {
        auto pos = base_positions(step);
        if (pos.back() > n) continue;
        auto in_base = [&](int c) { return std::find(pos.begin(), pos.end(), c) != pos.end(); };

        if (a.ell <= k) {
            for (int e = n; e >= 2; --e) {
                if (in_base(e)) continue;
                if (try_layout(pos, {e}, {})) {
                    a.positions = pos;
                    a.top_extras.emplace_back(1, e);
                    return a;
                }
            }
        } else {
            for (int e = n; e >= 2; --e) {
                if (in_base(e)) continue;
                if (try_layout(pos, {e}, {e})) {
                    a.positions = pos;
                    a.top_extras.emplace_back(1, e);
                    a.bottom_extras.emplace_back(r, e);
                    return a;
                }
            }
            for (int e1 = 2; e1 <= n; ++e1) {
                if (in_base(e1)) continue;
                for (int e2 = 2; e2 <= n; ++e2) {
                    if (e2 == e1 || in_base(e2)) continue;
                    if (try_layout(pos, {e1}, {e2})) {
                        a.positions = pos;
                        a.top_extras.emplace_back(1, e1);
                        a.bottom_extras.emplace_back(r, e2);
                        return a;
                    }
                }
            }
        }
    }
    throw MatchingInfeasible("no feasible cylinder anchor layout for n=" + std::to_string(n));
}

Certificate build_certificate(const AnchorSet& a) {
    const int n = a.n, r = a.r;
    const FactorKind kind = a.factor_kind;
    if (n < 2 || r < n) throw InvalidParameter("anchor set has out-of-range dimensions");
    if (kind == FactorKind::cycle && n < 3)
        throw InvalidParameter("cycle factor needs n >= 3");
    if (a.set_size() != ceil_two_sqrt(n))
        throw InvalidParameter("anchor set size " + std::to_string(a.set_size()) +
                               " != ceil(2*sqrt(n)) = " + std::to_string(ceil_two_sqrt(n)));

    auto [graph, labeling] = kind == FactorKind::path ? build_grid(r, n) : build_cylinder(r, n);

    const std::vector<int> xs = side_columns(a, 1);
    const std::vector<int> ys = side_columns(a, r);

    std::set<int> direct;
    std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                          std::inserter(direct, direct.begin()));
    std::vector<int> rows;
    for (int c = 1; c <= n; ++c)
        if (!direct.count(c)) rows.push_back(c);
    std::vector<CrossPair> cross;
    for (int x : xs)
        for (int y : ys)
            if (x != y) cross.push_back({x, y});

    // counting identity from the anchor layout; equality in the square case
    if (static_cast<int>(cross.size()) < static_cast<int>(rows.size()))
        throw MatchingInfeasible("fewer cross pairs (" + std::to_string(cross.size()) +
                                 ") than uncovered rows (" + std::to_string(rows.size()) + ")");

    auto row_match = match_rows(rows, cross, kind, n);
    if (row_match.empty())
        throw MatchingInfeasible("no perfect crossing-row assignment for the anchor layout");

    // crossing row per cross pair; unmatched pairs fall back to their own
    // left column (straight descent, then along the far layer)
    std::vector<int> crossing_row(cross.size(), -1);
    for (std::size_t i = 0; i < rows.size(); ++i) crossing_row[row_match[i]] = rows[i];

    Certificate cert;
    for (int x : xs) cert.vertices.push_back(labeling.encode(1, x));
    for (int y : ys) cert.vertices.push_back(labeling.encode(r, y));
    std::sort(cert.vertices.begin(), cert.vertices.end());

    auto add_record = [&](VertexPath path) {
        PairGeodesic rec;
        rec.u = path.front();
        rec.v = path.back();
        rec.path = std::move(path);
        cert.geodesics.push_back(std::move(rec));
    };

    // direct pairs: straight down the shared column
    for (int c : direct) {
        VertexPath p;
        for (int i = 1; i <= r; ++i) p.push_back(labeling.encode(i, c));
        add_record(std::move(p));
    }
    // cross pairs: across the crossing row
    for (std::size_t pi = 0; pi < cross.size(); ++pi) {
        const int x = cross[pi].x, y = cross[pi].y;
        const int s = crossing_row[pi] > 0 ? crossing_row[pi] : x;
        auto cols = factor_geodesic_via(kind, n, x, s, y);
        const auto turn = std::find(cols.begin(), cols.end(), s);
        VertexPath p;
        for (auto it = cols.begin(); it != std::next(turn); ++it) p.push_back(labeling.encode(1, *it));
        for (int i = 2; i <= r; ++i) p.push_back(labeling.encode(i, s));
        for (auto it = std::next(turn); it != cols.end(); ++it) p.push_back(labeling.encode(r, *it));
        add_record(std::move(p));
    }
    // pairs inside one end layer: canonical factor geodesic
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            VertexPath p;
            for (int c : factor_geodesic(kind, n, xs[i], xs[j])) p.push_back(labeling.encode(1, c));
            add_record(std::move(p));
        }
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
            VertexPath p;
            for (int c : factor_geodesic(kind, n, ys[i], ys[j])) p.push_back(labeling.encode(r, c));
            add_record(std::move(p));
        }

    for (auto& rec : cert.geodesics)
        if (rec.u > rec.v) {
            std::swap(rec.u, rec.v);
            std::reverse(rec.path.begin(), rec.path.end());
        }
    std::sort(cert.geodesics.begin(), cert.geodesics.end(),
              [](const PairGeodesic& l, const PairGeodesic& m) {
                  return std::make_pair(l.u, l.v) < std::make_pair(m.u, m.v);
              });

    auto report = verify_certificate(graph, cert);
    if (!report.valid) {
        std::string what = "constructed certificate failed verification:";
        for (const auto& v : report.violations) what += " [" + v + "]";
        if (!report.uncovered.empty())
            what += " uncovered=" + std::to_string(report.uncovered.size());
        throw VerificationFailed(what);
    }
    return cert;
}

int grid_threshold(int n) {
    if (n < 2) throw InvalidParameter("grid threshold needs n >= 2");
    const std::int64_t t = ceil_two_sqrt(n);
    return static_cast<int>(t * (t - 1) / 2 * (n - 1) + t);
}

int cylinder_threshold(int n) {
    if (n < 3) throw InvalidParameter("cylinder threshold needs n >= 3");
    const std::int64_t t = ceil_two_sqrt(n);
    return static_cast<int>(t * (t - 1) / 2 * (n / 2) + t);
}

}  // namespace sgp
