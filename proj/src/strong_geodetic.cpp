#include "sgp/strong_geodetic.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <set>
#include <thread>
#include <unordered_set>

#include "sgp/errors.hpp"

namespace sgp {
namespace {

// BFS that tolerates disconnected graphs: -1 marks unreachable vertices.
// The verifier reports defects instead of throwing, so it cannot use the
// throwing bfs_distances.
std::vector<int> bfs_partial(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

struct Deadline {
    std::chrono::steady_clock::time_point at{};
    bool enabled = false;

    static Deadline from(std::chrono::milliseconds budget) {
        Deadline d;
        if (budget.count() > 0) {
            d.enabled = true;
            d.at = std::chrono::steady_clock::now() + budget;
        }
        return d;
    }
    bool expired() const { return enabled && std::chrono::steady_clock::now() >= at; }
};

// Per-graph tables shared across every subset the solver touches: all-pairs
// distances, one interval mask per unordered pair, one shortest-path DAG per
// source. Everything read-only after construction, so workers share freely.
struct GraphContext {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> dist;
    std::vector<VertexSet> intervals;  // index u * n + v, u < v
    std::vector<ShortestPathDag> dags;

    explicit GraphContext(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        dist.reserve(n);
        for (int v = 0; v < n; ++v) dist.push_back(bfs_distances(g, v));
        intervals.resize(static_cast<std::size_t>(n) * n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                VertexSet m(n);
                const int d = dist[u][v];
                for (int w = 0; w < n; ++w)
                    if (dist[u][w] + dist[w][v] == d) m.add(w);
                intervals[static_cast<std::size_t>(u) * n + v] = std::move(m);
            }
        }
        dags.reserve(n);
        for (int v = 0; v < n; ++v) dags.push_back(build_dag(g, v));
    }

    const VertexSet& interval_of(int u, int v) const {
        if (u > v) std::swap(u, v);
        return intervals[static_cast<std::size_t>(u) * n + v];
    }
};

// Lazily materialized geodesics of one pair, with coverage masks.
struct CachedPairPaths {
    GeodesicEnumerator en;
    int universe;
    std::vector<VertexPath> paths;
    std::vector<VertexSet> masks;
    bool exhausted = false;

    CachedPairPaths(const GraphContext& ctx, int source, int target, std::uint64_t cap)
        : en(ctx.g, ctx.dags[source], target, cap, ctx.dist[target]),
          universe(ctx.n) {}

    bool ensure(std::size_t idx) {
        while (paths.size() <= idx && !exhausted) {
            auto p = en.next();
            if (!p) {
                exhausted = true;
                break;
            }
            VertexSet m(universe);
            for (int v : *p) m.add(v);
            paths.push_back(std::move(*p));
            masks.push_back(std::move(m));
        }
        return idx < paths.size();
    }
};

struct SearchState {
    const GraphContext& ctx;
    const SolverConfig& cfg;
    const Deadline& deadline;
    std::vector<std::pair<int, int>> pairs;              // in search order
    std::vector<std::unique_ptr<CachedPairPaths>> cache;  // parallel to pairs
    std::vector<VertexSet> suffix_union;                 // suffix interval unions
    std::vector<VertexSet> covered;                      // one scratch set per depth
    std::vector<std::size_t> chosen;
    std::vector<int> pair_dist;                          // d(u,v) per search level
    // proven-failed covered states per level; single-word universes only
    std::vector<std::unordered_set<std::uint64_t>> failed_memo;
    bool truncated = false;
    bool budget_hit = false;
    std::uint32_t tick = 0;

    SearchState(const GraphContext& c, const SolverConfig& f, const Deadline& d)
        : ctx(c), cfg(f), deadline(d) {}

    // Remaining pairs cannot close the coverage gap: every pair contributes
    // at most min(d-1, |interval ∩ needed|) fresh vertices (its endpoints
    // are S vertices, covered from the start).
    bool capacity_prune(std::size_t level) const {
        const VertexSet& cov = covered[level];
        const std::size_t words = cov.word_count();
        std::int64_t gap = 0;
        for (std::size_t w = 0; w < words; ++w)
            gap += __builtin_popcountll(suffix_union[0].word(w) & ~cov.word(w));
        // suffix_union[0] spans the whole universe whenever the root interval
        // precheck passed, making the complement-of-covered count exact
        std::int64_t budget = 0;
        for (std::size_t i = level; i < pairs.size(); ++i) {
            const VertexSet& iv = ctx.interval_of(pairs[i].first, pairs[i].second);
            std::int64_t in_need = 0;
            for (std::size_t w = 0; w < words; ++w)
                in_need += __builtin_popcountll(iv.word(w) & ~cov.word(w));
            budget += std::min<std::int64_t>(pair_dist[i] - 1, in_need);
            if (budget >= gap) return false;
        }
        return budget < gap;
    }

    // Two reductions on top of plain backtracking, both preserving the
    // lexicographically first solution:
    //  - a path must cover every vertex that no later pair can reach
    //    ("must" mask: uncovered and outside the suffix interval union);
    //  - among paths contributing identical fresh coverage, only the first
    //    can appear in the lex-least solution, so the rest are skipped.
    bool dfs(std::size_t level) {
        if ((++tick & 255u) == 0 && deadline.expired()) {
            budget_hit = true;
            return false;
        }
        if (!covered[level].union_is_full(suffix_union[level])) return false;
        if (level == pairs.size()) return true;
        if (capacity_prune(level)) return false;
        auto& pc = *cache[level];
        const VertexSet& cov = covered[level];
        const VertexSet& suff = suffix_union[level + 1];
        const std::size_t words = cov.word_count();

        if (words == 1) {
            const std::uint64_t covw = cov.word(0);
            if (failed_memo[level].count(covw)) return false;
            const std::uint64_t full =
                ctx.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ctx.n) - 1;
            const std::uint64_t need = full & ~covw;
            const std::uint64_t must = need & ~suff.word(0);
            std::vector<std::uint64_t> tried;
            for (std::size_t idx = 0; pc.ensure(idx); ++idx) {
                if (budget_hit) return false;
                const std::uint64_t mask = pc.masks[idx].word(0);
                if ((must & ~mask) != 0) continue;
                const std::uint64_t fresh = mask & need;
                if (std::find(tried.begin(), tried.end(), fresh) != tried.end()) continue;
                tried.push_back(fresh);
                covered[level + 1] = cov;
                covered[level + 1] |= pc.masks[idx];
                if (dfs(level + 1)) {
                    chosen[level] = idx;
                    return true;
                }
            }
            if (pc.en.truncated()) truncated = true;
            // only a cleanly exhausted node is a proven dead end
            if (!truncated && !budget_hit) failed_memo[level].insert(covw);
            return false;
        }

        // multi-word universe: same logic, set of full fresh-coverage vectors
        std::set<std::vector<std::uint64_t>> tried_wide;
        std::vector<std::uint64_t> fresh(words);
        for (std::size_t idx = 0; pc.ensure(idx); ++idx) {
            if (budget_hit) return false;
            const VertexSet& mask = pc.masks[idx];
            bool covers_must = true;
            for (std::size_t w = 0; w < words && covers_must; ++w) {
                const std::uint64_t need = ~cov.word(w);
                const std::uint64_t must = need & ~suff.word(w);
                if ((must & ~mask.word(w)) != 0) covers_must = false;
                fresh[w] = mask.word(w) & need;
            }
            if (!covers_must) continue;
            if (!tried_wide.insert(fresh).second) continue;
            covered[level + 1] = cov;
            covered[level + 1] |= mask;
            if (dfs(level + 1)) {
                chosen[level] = idx;
                return true;
            }
        }
        if (pc.en.truncated()) truncated = true;
        return false;
    }
};

// Core existential search for a fixed, validated, ascending S.
AssignmentResult assignment_search(const GraphContext& ctx, const std::vector<int>& s,
                                   const SolverConfig& cfg, const Deadline& deadline) {
    const int n = ctx.n;
    const int k = static_cast<int>(s.size());

    VertexSet base(n);
    for (int v : s) base.add(v);

    if (k == 1) {
        // no pairs; S covers only itself
        if (n == 1) return {AssignmentStatus::found, Certificate{s, {}}};
        return {AssignmentStatus::none, std::nullopt};
    }

    // capacity bound: the pairwise paths carry sum(d+1) vertex slots, and
    // each S vertex occupies k-1 of them, so coverage tops out at
    // sum(d+1) - k(k-2)
    std::int64_t capacity = -static_cast<std::int64_t>(k) * (k - 2);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) capacity += ctx.dist[s[i]][s[j]] + 1;
    if (capacity < n) return {AssignmentStatus::none, std::nullopt};

    // cheap union bound: no selection can cover what the intervals cannot
    VertexSet reach = base;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) reach |= ctx.interval_of(s[i], s[j]);
    if (!reach.is_full()) return {AssignmentStatus::none, std::nullopt};

    struct PairInfo {
        int u, v;
        const BigUint* count;
    };
    std::vector<PairInfo> infos;
    infos.reserve(k * (k - 1) / 2);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            infos.push_back({s[i], s[j], &ctx.dags[s[i]].sigma[s[j]]});

    // constrained pairs first: ascending geodesic count, ties lexicographic
    std::stable_sort(infos.begin(), infos.end(), [](const PairInfo& a, const PairInfo& b) {
        int c = a.count->compare(*b.count);
        if (c != 0) return c < 0;
        return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
    });

    SearchState st(ctx, cfg, deadline);
    const std::size_t m = infos.size();
    st.pairs.reserve(m);
    st.cache.reserve(m);
    st.pair_dist.reserve(m);
    for (const auto& pi : infos) {
        st.pairs.emplace_back(pi.u, pi.v);
        st.cache.push_back(
            std::make_unique<CachedPairPaths>(ctx, pi.u, pi.v, cfg.pair_enumeration_cap));
        st.pair_dist.push_back(ctx.dist[pi.u][pi.v]);
    }
    st.suffix_union.assign(m + 1, VertexSet(n));
    for (std::size_t i = m; i-- > 0;) {
        st.suffix_union[i] = st.suffix_union[i + 1];
        st.suffix_union[i] |= ctx.interval_of(st.pairs[i].first, st.pairs[i].second);
    }
    st.covered.assign(m + 1, VertexSet(n));
    st.covered[0] = base;
    st.chosen.assign(m, 0);
    st.failed_memo.assign(m + 1, {});

    if (st.dfs(0)) {
        Certificate cert;
        cert.vertices = s;
        cert.geodesics.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            auto [u, v] = st.pairs[i];
            cert.geodesics.push_back({u, v, st.cache[i]->paths[st.chosen[i]]});
        }
        std::sort(cert.geodesics.begin(), cert.geodesics.end(),
                  [](const PairGeodesic& a, const PairGeodesic& b) {
                      return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
                  });
        return {AssignmentStatus::found, std::move(cert)};
    }
    if (st.budget_hit) return {AssignmentStatus::inconclusive_budget, std::nullopt};
    if (st.truncated) return {AssignmentStatus::inconclusive_truncated, std::nullopt};
    return {AssignmentStatus::none, std::nullopt};
}

std::vector<int> validated_set(const Graph& g, const std::vector<int>& s) {
    if (s.empty()) throw InvalidParameter("vertex set must be nonempty");
    std::vector<int> out = s;
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw InvalidParameter("vertex set contains duplicates");
    for (int v : out)
        if (!g.valid_vertex(v)) throw InvalidParameter("vertex id " + std::to_string(v) + " out of range");
    return out;
}

// --- lexicographic k-subset machinery -------------------------------------

constexpr std::uint64_t kBinomCap = std::uint64_t{1} << 62;

// Pascal's triangle with saturation; row a holds C(a, 0..k).
std::vector<std::vector<std::uint64_t>> binom_table(int n, int k) {
    std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(k + 1, 0));
    for (int a = 0; a <= n; ++a) {
        t[a][0] = 1;
        for (int b = 1; b <= std::min(a, k); ++b) {
            std::uint64_t s = t[a - 1][b - 1] + (b <= a - 1 ? t[a - 1][b] : 0);
            t[a][b] = std::min(s, kBinomCap);
        }
    }
    return t;
}

std::vector<int> unrank_combination(std::uint64_t rank, int n, int k,
                                    const std::vector<std::vector<std::uint64_t>>& binom) {
    std::vector<int> c(k);
    int x = 0;
    for (int i = 0; i < k; ++i) {
        while (binom[n - 1 - x][k - 1 - i] <= rank) {
            rank -= binom[n - 1 - x][k - 1 - i];
            ++x;
        }
        c[i] = x++;
    }
    return c;
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// interval-union test: necessary for classical geodetic sets and for strong
// geodetic candidates alike
bool intervals_cover(const GraphContext& ctx, const std::vector<int>& comb, VertexSet& scratch) {
    scratch.clear();
    for (std::size_t i = 0; i < comb.size(); ++i) {
        scratch.add(comb[i]);
        for (std::size_t j = i + 1; j < comb.size(); ++j)
            scratch |= ctx.interval_of(comb[i], comb[j]);
    }
    return scratch.is_full();
}

// strong-geodetic precheck: the capacity bound (fixed paths carry at most
// sum(d+1) - k(k-2) distinct vertices) plus the interval union
bool subset_precheck(const GraphContext& ctx, const std::vector<int>& comb, VertexSet& scratch) {
    const int k = static_cast<int>(comb.size());
    std::int64_t capacity = -static_cast<std::int64_t>(k) * (k - 2);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) capacity += ctx.dist[comb[i]][comb[j]] + 1;
    if (capacity < ctx.n) return false;
    return intervals_cover(ctx, comb, scratch);
}

struct LevelOutcome {
    std::optional<Certificate> certificate;
    bool inconclusive_truncated = false;
    bool budget_hit = false;
};

LevelOutcome sweep_level_sequential(const GraphContext& ctx, int k, const SolverConfig& cfg,
                                    const Deadline& deadline) {
    LevelOutcome out;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    VertexSet scratch(ctx.n);
    std::uint32_t tick = 0;
    do {
        if ((++tick & 255u) == 0 && deadline.expired()) {
            out.budget_hit = true;
            return out;
        }
        if (!subset_precheck(ctx, comb, scratch)) continue;
        auto res = assignment_search(ctx, comb, cfg, deadline);
        switch (res.status) {
            case AssignmentStatus::found:
                out.certificate = std::move(res.certificate);
                return out;
            case AssignmentStatus::none:
                break;
            case AssignmentStatus::inconclusive_truncated:
                out.inconclusive_truncated = true;
                break;
            case AssignmentStatus::inconclusive_budget:
                out.budget_hit = true;
                return out;
        }
    } while (next_combination(comb, ctx.n));
    return out;
}

LevelOutcome sweep_level_parallel(const GraphContext& ctx, int k, const SolverConfig& cfg,
                                  const Deadline& deadline) {
    const int n = ctx.n;
    if (cfg.workers <= 1) return sweep_level_sequential(ctx, k, cfg, deadline);
    auto binom = binom_table(n, k);
    const std::uint64_t total = binom[n][k];
    if (total >= kBinomCap) return sweep_level_sequential(ctx, k, cfg, deadline);

    constexpr std::uint64_t kBlock = 2048;
    const std::uint64_t nblocks = (total + kBlock - 1) / kBlock;
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> best_block{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<bool> truncated_any{false};
    std::atomic<bool> budget_any{false};
    std::mutex hits_mu;
    std::map<std::uint64_t, Certificate> hits;

    auto worker = [&]() {
        VertexSet scratch(n);
        while (true) {
            std::uint64_t b = next_block.fetch_add(1);
            if (b >= nblocks) return;
            if (cfg.deterministic) {
                // blocks after the earliest hit cannot improve the witness
                if (b > best_block.load()) continue;
            } else if (best_block.load() != std::numeric_limits<std::uint64_t>::max()) {
                return;
            }
            std::uint64_t rank = b * kBlock;
            const std::uint64_t end = std::min(rank + kBlock, total);
            auto comb = unrank_combination(rank, n, k, binom);
            for (; rank < end; ++rank, next_combination(comb, n)) {
                if ((rank & 63u) == 0) {
                    if (deadline.expired()) {
                        budget_any = true;
                        return;
                    }
                    if (!cfg.deterministic &&
                        best_block.load() != std::numeric_limits<std::uint64_t>::max())
                        return;
                }
                if (!subset_precheck(ctx, comb, scratch)) continue;
                auto res = assignment_search(ctx, comb, cfg, deadline);
                if (res.status == AssignmentStatus::found) {
                    std::lock_guard<std::mutex> lk(hits_mu);
                    hits.emplace(b, std::move(*res.certificate));
                    std::uint64_t cur = best_block.load();
                    while (b < cur && !best_block.compare_exchange_weak(cur, b)) {
                    }
                    break;  // later subsets in this block cannot beat this hit
                }
                if (res.status == AssignmentStatus::inconclusive_truncated) truncated_any = true;
                if (res.status == AssignmentStatus::inconclusive_budget) {
                    budget_any = true;
                    return;
                }
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(cfg.workers);
    for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    LevelOutcome out;
    if (!hits.empty()) {
        out.certificate = std::move(hits.begin()->second);
        return out;
    }
    out.budget_hit = budget_any.load();
    out.inconclusive_truncated = truncated_any.load();
    return out;
}

int covering_lower_bound_impl(int n, int diam) {
    if (n <= 1) return 1;
    for (int k = 2;; ++k) {
        std::uint64_t paths = static_cast<std::uint64_t>(k) * (k - 1) / 2;
        if (paths * (diam + 1) >= static_cast<std::uint64_t>(n)) return k;
    }
}

}  // namespace

CoverageReport verify_certificate(const Graph& g, const Certificate& cert) {
    CoverageReport report;
    const int n = g.vertex_count();
    auto bad_vertex = [&](int v) { return v < 0 || v >= n; };

    // S: strictly ascending valid ids
    bool s_ok = true;
    if (cert.vertices.empty()) {
        report.violations.push_back("vertex set is empty");
        s_ok = false;
    }
    for (int v : cert.vertices)
        if (bad_vertex(v)) {
            report.violations.push_back("vertex id " + std::to_string(v) + " out of range");
            s_ok = false;
        }
    for (std::size_t i = 0; i + 1 < cert.vertices.size(); ++i)
        if (cert.vertices[i] >= cert.vertices[i + 1]) {
            report.violations.push_back("vertex set not strictly ascending");
            s_ok = false;
            break;
        }

    // pair bookkeeping: exactly the C(|S|,2) unordered pairs, each once
    std::set<std::pair<int, int>> expected;
    if (s_ok)
        for (std::size_t i = 0; i < cert.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < cert.vertices.size(); ++j)
                expected.emplace(cert.vertices[i], cert.vertices[j]);

    std::set<std::pair<int, int>> seen;
    VertexSet covered(n);
    for (int v : cert.vertices)
        if (!bad_vertex(v)) covered.add(v);

    for (const auto& rec : cert.geodesics) {
        const std::string tag = "pair (" + std::to_string(rec.u) + "," + std::to_string(rec.v) + ")";
        int lo = std::min(rec.u, rec.v), hi = std::max(rec.u, rec.v);
        if (bad_vertex(rec.u) || bad_vertex(rec.v)) {
            report.violations.push_back(tag + ": endpoint out of range");
            continue;
        }
        if (rec.u == rec.v) {
            report.violations.push_back(tag + ": not a pair of distinct vertices");
            continue;
        }
        if (s_ok && !expected.count({lo, hi}))
            report.violations.push_back(tag + ": endpoints are not a pair of S");
        if (!seen.emplace(lo, hi).second)
            report.violations.push_back(tag + ": duplicate pair");

        bool path_ok = !rec.path.empty();
        if (!path_ok) report.violations.push_back(tag + ": empty path");
        for (int v : rec.path)
            if (bad_vertex(v)) {
                report.violations.push_back(tag + ": path vertex out of range");
                path_ok = false;
                break;
            }
        if (!path_ok) continue;

        if (rec.path.front() != rec.u || rec.path.back() != rec.v)
            report.violations.push_back(tag + ": path endpoints do not match the pair");
        std::set<int> dedupe(rec.path.begin(), rec.path.end());
        if (dedupe.size() != rec.path.size())
            report.violations.push_back(tag + ": path repeats a vertex");
        bool adjacent = true;
        for (std::size_t i = 0; i + 1 < rec.path.size(); ++i)
            if (!g.has_edge(rec.path[i], rec.path[i + 1])) {
                adjacent = false;
                break;
            }
        if (!adjacent) {
            report.violations.push_back(tag + ": consecutive path vertices not adjacent");
        } else {
            auto dist = bfs_partial(g, rec.path.front());
            if (static_cast<int>(rec.path.size()) - 1 != dist[rec.path.back()])
                report.violations.push_back(tag + ": path is not a geodesic");
        }
        for (int v : rec.path) covered.add(v);
    }

    if (s_ok)
        for (auto [u, v] : expected)
            if (!seen.count({u, v}))
                report.violations.push_back("pair (" + std::to_string(u) + "," +
                                            std::to_string(v) + "): missing geodesic");

    for (int v = 0; v < n; ++v)
        if (!covered.contains(v)) report.uncovered.push_back(v);

    report.valid = report.violations.empty() && report.uncovered.empty();
    return report;
}

AssignmentResult has_assignment(const Graph& g, const std::vector<int>& s,
                                const SolverConfig& cfg) {
    if (cfg.pair_enumeration_cap < 1) throw InvalidParameter("enumeration cap must be >= 1");
    auto sorted = validated_set(g, s);
    GraphContext ctx(g);  // throws NotConnected eagerly
    Deadline deadline = Deadline::from(cfg.budget);
    return assignment_search(ctx, sorted, cfg, deadline);
}

SgResult strong_geodetic_number(const Graph& g, const SolverConfig& cfg) {
    if (cfg.pair_enumeration_cap < 1) throw InvalidParameter("enumeration cap must be >= 1");
    if (cfg.workers < 1) throw InvalidParameter("worker count must be >= 1");
    const int n = g.vertex_count();
    if (n == 0) throw InvalidParameter("empty graph");
    if (n == 1) return {1, Certificate{{0}, {}}};

    GraphContext ctx(g);
    Deadline deadline = Deadline::from(cfg.budget);

    int diam = 0;
    for (int v = 0; v < n; ++v) diam = std::max(diam, *std::max_element(ctx.dist[v].begin(), ctx.dist[v].end()));
    const int k_start = std::max(2, covering_lower_bound_impl(n, diam));

    for (int k = k_start; k <= n; ++k) {
        bool level_truncated = false;

        for (const auto& hint : cfg.hints) {
            if (static_cast<int>(hint.size()) != k) continue;
            auto hs = validated_set(g, hint);
            if (static_cast<int>(hs.size()) != k) continue;  // duplicates collapsed
            auto res = assignment_search(ctx, hs, cfg, deadline);
            if (res.status == AssignmentStatus::found) return {k, std::move(*res.certificate)};
            if (res.status == AssignmentStatus::inconclusive_truncated) level_truncated = true;
            if (res.status == AssignmentStatus::inconclusive_budget) throw BudgetExhausted(k);
        }

        auto outcome = sweep_level_parallel(ctx, k, cfg, deadline);
        if (outcome.certificate) return {k, std::move(*outcome.certificate)};
        if (outcome.budget_hit) throw BudgetExhausted(k);
        if (outcome.inconclusive_truncated || level_truncated) throw TruncationInconclusive(k);
        // k definitively admits no strong geodetic set; move up
    }
    // unreachable: S = V always succeeds
    throw std::logic_error("strong_geodetic_number: sweep exhausted all sizes");
}

std::pair<int, std::vector<int>> geodetic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw InvalidParameter("empty graph");
    if (n == 1) return {1, {0}};
    GraphContext ctx(g);

    for (int k = 2; k <= n; ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        VertexSet scratch(n);
        do {
            if (intervals_cover(ctx, comb, scratch)) return {k, comb};
        } while (next_combination(comb, n));
    }
    throw std::logic_error("geodetic_number: sweep exhausted all sizes");
}

int covering_lower_bound(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw InvalidParameter("empty graph");
    if (n == 1) return 1;
    return covering_lower_bound_impl(n, diameter(g));
}

int ceil_two_sqrt(int m) {
    if (m < 0) throw InvalidParameter("ceil_two_sqrt of a negative number");
    int t = 0;
    while (static_cast<std::int64_t>(t) * t < std::int64_t{4} * m) ++t;
    return t;
}

std::optional<int> product_lower_bound(int r, const Graph& g, int u) {
    if (u < 2) throw InvalidParameter("upper bound u must be >= 2");
    if (r < 2) throw InvalidParameter("path factor needs r >= 2");
    const std::int64_t d = diameter(g);
    const std::int64_t threshold = d * (static_cast<std::int64_t>(u) * (u - 1) / 2) + u;
    if (r > threshold) return ceil_two_sqrt(g.vertex_count());
    return std::nullopt;
}

std::optional<int> find_uncrossed_layer(const Graph& product, const LayerLabeling& labeling,
                                        const Certificate& cert) {
    (void)product;
    const int r = labeling.left_size();
    std::vector<char> touched(r + 1, 0);
    for (int v : cert.vertices) touched[labeling.decode(v).first] = 1;
    for (const auto& rec : cert.geodesics) {
        for (std::size_t i = 0; i + 1 < rec.path.size(); ++i) {
            auto [ia, ja] = labeling.decode(rec.path[i]);
            auto [ib, jb] = labeling.decode(rec.path[i + 1]);
            if (ia == ib) touched[ia] = 1;  // an edge inside layer ia
        }
    }
    for (int h = 1; h <= r; ++h)
        if (!touched[h]) return h;
    return std::nullopt;
}

}  // namespace sgp
