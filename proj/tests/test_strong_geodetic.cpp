#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sgp/constructions.hpp"
#include "sgp/errors.hpp"
#include "sgp/strong_geodetic.hpp"

using namespace sgp;

namespace {

Certificate make_cert(std::vector<int> vertices, std::vector<PairGeodesic> geodesics) {
    Certificate c;
    c.vertices = std::move(vertices);
    c.geodesics = std::move(geodesics);
    return c;
}

}  // namespace

TEST_CASE("verify accepts a covering certificate") {
    auto p5 = build_path(5);
    auto report = verify_certificate(p5, make_cert({0, 4}, {{0, 4, {0, 1, 2, 3, 4}}}));
    CHECK(report.valid);
    CHECK(report.uncovered.empty());
    CHECK(report.violations.empty());
}

TEST_CASE("verify reports uncovered vertices") {
    auto c4 = build_cycle(4);
    auto report = verify_certificate(c4, make_cert({0, 2}, {{0, 2, {0, 1, 2}}}));
    CHECK_FALSE(report.valid);
    CHECK(report.uncovered == std::vector<int>{3});
    CHECK(report.violations.empty());
}

TEST_CASE("verify accepts the full C4 certificate") {
    // pair (0,2) routed through 3; derived by checking both available arcs
    auto c4 = build_cycle(4);
    auto report = verify_certificate(
        c4, make_cert({0, 1, 2}, {{0, 1, {0, 1}}, {0, 2, {0, 3, 2}}, {1, 2, {1, 2}}}));
    CHECK(report.valid);
}

TEST_CASE("verify flags structural defects") {
    auto c4 = build_cycle(4);

    auto missing = verify_certificate(c4, make_cert({0, 1, 2}, {{0, 1, {0, 1}}}));
    CHECK_FALSE(missing.valid);
    CHECK(missing.violations.size() >= 2);  // two missing pairs

    auto dup = verify_certificate(
        c4, make_cert({0, 2}, {{0, 2, {0, 1, 2}}, {0, 2, {0, 3, 2}}}));
    CHECK_FALSE(dup.valid);

    auto nongeodesic = verify_certificate(c4, make_cert({0, 3}, {{0, 3, {0, 1, 2, 3}}}));
    CHECK_FALSE(nongeodesic.valid);

    auto wrong_ends = verify_certificate(c4, make_cert({0, 2}, {{0, 2, {1, 2, 3}}}));
    CHECK_FALSE(wrong_ends.valid);

    auto stranger = verify_certificate(c4, make_cert({0, 2}, {{0, 9, {0, 9}}}));
    CHECK_FALSE(stranger.valid);

    auto unsorted = verify_certificate(c4, make_cert({2, 0}, {{0, 2, {0, 1, 2}}}));
    CHECK_FALSE(unsorted.valid);
}

TEST_CASE("singleton graph convention") {
    auto k1 = build_path(1);
    CHECK(verify_certificate(k1, make_cert({0}, {})).valid);
    auto res = strong_geodetic_number(k1);
    CHECK(res.sg == 1);
}

TEST_CASE("has_assignment basic outcomes") {
    auto p4 = build_path(4);
    auto found = has_assignment(p4, {0, 3});
    REQUIRE(found.status == AssignmentStatus::found);
    CHECK(verify_certificate(p4, *found.certificate).valid);

    auto c4 = build_cycle(4);
    CHECK(has_assignment(c4, {0, 2}).status == AssignmentStatus::none);

    auto trio = has_assignment(c4, {0, 1, 2});
    REQUIRE(trio.status == AssignmentStatus::found);
    CHECK(verify_certificate(c4, *trio.certificate).valid);
    // the (0,2) pair must take the arc through 3
    for (const auto& rec : trio.certificate->geodesics)
        if (rec.u == 0 && rec.v == 2) CHECK(rec.path == VertexPath{0, 3, 2});
}

TEST_CASE("has_assignment rejects bad input") {
    auto p4 = build_path(4);
    CHECK_THROWS_AS(has_assignment(p4, {}), InvalidParameter);
    CHECK_THROWS_AS(has_assignment(p4, {0, 0}), InvalidParameter);
    CHECK_THROWS_AS(has_assignment(p4, {0, 9}), InvalidParameter);
    auto disconnected = Graph::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(has_assignment(disconnected, {0, 1}), NotConnected);
}

TEST_CASE("truncation is inconclusive, not absence") {
    // C_4 with S = {0,1,2}: the pair (0,2) needs its second arc [0,3,2],
    // which cap = 1 hides behind the lexicographically first [0,1,2]
    auto c4 = build_cycle(4);
    SolverConfig capped;
    capped.pair_enumeration_cap = 1;
    CHECK(has_assignment(c4, {0, 1, 2}, capped).status ==
          AssignmentStatus::inconclusive_truncated);
    CHECK(has_assignment(c4, {0, 1, 2}).status == AssignmentStatus::found);

    // when a cheap bound already rules the set out, a tiny cap must not
    // turn the definitive answer into an inconclusive one
    auto c6 = build_cycle(6);
    CHECK(has_assignment(c6, {0, 3}, capped).status == AssignmentStatus::none);
}

TEST_CASE("strong geodetic number on named graphs") {
    CHECK(strong_geodetic_number(build_path(5)).sg == 2);
    CHECK(strong_geodetic_number(build_cycle(4)).sg == 3);
    CHECK(strong_geodetic_number(from_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3")).sg == 4);  // K_4

    auto [g72, lab] = build_grid(7, 2);
    auto res = strong_geodetic_number(g72);
    CHECK(res.sg == 3);
    CHECK(verify_certificate(g72, res.certificate).valid);
}

TEST_CASE("witnesses always verify") {
    std::mt19937 rng(17);
    for (int t = 0; t < 10; ++t) {
        auto g = oracle::random_connected_graph(5 + t % 3, 0.35, rng);
        auto res = strong_geodetic_number(g);
        CHECK(verify_certificate(g, res.certificate).valid);
        CHECK(res.sg >= geodetic_number(g).first);
        CHECK(res.sg >= covering_lower_bound(g));
    }
}

TEST_CASE("solver matches the naive oracle on small graphs") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : oracle::all_connected_graphs(n)) {
            CHECK(strong_geodetic_number(g).sg == oracle::naive_strong_geodetic_number(g));
        }
    }
    std::mt19937 rng(23);
    for (int t = 0; t < 12; ++t) {
        auto g = oracle::random_connected_graph(6, 0.35, rng);
        CHECK(strong_geodetic_number(g).sg == oracle::naive_strong_geodetic_number(g));
    }
}

TEST_CASE("deterministic mode reproduces witnesses byte for byte") {
    auto [g, lab] = build_grid(4, 3);
    SolverConfig cfg;
    cfg.deterministic = true;
    cfg.workers = 1;
    auto a = strong_geodetic_number(g, cfg);
    auto b = strong_geodetic_number(g, cfg);
    CHECK(a.sg == b.sg);
    CHECK(a.certificate.vertices == b.certificate.vertices);
    REQUIRE(a.certificate.geodesics.size() == b.certificate.geodesics.size());
    for (std::size_t i = 0; i < a.certificate.geodesics.size(); ++i) {
        CHECK(a.certificate.geodesics[i].u == b.certificate.geodesics[i].u);
        CHECK(a.certificate.geodesics[i].v == b.certificate.geodesics[i].v);
        CHECK(a.certificate.geodesics[i].path == b.certificate.geodesics[i].path);
    }
}

TEST_CASE("parallel sweep agrees with sequential") {
    std::mt19937 rng(29);
    for (int t = 0; t < 6; ++t) {
        auto g = oracle::random_connected_graph(6, 0.3, rng);
        SolverConfig seq;
        seq.workers = 1;
        SolverConfig par;
        par.workers = 2;
        par.deterministic = true;
        auto a = strong_geodetic_number(g, seq);
        auto b = strong_geodetic_number(g, par);
        CHECK(a.sg == b.sg);
        CHECK(a.certificate.vertices == b.certificate.vertices);
    }
}

TEST_CASE("budget exhaustion raises with a sound lower bound") {
    auto [g, lab] = build_grid(7, 7);
    SolverConfig cfg;
    cfg.budget = std::chrono::milliseconds(30);
    CHECK_THROWS_AS(strong_geodetic_number(g, cfg), BudgetExhausted);
    try {
        strong_geodetic_number(g, cfg);
    } catch (const BudgetExhausted& e) {
        CHECK(e.proven_lower_bound() >= 2);
        CHECK(e.proven_lower_bound() <= 6);
    }
}

TEST_CASE("hints answer a level without sweeping it") {
    auto [g, lab] = build_grid(12, 3);
    SolverConfig cfg;
    auto anchors = grid_anchors(12, 3);
    std::vector<int> hint;
    for (int c : anchors.positions) {
        hint.push_back(lab.encode(1, c));
        hint.push_back(lab.encode(12, c));
    }
    for (auto [side, c] : anchors.top_extras) hint.push_back(lab.encode(side, c));
    for (auto [side, c] : anchors.bottom_extras) hint.push_back(lab.encode(side, c));
    std::sort(hint.begin(), hint.end());
    cfg.hints.push_back(hint);
    auto res = strong_geodetic_number(g, cfg);
    CHECK(res.sg == 4);
    CHECK(res.certificate.vertices == hint);
}

TEST_CASE("geodetic number") {
    CHECK(geodetic_number(build_path(9)).first == 2);
    CHECK(geodetic_number(build_cycle(4)).first == 2);
    CHECK(geodetic_number(build_cycle(5)).first == 3);
    // oracle agreement on random graphs
    std::mt19937 rng(31);
    for (int t = 0; t < 8; ++t) {
        auto g = oracle::random_connected_graph(6, 0.35, rng);
        CHECK(geodetic_number(g).first == oracle::naive_geodetic_number(g));
    }
}

TEST_CASE("covering lower bound") {
    CHECK(covering_lower_bound(build_path(10)) == 2);
    CHECK(covering_lower_bound(build_path(1)) == 1);
    // K_4: one pair path covers diam+1 = 2 < 4 vertices, three cover 6
    CHECK(covering_lower_bound(from_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3")) == 3);
    auto [g77, lab] = build_grid(7, 7);
    CHECK(covering_lower_bound(g77) == 4);
}

TEST_CASE("ceil_two_sqrt") {
    CHECK(ceil_two_sqrt(1) == 2);
    CHECK(ceil_two_sqrt(2) == 3);
    CHECK(ceil_two_sqrt(4) == 4);
    CHECK(ceil_two_sqrt(7) == 6);
    CHECK(ceil_two_sqrt(16) == 8);
    CHECK(ceil_two_sqrt(25) == 10);
    for (int m = 1; m <= 500; ++m) {
        int t = ceil_two_sqrt(m);
        CHECK(t * t >= 4 * m);
        CHECK((t - 1) * (t - 1) < 4 * m);
    }
}

TEST_CASE("product lower bound") {
    CHECK(product_lower_bound(7, build_path(2), 3) == 3);
    CHECK_FALSE(product_lower_bound(6, build_path(2), 3).has_value());  // boundary 6 > 6 fails
    CHECK(product_lower_bound(17, build_path(3), 4) == 4);
    CHECK_THROWS_AS(product_lower_bound(7, build_path(2), 1), InvalidParameter);

    // monotone soundness on instances the exact solver can handle
    auto [g72, lab] = build_grid(7, 2);
    auto sg72 = strong_geodetic_number(g72).sg;
    CHECK(sg72 >= *product_lower_bound(7, build_path(2), 3));
}

TEST_CASE("find_uncrossed_layer") {
    // every construction path touches factor edges only at the end layers
    auto anchors = grid_anchors(10, 4);
    auto cert = build_certificate(anchors);
    auto [g, lab] = build_grid(10, 4);
    auto h = find_uncrossed_layer(g, lab, cert);
    REQUIRE(h.has_value());
    CHECK(*h > 1);
    CHECK(*h < 10);

    // S touching every layer leaves nothing uncrossed
    auto [g22, lab22] = build_grid(2, 2);
    auto all = has_assignment(g22, {0, 1, 2, 3});
    REQUIRE(all.status == AssignmentStatus::found);
    CHECK_FALSE(find_uncrossed_layer(g22, lab22, *all.certificate).has_value());
}
