#include <doctest.h>

#include "sgp/constructions.hpp"
#include "sgp/errors.hpp"
#include "sgp/strong_geodetic.hpp"

using namespace sgp;

TEST_CASE("grid anchor layout") {
    auto a16 = grid_anchors(16, 16);
    CHECK(a16.k == 4);
    CHECK(a16.ell == 0);
    CHECK(a16.positions == std::vector<int>{1, 6, 11, 16});
    CHECK(a16.top_extras.empty());
    CHECK(a16.bottom_extras.empty());
    CHECK(a16.set_size() == 8);

    auto a5 = grid_anchors(10, 5);
    CHECK(a5.k == 2);
    CHECK(a5.ell == 1);
    CHECK(a5.positions == std::vector<int>{1, 4});
    REQUIRE(a5.top_extras.size() == 1);
    CHECK(a5.top_extras[0] == std::pair<int, int>{1, 5});
    CHECK(a5.bottom_extras.empty());
    CHECK(a5.set_size() == 5);
    CHECK(a5.set_size() == ceil_two_sqrt(5));

    auto a7 = grid_anchors(12, 7);
    CHECK(a7.positions == std::vector<int>{1, 4});
    REQUIRE(a7.top_extras.size() == 1);
    REQUIRE(a7.bottom_extras.size() == 1);
    CHECK(a7.top_extras[0] == std::pair<int, int>{1, 7});
    CHECK(a7.bottom_extras[0] == std::pair<int, int>{12, 7});
    CHECK(a7.set_size() == 6);

    CHECK_THROWS_AS(grid_anchors(4, 5), InvalidParameter);  // n > r
    CHECK_THROWS_AS(grid_anchors(5, 1), InvalidParameter);
}

TEST_CASE("cylinder anchor layout") {
    auto a25 = cylinder_anchors(25, 25);
    CHECK(a25.positions == std::vector<int>{1, 6, 11, 16, 21});
    CHECK(a25.set_size() == 10);

    auto a9 = cylinder_anchors(9, 9);
    CHECK(a9.positions == std::vector<int>{1, 4, 7});
    CHECK(a9.set_size() == 6);

    auto a4 = cylinder_anchors(16, 4);
    CHECK(a4.positions == std::vector<int>{1, 3});
    CHECK(a4.set_size() == 4);

    // non-square cylinders still meet the size target
    for (int n : {5, 6, 7, 8, 12, 15}) {
        auto a = cylinder_anchors(n + 10, n);
        CHECK(a.set_size() == ceil_two_sqrt(n));
    }

    CHECK_THROWS_AS(cylinder_anchors(10, 2), InvalidParameter);
    CHECK_THROWS_AS(cylinder_anchors(4, 7), InvalidParameter);
}

TEST_CASE("thresholds") {
    CHECK(grid_threshold(2) == 6);
    CHECK(grid_threshold(3) == 16);
    CHECK(grid_threshold(4) == 22);
    CHECK(grid_threshold(7) == 96);  // C(6,2)*6 + 6
    CHECK(cylinder_threshold(3) == 10);
    CHECK(cylinder_threshold(4) == 16);
    CHECK(cylinder_threshold(9) == 66);
    CHECK_THROWS_AS(grid_threshold(1), InvalidParameter);
    CHECK_THROWS_AS(cylinder_threshold(2), InvalidParameter);
}

TEST_CASE("grid certificates verify at the target size") {
    auto a = grid_anchors(7, 4);
    auto cert = build_certificate(a);
    CHECK(cert.vertices.size() == 4);
    CHECK(cert.geodesics.size() == 6);
    auto [g, lab] = build_grid(7, 4);
    CHECK(verify_certificate(g, cert).valid);
}

TEST_CASE("construction certificates across the lemma range") {
    for (auto [r, n] : std::vector<std::pair<int, int>>{
             {2, 2}, {3, 2}, {5, 3}, {7, 4}, {10, 5}, {9, 6}, {12, 7}, {11, 9}, {20, 12}, {16, 16}}) {
        CAPTURE(r);
        CAPTURE(n);
        auto cert = build_certificate(grid_anchors(r, n));
        CHECK(static_cast<int>(cert.vertices.size()) == ceil_two_sqrt(n));
        auto [g, lab] = build_grid(r, n);
        CHECK(verify_certificate(g, cert).valid);
    }
    for (auto [r, n] : std::vector<std::pair<int, int>>{
             {3, 3}, {16, 4}, {6, 5}, {7, 6}, {10, 7}, {8, 8}, {9, 9}, {13, 13}, {25, 25}}) {
        CAPTURE(r);
        CAPTURE(n);
        auto cert = build_certificate(cylinder_anchors(r, n));
        CHECK(static_cast<int>(cert.vertices.size()) == ceil_two_sqrt(n));
        auto [g, lab] = build_cylinder(r, n);
        CHECK(verify_certificate(g, cert).valid);
    }
}

TEST_CASE("construction paths are exact product geodesics") {
    for (auto [r, n] : std::vector<std::pair<int, int>>{{7, 4}, {10, 5}, {9, 9}}) {
        auto grid_cert = build_certificate(grid_anchors(r, n));
        auto [g, lab] = build_grid(r, n);
        for (const auto& rec : grid_cert.geodesics) {
            auto d = bfs_distances(g, rec.u);
            CHECK(static_cast<int>(rec.path.size()) - 1 == d[rec.v]);
        }
    }
}

TEST_CASE("square case counting identity") {
    // k(k-1) cross pairs vs n - k uncovered rows
    for (int k : {2, 3, 4, 5}) {
        const int n = k * k;
        auto a = grid_anchors(n, n);
        CHECK(static_cast<int>(a.positions.size()) == k);
        CHECK(k * (k - 1) == n - k);
    }
}

TEST_CASE("anchor sets drive the solver to thin-product equality") {
    // Thm consistency at (n=2, r=7): threshold 6 < 7
    auto [g, lab] = build_grid(7, 2);
    CHECK(strong_geodetic_number(g).sg == ceil_two_sqrt(2));
}
