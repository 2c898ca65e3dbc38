#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "latgon/body.hpp"
#include "latgon/errors.hpp"
#include "latgon/lattice.hpp"
#include "latgon/polygon.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace latgon;

TEST_CASE("primitivity") {
    CHECK(is_primitive({1, 0}));
    CHECK(is_primitive({0, -1}));
    CHECK(is_primitive({-3, 7}));
    CHECK_FALSE(is_primitive({0, 0}));
    CHECK_FALSE(is_primitive({2, 0}));
    CHECK_FALSE(is_primitive({-4, 6}));
}

TEST_CASE("slope order basics") {
    const auto sorted = slope_order({{0, 1}, {1, 0}, {-1, 0}});
    CHECK(sorted == std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, 0}});
    CHECK(slope_order({{2, 1}, {1, 2}}) == std::vector<LatticeVector>{{2, 1}, {1, 2}});
    // full turn
    const auto turn = slope_order({{0, -1}, {-1, -1}, {-1, 0}, {-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1}});
    CHECK(turn.front() == LatticeVector{1, 0});
    CHECK(turn.back() == LatticeVector{1, -1});
    // equal direction: shorter first
    CHECK(slope_order({{4, 2}, {2, 1}}) == std::vector<LatticeVector>{{2, 1}, {4, 2}});
}

TEST_CASE("slope order agrees with the float-angle oracle") {
    testing::Rng rng(31337);
    std::uniform_int_distribution<std::int64_t> coord(-50, 50);
    std::vector<LatticeVector> vs;
    while (vs.size() < 10000) {
        const LatticeVector v{coord(rng), coord(rng)};
        if (!v.is_zero()) vs.push_back(v);
    }
    const auto sorted = slope_order(vs);
    const auto angle_of = [](LatticeVector v) {
        double t = std::atan2(static_cast<double>(v.y), static_cast<double>(v.x));
        if (t < 0) t += 2.0 * std::numbers::pi;
        return t;
    };
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        const double a = angle_of(sorted[i]), b = angle_of(sorted[i + 1]);
        if (std::abs(a - b) > 1e-9) CHECK(a < b);
    }
}

TEST_CASE("increasing slope construction") {
    const LatticePolygon tri = increasing_slope_construct({{1, 0}, {0, 1}, {-1, -1}});
    CHECK(tri.vertices() == std::vector<LatticeVector>{{0, 0}, {1, 0}, {1, 1}});

    const LatticePolygon square = increasing_slope_construct({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(square.vertices() == std::vector<LatticeVector>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});

    // parallel same-direction vectors merge by summation
    int merges = 0;
    const LatticePolygon merged =
        increasing_slope_construct({{1, 0}, {2, 0}, {-3, 1}, {0, -1}}, &merges);
    CHECK(merges == 1);
    const auto edges = merged.edges();
    CHECK(std::set<std::pair<std::int64_t, std::int64_t>>{{3, 0}, {-3, 1}, {0, -1}} ==
          std::set<std::pair<std::int64_t, std::int64_t>>{
              {edges[0].x, edges[0].y}, {edges[1].x, edges[1].y}, {edges[2].x, edges[2].y}});

    CHECK_THROWS_AS(increasing_slope_construct({{1, 0}, {0, 1}, {-1, 0}}), NonZeroSum);
    CHECK_THROWS_AS(increasing_slope_construct({{1, 0}, {2, 0}, {-3, 0}}), EmptyEdgeSet);
}

TEST_CASE("construction round-trips edge extraction on random polygons") {
    testing::Rng rng(17);
    std::uniform_int_distribution<std::int64_t> coord(-9, 9);
    int done = 0;
    while (done < 200) {
        // zero-sum primitive multiset with distinct directions: a random
        // batch of primitives plus their negations
        std::vector<LatticeVector> vecs;
        const int k = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i) {
            const LatticeVector v{coord(rng), coord(rng)};
            if (!is_primitive(v)) continue;
            bool dup = false;
            for (const LatticeVector& w : vecs)
                if (same_direction(v, w)) dup = true;
            if (dup) continue;
            vecs.push_back(v);
            vecs.push_back(-v);
        }
        if (vecs.size() < 6) continue;
        ++done;
        const LatticePolygon poly = increasing_slope_construct(vecs);
        const LatticePolygon again = increasing_slope_construct(poly.edges());
        CHECK(poly.vertices() == again.vertices());
        // convexity: strict positive cross products, already enforced by the
        // type; also check the edge multiset survived
        auto a = slope_order(vecs);
        auto b = slope_order(poly.edges());
        CHECK(a == b);
    }
}

TEST_CASE("lattice point counting: squares, triangles, Gauss circle") {
    const std::vector<Vec2> square{{0, 0}, {10, 0}, {10, 10}, {0, 10}};
    const CountEstimate sq = count_lattice_points(square);
    CHECK(sq.count == 121);
    CHECK(sq.reference == doctest::Approx(100.0));
    CHECK(sq.bound == doctest::Approx(80.0));
    CHECK(std::abs(static_cast<double>(sq.count) - sq.reference) <= sq.bound);

    const std::vector<Vec2> tri{{0, 0}, {1, 0}, {0, 1}};
    CHECK(count_lattice_points(tri).count == 3);

    // Gauss circle: 81 lattice points in the closed disk of radius 5. A
    // circumscribed polygon contains them all and no extra point (the next
    // radius out is sqrt(26)).
    const CountEstimate disk5 = count_lattice_points(testing::circumscribed_disk_polygon(5.0));
    CHECK(disk5.count == 81);
}

TEST_CASE("primitive point counting with the paper bound") {
    const std::vector<Vec2> square{{-10, -10}, {10, -10}, {10, 10}, {-10, 10}};
    const CountEstimate pr = count_primitive_points(square);
    CHECK(pr.count == testing::oracle_count_points(square, true));
    CHECK(std::abs(static_cast<double>(pr.count) - pr.reference) <= pr.bound);

    const CountEstimate small = count_primitive_points(testing::circumscribed_disk_polygon(1.5));
    CHECK(small.count == 8);
    CHECK(small.reference ==
          doctest::Approx(6.0 / (std::numbers::pi * std::numbers::pi) *
                          polygon_area(testing::circumscribed_disk_polygon(1.5))));
    CHECK(std::abs(8.0 - small.reference) <= small.bound);

    // thin strip crossing only the two axis primitives
    const std::vector<Vec2> strip{{-5.3, -0.2}, {5.3, -0.2}, {5.3, 0.2}, {-5.3, 0.2}};
    CHECK(count_primitive_points(strip).count == testing::oracle_count_points(strip, true));
    CHECK(count_primitive_points(strip).count == 2);
}

TEST_CASE("counting bounds hold on random convex polygons") {
    testing::Rng rng(404);
    std::uniform_real_distribution<double> per(10.0, 500.0);
    for (int i = 0; i < 15; ++i) {
        const std::vector<Vec2> region = testing::random_convex_region(rng, per(rng));
        const CountEstimate z = count_lattice_points(region);
        CHECK(std::abs(static_cast<double>(z.count) - z.reference) <= z.bound);
        const CountEstimate p = count_primitive_points(region);
        CHECK(std::abs(static_cast<double>(p.count) - p.reference) <= p.bound);
        // and both agree with the box-scan oracle
        CHECK(z.count == testing::oracle_count_points(region, false));
        CHECK(p.count == testing::oracle_count_points(region, true));
    }
}

TEST_CASE("homogeneous sums against their integrals") {
    const std::vector<Vec2> disk20 = testing::circumscribed_disk_polygon(20.0);
    const auto euclid = [](Vec2 v) { return v.norm(); };
    const HomogeneousSum hz = homogeneous_sum(PointSet::lattice, disk20, euclid);
    CHECK(std::abs(hz.sum - hz.reference) <= hz.bound);
    const HomogeneousSum hp = homogeneous_sum(PointSet::primitive, disk20, euclid);
    CHECK(std::abs(hp.sum - hp.reference) <= hp.bound);
    // integral oracle: for the disk, integral of |x| = 2 pi R^3 / 3
    CHECK(hz.reference == doctest::Approx(2.0 * std::numbers::pi * 8000.0 / 3.0).epsilon(1e-3));

    const HomogeneousSum zero =
        homogeneous_sum(PointSet::lattice, disk20, [](Vec2) { return 0.0; });
    CHECK(zero.sum == 0.0);

    // odd function over a centrally symmetric region cancels exactly
    const std::vector<Vec2> square{{-7, -7}, {7, -7}, {7, 7}, {-7, 7}};
    const HomogeneousSum odd =
        homogeneous_sum(PointSet::lattice, square, [](Vec2 v) { return v.x; });
    CHECK(odd.sum == 0.0);

    CHECK_THROWS_AS(
        homogeneous_sum(PointSet::lattice, square, [](Vec2 v) { return v.x * v.x; }),
        ValidationError);
}

TEST_CASE("primitive_vectors_in enumerates exactly") {
    const auto disk = [](double r) {
        return [r](Vec2 p) { return p.norm() <= r; };
    };
    const auto eight = primitive_vectors_in(disk(1.5), 1.5);
    CHECK(eight.size() == 8);
    for (const LatticeVector& v : eight) CHECK(is_primitive(v));

    // vs a brute double-loop with gcd filter over the 11 x 11 box
    const auto five = primitive_vectors_in(disk(5.0), 5.0);
    std::int64_t brute = 0;
    for (std::int64_t y = -5; y <= 5; ++y)
        for (std::int64_t x = -5; x <= 5; ++x)
            if (std::gcd(std::abs(x), std::abs(y)) == 1 &&
                std::hypot(static_cast<double>(x), static_cast<double>(y)) <= 5.0)
                ++brute;
    CHECK(static_cast<std::int64_t>(five.size()) == brute);
    // deterministic slope order
    for (std::size_t i = 0; i + 1 < five.size(); ++i) CHECK(SlopeLess{}(five[i], five[i + 1]));

    CHECK(primitive_vectors_in([](Vec2) { return false; }, 3.0).empty());
    CHECK_THROWS_AS(primitive_vectors_in(disk(1.0), 2e6), ValidationError);
}

TEST_CASE("lattice polygon validation and canonical rotation") {
    CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(LatticePolygon({{0, 0}, {0, 1}, {1, 1}}), ValidationError);  // clockwise
    CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 0}, {2, 0}, {0, 1}}), ValidationError);  // collinear

    const LatticePolygon p({{1, 1}, {0, 1}, {0, 0}, {1, 0}});  // any rotation of the square
    CHECK(p.vertices().front() == LatticeVector{0, 0});
    CHECK(p.doubled_area() == 2);
}
