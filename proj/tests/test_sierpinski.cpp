#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tiles/sierpinski.hpp"

using namespace tiles;

namespace {

// independent parity oracle: Pascal's rule mod 2 over a window
std::vector<std::vector<int>> pascal_parity(int64_t n) {
    std::vector<std::vector<int>> p(static_cast<size_t>(n) + 1,
                                    std::vector<int>(static_cast<size_t>(n) + 1, 0));
    for (size_t x = 0; x <= static_cast<size_t>(n); ++x) p[x][0] = p[0][x] = 1;
    for (size_t x = 1; x <= static_cast<size_t>(n); ++x)
        for (size_t y = 1; y <= static_cast<size_t>(n); ++y) p[x][y] = (p[x - 1][y] + p[x][y - 1]) % 2;
    return p;
}

int64_t pow3(int e) {
    int64_t r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

}  // namespace

TEST_CASE("standard membership examples") {
    for (int64_t n = 0; n < 40; ++n) CHECK(in_standard({0, n}));
    CHECK_FALSE(in_standard({1, 1}));
    CHECK(in_standard({5, 2}));  // C(7,2) = 21
    CHECK_FALSE(in_standard({-1, 0}));
    CHECK_FALSE(in_standard({3, -2}));
}

TEST_CASE("standard membership equals the Pascal parity oracle") {
    auto p = pascal_parity(63);
    for (int64_t x = 0; x <= 63; ++x)
        for (int64_t y = 0; y <= 63; ++y)
            CHECK(in_standard({x, y}) == (p[static_cast<size_t>(x)][static_cast<size_t>(y)] == 1));
}

TEST_CASE("standard stages") {
    CHECK(standard_stage(0) == PointSet{{0, 0}});
    CHECK(standard_stage(1) == PointSet{{0, 0}, {1, 0}, {0, 1}});
    CHECK(standard_stage(7).size() == 2187);
    for (int i = 0; i <= 12; ++i) {
        PointSet s = standard_stage(i);
        CHECK(static_cast<int64_t>(s.size()) == pow3(i));
        int64_t members = 0;
        for (Point p : s)
            if (in_standard(p)) ++members;
        CHECK(members == static_cast<int64_t>(s.size()));
    }
}

TEST_CASE("counting closed forms") {
    CountingTriple c0 = counting(0);
    CHECK(c0.l == 5);
    CHECK(c0.f == 9);
    CHECK(c0.t == 9);
    CountingTriple c1 = counting(1);
    CHECK(c1.l == 11);
    CHECK(c1.f == 30);
    CHECK(c1.t == 45);
    CHECK(counting(4).l == 95);
    for (int i = 0; i <= 16; ++i) {
        CountingTriple closed = counting(i);
        CountingTriple rec = counting_by_recurrence(i);
        CHECK(closed.l == rec.l);
        CHECK(closed.f == rec.f);
        CHECK(closed.t == rec.t);
    }
}

TEST_CASE("fibered stages match the counting functions") {
    FiberedStage s0 = fibered_stage(0);
    CHECK(s0.t == standard_stage(2));
    PointSet f0;
    for (int64_t k = -1; k <= 3; ++k) {
        f0.insert({-1, k});
        f0.insert({k, -1});
    }
    CHECK(s0.f == f0);

    FiberedStage s1 = fibered_stage(1);
    CHECK(s1.t.size() == 45);
    CHECK(s1.f.size() == 30);

    for (int i = 0; i <= 6; ++i) {
        FiberedStage s = fibered_stage(i);
        CountingTriple c = counting(i);
        CHECK(static_cast<int64_t>(s.t.size()) == c.t);
        CHECK(static_cast<int64_t>(s.f.size()) == c.f);
    }
}

TEST_CASE("ruler and theta") {
    CHECK(ruler(1) == 0);
    CHECK(theta(1) == 2);
    CHECK(ruler(6) == 1);
    CHECK(theta(6) == 16);
    CHECK(ruler(8) == 3);
    CHECK(theta(8) == 23);
    // prefix-sum identity
    for (int n = 0; n <= 16; ++n) {
        int64_t p = int64_t{1} << (n + 1);
        CHECK(ruler_prefix_sum(p - 1) == p - n - 2);
    }
}

TEST_CASE("counter height identity") {
    CHECK(counter_height_identity(0));
    CHECK(counter_height_identity(1));
    for (int i = 0; i <= 16; ++i) CHECK(counter_height_identity(i));
}

TEST_CASE("bars at index -1 collapse to single cells") {
    BarDecomposition b = bars(-1);
    CHECK(b.square == PointSet{{0, 0}});
    CHECK(b.x_bar == PointSet{{1, 0}});
    CHECK(b.y_bar == PointSet{{0, 1}});
}

TEST_CASE("bars at small indices") {
    BarDecomposition b0 = bars(0);
    PointSet x0;
    for (int64_t x = 1; x <= 3; ++x)
        for (int64_t y = -1; y <= 0; ++y) x0.insert({x, y});
    CHECK(b0.x_bar == x0);

    BarDecomposition b1 = bars(1);
    CHECK(b1.y_bar.size() == 24);  // 3 columns x 8 rows
    for (Point p : b1.y_bar) {
        CHECK(p.x >= -2);
        CHECK(p.x <= 0);
        CHECK(p.y >= 1);
        CHECK(p.y <= 8);
    }
}

TEST_CASE("theta closure base case") {
    CHECK(theta_bar_closure(Axis::X, -1) == bars(-1).x_bar);
    CHECK(theta_bar_closure(Axis::Y, -1) == bars(-1).y_bar);
}

TEST_CASE("bar closures decompose the fibered stages") {
    for (int i = 0; i <= 4; ++i) {
        PointSet lhs = bars(i).square;
        lhs.unite(theta_bar_closure(Axis::X, i));
        lhs.unite(theta_bar_closure(Axis::Y, i));
        FiberedStage s = fibered_stage(i);
        PointSet rhs = s.t;
        rhs.unite(s.f);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("axis closures reproduce the next stage") {
    for (int n = -1; n <= 2; ++n) {
        PointSet lhs{{0, 0}};
        lhs.unite(theta_axis_closure(Axis::X, n));
        lhs.unite(theta_axis_closure(Axis::Y, n));
        CHECK(lhs == fibered_stage(n + 1).t);
    }
}

TEST_CASE("axis segments") {
    CHECK(axis_segment(Axis::X, -1) == PointSet{{1, 0}, {2, 0}, {3, 0}});
    CHECK(axis_segment(Axis::Y, -1) == PointSet{{0, 1}, {0, 2}, {0, 3}});
    // the y staircase membership agrees with the materialized segment
    PointSet seg = axis_segment(Axis::Y, 3);
    for (Point p : seg) CHECK(in_y_axis(p));
    Box bb = seg.bbox();
    int64_t inside = 0;
    for (int64_t x = bb.x0; x <= bb.x1; ++x)
        for (int64_t y = bb.y0; y <= bb.y1; ++y)
            if (in_y_axis({x, y})) ++inside;
    CHECK(inside == static_cast<int64_t>(seg.size()));
}

TEST_CASE("fibered membership matches the materialized stage exhaustively") {
    CHECK(in_fibered({0, 0}));
    CHECK_FALSE(in_fibered({1, 1}));
    PointSet t3 = fibered_stage(3).t;
    Box bb = t3.bbox();
    for (int64_t x = bb.x0; x <= bb.x1; ++x)
        for (int64_t y = bb.y0; y <= bb.y1; ++y)
            CHECK(in_fibered({x, y}) == t3.contains({x, y}));
}

TEST_CASE("zeta estimates") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(std::abs(zeta_estimate_at('S', n) - std::log2(3.0)) < 1e-12);
        CHECK(static_cast<int64_t>(standard_stage(n > 8 ? 8 : n).size()) == pow3(n > 8 ? 8 : n));
    }
    CHECK(zeta_estimate_at('T', 8) == doctest::Approx(1.70).epsilon(0.01));
    CHECK(std::abs(zeta_estimate_at('T', 1000) - std::log2(3.0)) < 0.002);
    std::vector<double> est = zeta_estimates('T', 64);
    for (size_t k = 8; k + 1 < est.size(); ++k) CHECK(est[k + 1] < est[k]);
}
