#include "syzlab/toriccrepant.hpp"

#include <doctest.h>

#include <random>

using namespace syz;

namespace {

RatVector rv(std::initializer_list<long> v, long den = 1)
{
    RatVector out;
    for (long x : v)
        out.emplace_back(x, den);
    return out;
}

// Barycentric test in the (i, j) plane for the triangle of a cone; -1 outside, 0 on the boundary, 1 inside.
int locate(const ResolutionFan& fan, std::size_t cone, double x, double y)
{
    const auto& t = fan.cones[cone].rays;
    const auto p = [&](std::size_t r) {
        const auto& ijk = fan.rays[t[r]].ijk;
        return std::pair<double, double>(ijk[0], ijk[1]);
    };
    const auto [ax, ay] = p(0);
    const auto [bx, by] = p(1);
    const auto [cx, cy] = p(2);
    const double det = (bx - ax) * (cy - ay) - (cx - ax) * (by - ay);
    const double l1 = ((bx - x) * (cy - y) - (cx - x) * (by - y)) / det;
    const double l2 = ((cx - x) * (ay - y) - (ax - x) * (cy - y)) / det;
    const double l3 = 1 - l1 - l2;
    const double eps = 1e-12;
    if (l1 < -eps || l2 < -eps || l3 < -eps)
        return -1;
    if (l1 < eps || l2 < eps || l3 < eps)
        return 0;
    return 1;
}

}  // namespace

TEST_CASE("quotient lattice has index 25")
{
    CHECK(quotient_lattice_index() == 25);
    CHECK(quotient_lattice_generators().size() == 4);
    const auto basis = quotient_lattice_basis();
    CHECK(basis.size() == 3);
    CHECK((abs(determinant(IntMatrix::from_rows(basis, 3))) == 25));
    const auto cone = quotient_cone();
    CHECK(cone.strongly_convex());
    CHECK_FALSE(cone.generators_primitive());
}

TEST_CASE("lattice points of the dilated triangle by brute force")
{
    int all = 0, interior = 0, per_edge[3] = {0, 0, 0};
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j) {
            const int k = 5 - i - j;
            if (k < 0)
                continue;
            ++all;
            interior += i > 0 && j > 0 && k > 0;
            const int c[3] = {i, j, k};
            for (int e = 0; e < 3; ++e)
                per_edge[e] += c[e] == 0 && c[(e + 1) % 3] > 0 && c[(e + 2) % 3] > 0;
        }
    const auto rays = enumerate_crepant_rays();
    CHECK(rays.size() == static_cast<std::size_t>(all));
    int vertices = 0, edges = 0, inner = 0, by_edge[3] = {0, 0, 0};
    for (const auto& r : rays) {
        CHECK(r.ijk[0] + r.ijk[1] + r.ijk[2] == 5);
        switch (r.cls) {
        case RayClass::Vertex: ++vertices; break;
        case RayClass::EdgeInterior:
            ++edges;
            ++by_edge[r.edge];
            break;
        case RayClass::TriangleInterior: ++inner; break;
        }
    }
    CHECK(vertices == 3);
    CHECK(inner == interior);
    CHECK(edges == per_edge[0] + per_edge[1] + per_edge[2]);
    for (int e = 0; e < 3; ++e)
        CHECK(by_edge[e] == per_edge[e]);
    CHECK(rays.front().name().rfind("v_", 0) == 0);
}

TEST_CASE("crepancy")
{
    const std::vector<RatVector> base{rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})};
    CHECK(crepancy_check(rv({1, 1, 3}, 5), base));
    CHECK(crepancy_check(rv({0, 2, 3}, 5), base));
    CHECK_FALSE(crepancy_check(rv({2, 2, 2}, 5), base));
    CHECK_FALSE(crepancy_check(rv({-1, 3, 3}, 5), base));
    const auto d = crepancy_detail(rv({1, 1, 3}, 5), base);
    CHECK(d.lambda_sum == 1);
    CHECK(d.pairing == 1);
    CHECK(d.weight == rv({1, 1, 1}));
    CHECK_THROWS_AS(crepancy_detail(rv({1, 1, 3}, 5), {rv({1, 0, 0}), rv({2, 0, 0}), rv({0, 0, 1})}),
                    std::invalid_argument);
    for (const auto& r : enumerate_crepant_rays())
        CHECK(crepancy_check(r.coords, base));
}

TEST_CASE("triangulation is unimodular and covers the triangle exactly once")
{
    const ResolutionFan fan = triangulate_dilated_triangle();
    CHECK(fan.cones.size() == 25);
    CHECK(fan.added_rays.size() == 18);
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        CHECK(fan.doubled_area(c) == 1);
        CHECK((abs(fan.cone_determinant(c)) == 1));
        for (std::size_t d = c + 1; d < fan.cones.size(); ++d)
            CHECK_FALSE(fan.interiors_overlap(c, d));
    }

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0, 5);
    int tested = 0;
    while (tested < 2000) {
        const double x = u(rng), y = u(rng);
        if (x + y >= 5)
            continue;
        int inside = 0, boundary = 0;
        for (std::size_t c = 0; c < fan.cones.size(); ++c) {
            const int where = locate(fan, c, x, y);
            inside += where == 1;
            boundary += where == 0;
        }
        if (boundary == 0)
            CHECK(inside == 1);
        ++tested;
    }
}

TEST_CASE("divisors and the Hodge summary")
{
    const auto d = divisor_census();
    CHECK(d.total() == 100);
    const HodgeVector h = mirror_hodge_summary(d, 4);
    CHECK(h == HodgeVector{1, 0, 101, 4, 101, 0, 1});
    long chi = 0;
    for (int k = 0; k < 7; ++k)
        chi += (k % 2 ? -1 : 1) * h[k];
    CHECK(chi == 200);
    CHECK(hodge_euler(h) == chi);
}
