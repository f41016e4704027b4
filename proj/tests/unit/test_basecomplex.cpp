#include "syzlab/basecomplex.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

using namespace syz;

TEST_CASE("face labels sort, complement and reject bad input")
{
    const FaceLabel f({4, 1, 3});
    CHECK(f.digits() == "134");
    CHECK(f.name() == "Delta_134");
    CHECK(f.complement() == FaceLabel({2, 5}));
    CHECK(f.contains(3));
    CHECK_FALSE(f.contains(2));
    CHECK_THROWS_AS(FaceLabel({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FaceLabel({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FaceLabel({2, 6}), std::invalid_argument);
}

TEST_CASE("graph has 20 vertices, 30 legs and the expected degrees")
{
    const BaseGraph g = enumerate_graph();
    CHECK(g.vertices.size() == 20);
    CHECK(g.edges.size() == 30);
    CHECK(g.connected());

    std::set<std::string> names;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        names.insert(g.vertices[v].name());
        CHECK(g.incident_edges(v).size() == 3);
    }
    CHECK(names.size() == 20);

    // Each leg joins a triple to one of its three pairs; count by brute force over all index sets.
    int expected_legs = 0;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = 1; k <= 5; ++k)
                expected_legs += k != i && k != j;
    CHECK(expected_legs == 30);

    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& leg = g.edges[e];
        CHECK(g.vertices[g.tail[e]].label == leg.triple());
        CHECK(g.vertices[g.head[e]].label == leg.pair());
        CHECK(g.edge_index(leg) == e);
        const auto c = leg.complement();
        CHECK_FALSE(leg.triple().contains(c[0]));
        CHECK_FALSE(leg.triple().contains(c[1]));
    }
    CHECK(GraphEdge::make(4, 2, 3).name() == "Gamma_24^3");
    CHECK_THROWS_AS(GraphEdge::make(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.vertex_index(FaceLabel({1})), std::out_of_range);
}

TEST_CASE("barycentric coordinates")
{
    const auto p = GraphVertex::pair(2, 5);
    CHECK(p.name() == "P_25");
    CHECK(p.barycentric[1] == Rational(1, 2));
    CHECK(p.barycentric[4] == Rational(1, 2));
    CHECK(p.barycentric[0] == 0);
    const auto t = GraphVertex::triple(1, 3, 4);
    Rational sum = 0;
    for (const auto& x : t.barycentric)
        sum += x;
    CHECK(sum == 1);
    CHECK(t.barycentric[2] == Rational(1, 3));
    CHECK_THROWS_AS(GraphVertex::from_label(FaceLabel({1, 2, 3, 4})), std::invalid_argument);
}

TEST_CASE("mirror involution swaps pair and triple vertices")
{
    const BaseGraph g = enumerate_graph();
    std::map<std::string, int> hits;
    for (const auto& v : g.vertices) {
        const auto m = mirror_involution(v);
        CHECK(m.kind != v.kind);
        CHECK(mirror_involution(m) == v);
        ++hits[m.name()];
    }
    CHECK(hits.size() == 20);
    CHECK(mirror_involution(FaceLabel({1, 2})) == FaceLabel({3, 4, 5}));
}

TEST_CASE("fattened strata agree with the law of cosines")
{
    CHECK(classify_fattened(1, 0).tag == Stratum::Vertex0);
    CHECK(classify_fattened(0, 1).tag == Stratum::Vertex0);
    CHECK(classify_fattened(0.9, 0.95).tag == Stratum::Interior2);
    CHECK(classify_fattened(std::pow(0.5, 0.2), std::pow(0.5, 0.2)).tag == Stratum::Edge1);
    CHECK(classify_fattened(2, 0.1).tag == Stratum::Outside);
    CHECK(classify_fattened(0.1, 0.1).tag == Stratum::Outside);
    CHECK_THROWS_AS(classify_fattened(-0.1, 1), std::domain_error);
    CHECK(to_string(Stratum::Edge1) == "Edge1");

    // 1 + a e^{i alpha} + b e^{i beta} = 0 is solvable with a nondegenerate triangle
    // exactly when the cosine of the angle between the sides of length 1 and a lies strictly in (-1, 1).
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.3, 1.3);
    int interior = 0, outside = 0;
    for (int n = 0; n < 2000; ++n) {
        const double r1 = u(rng), r2 = u(rng);
        const double a = std::pow(r1, 5), b = std::pow(r2, 5);
        const double cosine = (1 + a * a - b * b) / (2 * a);
        if (std::abs(std::abs(cosine) - 1) < 1e-6)
            continue;
        const auto tag = classify_fattened(r1, r2).tag;
        if (std::abs(cosine) < 1) {
            CHECK(tag == Stratum::Interior2);
            ++interior;
        } else {
            CHECK(tag == Stratum::Outside);
            ++outside;
        }
    }
    CHECK(interior > 100);
    CHECK(outside > 100);
}

TEST_CASE("moment image is the weighted average of the anchors")
{
    const Anchors a = standard_anchors();
    std::array<std::complex<double>, 5> z{};
    z[4] = 1;
    for (double x : moment_image(z, a))
        CHECK(x == doctest::Approx(0));
    for (auto& w : z)
        w = std::polar(1.0, 0.3);
    for (double x : moment_image(z, a))
        CHECK(x == doctest::Approx(0.2));
    z = {2, 0, 0, 0, 1};
    CHECK(moment_image(z, a)[0] == doctest::Approx(0.8));
}
