#include "syzlab/monodromy.hpp"

#include <doctest.h>

using namespace syz;

namespace {

bool unipotent_with_rank_one_log(const IntMatrix& t)
{
    const IntMatrix n = t - IntMatrix::identity(3);
    return (n * n).is_zero() && rank(n) == 1;
}

}  // namespace

TEST_CASE("charts and basis labels")
{
    CHECK(all_charts().size() == 20);
    const ChartId u{5, 4};
    CHECK(u.valid());
    CHECK_FALSE((ChartId{3, 3}.valid()));
    CHECK(u.name() == "U_5^4");
    CHECK(u.basis() == std::array<int, 3>{1, 2, 3});
    CHECK(u.basis_names() == std::vector<std::string>{"gamma_5^1", "gamma_5^2", "gamma_5^3"});
    CHECK((CycleSymbol{5, 1}.name()) == "gamma_5^1");
}

TEST_CASE("transition goldens")
{
    CHECK(transition({5, 4}, {5, 2}) == IntMatrix{{1, -1, 0}, {0, -1, 1}, {0, -1, 0}});
    CHECK(transition({5, 2}, {1, 2}) == IntMatrix{{0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
    CHECK(transition({1, 2}, {1, 4}) == IntMatrix{{0, -1, 0}, {1, -1, 0}, {0, -1, 1}});
    CHECK(transition({1, 4}, {5, 4}) == IntMatrix{{-1, -1, -1}, {1, 0, 0}, {0, 1, 0}});
    CHECK(transition({5, 4}, {5, 4}).is_identity());
    CHECK_THROWS_AS(transition({5, 4}, {1, 2}), IllegalStep);
    CHECK(step_kind({5, 4}, {5, 2}) == StepKind::SameDivisor);
    CHECK(step_kind({1, 4}, {5, 4}) == StepKind::SameDominant);
}

TEST_CASE("every legal transition is unimodular and reversing it inverts it")
{
    int legal = 0;
    for (const auto& a : all_charts())
        for (const auto& b : all_charts()) {
            IntMatrix m;
            try {
                m = transition(a, b);
            } catch (const IllegalStep&) {
                continue;
            }
            ++legal;
            CHECK((abs(determinant(m)) == 1));
            CHECK((transition(b, a) * m).is_identity());
        }
    // Each chart U_i^j has 3 same-divisor and 3 same-dominant neighbours plus itself.
    CHECK(legal == 20 * 7);
}

TEST_CASE("standard leg loop at U_5^4")
{
    const ChartPath loop{{5, 4}, {5, 2}, {1, 2}, {1, 4}, {5, 4}};
    CHECK(path_product(loop) == standard_leg_matrix());
    CHECK(standard_leg_matrix() == IntMatrix{{1, -5, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto op = leg_monodromy(GraphEdge::make(2, 4, 3), {5, 4});
    CHECK(op.matrix == standard_leg_matrix());
    CHECK(op.basepoint == ChartId{5, 4});
}

TEST_CASE("every leg operator is a rank-one unipotent transvection by 5")
{
    const BaseGraph g = enumerate_graph();
    for (const auto& leg : g.edges)
        for (const auto& bp : all_charts()) {
            const auto op = leg_monodromy(leg, bp);
            CHECK(unipotent_with_rank_one_log(op.matrix));
            CHECK(content(vanishing_filtration({op}).generators.front()) == 1);
            const IntMatrix n = op.matrix - IntMatrix::identity(3);
            Integer c = 0;
            for (std::size_t r = 0; r < 3; ++r)
                c = gcd(c, content(n.row(r)));
            CHECK(c == 5);
            const auto inv = leg_monodromy(leg, bp, -1);
            CHECK((inv.matrix * op.matrix).is_identity());
        }
}

TEST_CASE("vertex operators at P_234 and P_24")
{
    auto find = [](const std::vector<MonodromyOperator>& ops, const std::string& label) {
        for (const auto& op : ops)
            if (op.label == label)
                return op.matrix;
        FAIL("missing operator " << label);
        return IntMatrix();
    };
    const auto t = vertex_monodromies(GraphVertex::triple(2, 3, 4), {5, 4});
    CHECK(find(t, "T_34^2") == IntMatrix{{1, 0, 5}, {0, 1, 0}, {0, 0, 1}});
    CHECK(find(t, "T_24^3") == IntMatrix{{1, -5, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(find(t, "T_23^4") == IntMatrix{{1, 5, -5}, {0, 1, 0}, {0, 0, 1}});
    const auto p = vertex_monodromies(GraphVertex::pair(2, 4), {5, 4});
    CHECK(find(p, "T_24^1") == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 5, 1}});
    CHECK(find(p, "T_24^3") == IntMatrix{{1, -5, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(find(p, "T_24^5") == IntMatrix{{1, 5, 0}, {0, 1, 0}, {0, -5, 1}});
}

TEST_CASE("vertex identities at every vertex and basepoint")
{
    for (const auto& v : enumerate_graph().vertices) {
        const auto bps = vertex_basepoints(v);
        CHECK(bps.size() == 6);
        for (const auto& bp : bps) {
            const auto ops = vertex_monodromies(v, bp);
            REQUIRE(ops.size() == 3);
            const auto &a = ops[0].matrix, &b = ops[1].matrix, &c = ops[2].matrix;
            CHECK(a * b == b * a);
            CHECK(b * c == c * b);
            CHECK((a * b * c).is_identity());
            const std::size_t w0 = v.kind == VertexKind::Triple ? 1 : 2;
            CHECK(vanishing_filtration(ops).rank() == w0);
        }
    }
}

TEST_CASE("cycle names and basis reordering")
{
    const ChartId u{5, 4};
    CHECK(cycle_name({1, 0, 0}, u) == "gamma_5^1");
    CHECK(cycle_name({0, 0, -1}, u) == "-gamma_5^3");
    const IntMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    const IntMatrix r = reorder_basis(m, u, {2, 1, 3});
    CHECK(r == IntMatrix{{5, 4, 6}, {2, 1, 3}, {8, 7, 9}});
    CHECK(reorder_basis(r, u, {2, 1, 3}) == m);
}

TEST_CASE("E1 is the dual local system")
{
    const auto h1 = cycle_local_system();
    const auto e1 = local_system_E1();
    CHECK(e1.is_dual);
    CHECK_FALSE(h1.is_dual);
    for (const auto& edge : h1.transitions) {
        const IntMatrix d = e1.transition_matrix(edge.from, edge.to);
        CHECK(d == inverse_unimodular(edge.matrix).transpose());
    }
    const auto op = leg_monodromy(GraphEdge::make(2, 4, 3), {5, 4});
    CHECK(e1.action(op) == inverse_unimodular(op.matrix).transpose());
}

TEST_CASE("mirror conjugacy at P_24")
{
    const auto m = mirror_conjugacy(GraphVertex::pair(2, 4), {5, 4}, {2, 1});
    REQUIRE(m.found);
    CHECK((abs(determinant(m.conjugator)) == 1));
    REQUIRE(m.source.size() == m.target.size());
    for (std::size_t k = 0; k < m.source.size(); ++k)
        CHECK(m.conjugator * m.source[k] == m.target[k] * m.conjugator);
    // A hand-derived conjugator for the same pair of bases.
    const IntMatrix x{{0, 0, -1}, {0, 1, 0}, {1, 0, -1}};
    CHECK((abs(determinant(x)) == 1));
    for (std::size_t k = 0; k < m.source.size(); ++k)
        CHECK(x * m.source[k] == m.target[k] * x);
}
