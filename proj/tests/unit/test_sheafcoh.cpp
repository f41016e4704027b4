#include "syzlab/sheafcoh.hpp"

#include <doctest.h>

#include <cstdint>
#include <set>

using namespace syz;

namespace {

constexpr std::int64_t prime = 1000003;

std::int64_t mod_inverse(std::int64_t a)
{
    std::int64_t r = 1, e = prime - 2;
    a %= prime;
    while (e) {
        if (e & 1)
            r = r * a % prime;
        a = a * a % prime;
        e >>= 1;
    }
    return r;
}

std::int64_t reduce(const Rational& q)
{
    const Integer n = numerator(q) % prime, d = denominator(q) % prime;
    std::int64_t a = n.convert_to<std::int64_t>(), b = d.convert_to<std::int64_t>();
    a = (a % prime + prime) % prime;
    b = (b % prime + prime) % prime;
    return a * mod_inverse(b) % prime;
}

// Plain Gaussian elimination over F_p, written independently of the rational kernel.
std::size_t rank_mod_p(const RatMatrix& m)
{
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = reduce(m(r, c));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][c] == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        std::swap(a[piv], a[rank]);
        const std::int64_t inv = mod_inverse(a[rank][c]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const std::int64_t f = a[r][c] * inv % prime;
            for (std::size_t k = c; k < m.cols(); ++k)
                a[r][k] = ((a[r][k] - f * a[rank][k]) % prime + prime) % prime;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("K3 complex dimensions and cohomology")
{
    const auto spec = K3_spec();
    CHECK(spec.c0() == 280);
    CHECK(spec.c1() == 120);
    const CechComplex k3 = build_K3();
    CHECK(k3.c0 == 280);
    CHECK(k3.c1 == 120);
    CHECK(k3.d.rows() == 120);
    CHECK(k3.d.cols() == 280);
    const auto h = cohomology(k3);
    CHECK(h.rank == 120);
    CHECK(h.h0 == 160);
    CHECK(h.h1 == 0);
}

TEST_CASE("K3 differential rank agrees with an F_p elimination")
{
    const CechComplex k3 = build_K3();
    CHECK(rank_mod_p(k3.d) == k3.rank_d());
}

TEST_CASE("K3 cohomology is independent of labeling choices")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto h = cohomology(build_K3(K3Labeling::random(seed)));
        CHECK(h.h0 == 160);
        CHECK(h.h1 == 0);
    }
}

TEST_CASE("each edge row of d touches only its two endpoint blocks")
{
    const CechComplex k3 = build_K3();
    REQUIRE(k3.c0_blocks.size() == k3.c0);
    REQUIRE(k3.c1_blocks.size() == k3.c1);
    for (std::size_t r = 0; r < k3.c1; ++r) {
        std::set<std::string> touched;
        for (std::size_t c = 0; c < k3.c0; ++c)
            if (k3.d(r, c) != 0)
                touched.insert(k3.c0_blocks[c]);
        CHECK(touched.size() <= 2);
    }
}

TEST_CASE("projection at a triple vertex is surjective onto the sum-zero blocks")
{
    const auto s = surjectivity_check_pijk();
    CHECK(s.rank_pi_tilde == 13);
    CHECK(s.rank_pi == 12);
    CHECK(s.surjective());
    CHECK(s.image_sums_equal);
    CHECK(s.image_sums_zero);
    CHECK(pi_tilde_matrix().rows() == 15);
    CHECK(pi_tilde_matrix().cols() == 25);
}

TEST_CASE("K2 counts and the IC chain complex")
{
    const auto k2 = K2_dimension_count();
    CHECK(k2.c0 == 80);
    CHECK(k2.c1 == 120);
    CHECK(k2.chi == -40);
    CHECK(k2.h0 - k2.h1 == k2.chi);
    CHECK(k2.h1_R2 == 41);
    const auto ic = ic_chain_dims();
    CHECK(ic.dims == std::array<int, 4>{30, 60, 60, 30});
    CHECK(ic.euler() == 0);
    CHECK(ic.c0_simplices.size() * 3 == 30);
    CHECK(ic.c1_simplices.size() * 3 == 60);
    CHECK(ic.c2_chains.size() == 30);
    CHECK(ic.c3_chains.size() == 20);
    CHECK(ic.leg_invariant_dim == 2);
    CHECK(ic.pair_invariant_dim == 1);
    CHECK(ic.triple_invariant_dim == 2);
}

TEST_CASE("invariant dimensions of the dual local system")
{
    const auto e1 = local_system_E1();
    const auto leg = leg_monodromy(GraphEdge::make(2, 4, 3), {5, 4});
    CHECK(invariant_dimension(e1, {leg}) == 2);
    CHECK(invariant_dimension(e1, vertex_monodromies(GraphVertex::pair(2, 4), {5, 4})) == 1);
    CHECK(invariant_dimension(e1, vertex_monodromies(GraphVertex::triple(2, 3, 4), {5, 4})) == 2);
}

TEST_CASE("the cycle L is closed and a perturbation is detected")
{
    const LChain l = cycle_L();
    CHECK_FALSE(l.empty());
    CHECK(check_cycle(l).all_zero());
    LChain broken = l;
    broken.begin()->second += 1;
    CHECK_FALSE(check_cycle(broken).all_zero());
}

TEST_CASE("E2 tables")
{
    const E2Table q = assemble_E2(E2Target::Quintic);
    CHECK(q == golden_E2(E2Target::Quintic));
    CHECK(q.alternating_sum() == -200);
    CHECK(q.total_degree(3) == 204);
    CHECK(q.antidiagonal_symmetric());
    CHECK_FALSE(q.centrally_symmetric());

    const E2Table m = assemble_E2(E2Target::Mirror);
    CHECK(m == golden_E2(E2Target::Mirror));
    CHECK(m.alternating_sum() == 0);

    // Alternating sum by hand from the display rows.
    long sum = 0;
    const auto rows = q.display_rows();
    for (int r = 0; r < 4; ++r)
        for (int p = 0; p < 4; ++p)
            sum += ((p + (3 - r)) % 2 ? -1 : 1) * rows[r][p];
    CHECK(sum == -200);
    CHECK(E2Table::from_display_rows("q", rows) == q);
}

TEST_CASE("assembling E2 with a missing component throws")
{
    auto c = compute_E2_components(E2Target::Quintic);
    c.h1_K3.reset();
    CHECK_THROWS(assemble_E2(E2Target::Quintic, c));
    CHECK(e2_target_from_string(to_string(E2Target::Mirror)) == E2Target::Mirror);
    CHECK_THROWS(e2_target_from_string("nope"));
}
