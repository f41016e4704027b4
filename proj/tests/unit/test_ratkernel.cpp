#include "syzlab/ratkernel.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace syz;

namespace {

// Leibniz expansion over all permutations.
Rational leibniz(const RatMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                inversions += p[a] > p[b];
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t r = 0; r < n; ++r)
            term *= m(r, p[r]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i])
                s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

RatMatrix minor_of(const RatMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    RatMatrix s(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            s(r, c) = m(rows[r], cols[c]);
    return s;
}

// Largest k with a nonzero k x k minor.
std::size_t rank_by_minors(const RatMatrix& m)
{
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
        for (const auto& rs : subsets(m.rows(), k))
            for (const auto& cs : subsets(m.cols(), k))
                if (leibniz(minor_of(m, rs, cs)) != 0)
                    return k;
    return 0;
}

Integer gcd_of_minors(const IntMatrix& m, std::size_t k)
{
    Integer g = 0;
    const RatMatrix q = to_rational(m);
    for (const auto& rs : subsets(m.rows(), k))
        for (const auto& cs : subsets(m.cols(), k)) {
            const Rational d = leibniz(minor_of(q, rs, cs));
            g = gcd(g, Integer(abs(numerator(d))));
        }
    return g;
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("rank agrees with the largest nonvanishing minor")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
        IntMatrix m = random_int_matrix(rng, r, c, -2, 2);
        if (trial % 3 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j)
                m(r - 1, j) = m(0, j) * 2;  // force a dependency
        CHECK(rank(m) == rank_by_minors(to_rational(m)));
    }
}

TEST_CASE("determinant matches the Leibniz expansion for both rings")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix m = random_int_matrix(rng, n, n, -4, 4);
        const Rational expected = leibniz(to_rational(m));
        CHECK(determinant(to_rational(m)) == expected);
        CHECK(Rational(determinant(m)) == expected);
    }
}

TEST_CASE("kernel basis spans the null space")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const RatMatrix m = to_rational(random_int_matrix(rng, 3, 5, -3, 3));
        const auto k = kernel_basis(m);
        CHECK(k.size() == m.cols() - rank(m));
        for (const auto& v : k) {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                Rational s = 0;
                for (std::size_t c = 0; c < m.cols(); ++c)
                    s += m(r, c) * v[c];
                CHECK(s == 0);
            }
        }
        if (!k.empty())
            CHECK(rank(RatMatrix::from_columns(k, m.cols())) == k.size());
    }
}

TEST_CASE("solve and inverse")
{
    const RatMatrix a{{2, 1}, {1, 1}};
    const auto x = solve(a, {Rational(3), Rational(2)});
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve(RatMatrix{{1, 1}, {1, 1}}, {Rational(1), Rational(2)}));
    const auto inv = inverse(a);
    REQUIRE(inv);
    CHECK((a * *inv).is_identity());
    CHECK_FALSE(inverse(RatMatrix{{1, 2}, {2, 4}}));
    CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), std::domain_error);
    const IntMatrix u{{2, 1}, {1, 1}};
    CHECK((u * inverse_unimodular(u)).is_identity());
}

TEST_CASE("dimension mismatch is rejected")
{
    CHECK_THROWS_AS(IntMatrix(2, 3) * IntMatrix(2, 3), DimensionError);
    CHECK_THROWS_AS(IntMatrix(2, 3) + IntMatrix(3, 2), DimensionError);
}

TEST_CASE("Smith normal form: u m v = d and invariant factors from gcds of minors")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 2 + trial % 3, c = 2 + (trial / 3) % 3;
        const IntMatrix m = random_int_matrix(rng, r, c, -6, 6);
        const SmithForm s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK((abs(determinant(s.u)) == 1));
        CHECK((abs(determinant(s.v)) == 1));
        Integer running = 1;
        for (std::size_t k = 0; k < std::min(r, c); ++k) {
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    if (i != j)
                        CHECK(s.d(i, j) == 0);
            if (k + 1 < std::min(r, c) && s.d(k, k) != 0)
                CHECK(s.d(k + 1, k + 1) % s.d(k, k) == 0);
            running *= s.d(k, k);
            CHECK(running == gcd_of_minors(m, k + 1));
        }
        CHECK(s.rank == rank(m));
    }
}

TEST_CASE("Hermite normal form")
{
    const IntMatrix h = hermite_normal_form(IntMatrix{{5, 0, 0}, {0, 5, 0}, {0, 0, 5}, {1, 1, 1}});
    CHECK(h == IntMatrix{{1, 1, 1}, {0, 5, 0}, {0, 0, 5}});
    CHECK(hermite_normal_form(IntMatrix{{2, 4}, {1, 2}}) == IntMatrix{{1, 2}});
}

TEST_CASE("saturation contains exactly the integer points of the rational span")
{
    CHECK(saturate({{2, 4, 6}}) == std::vector<IntVector>{{1, 2, 3}});
    CHECK(saturate({{2, 0}, {0, 2}}) == std::vector<IntVector>{{1, 0}, {0, 1}});

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const IntMatrix g = random_int_matrix(rng, 2, 3, -3, 3);
        std::vector<IntVector> gens{g.row(0), g.row(1)};
        for (auto& v : gens)
            for (auto& x : v)
                x *= 3;
        const auto sat = saturate(gens);
        const RatMatrix basis = to_rational(IntMatrix::from_columns(sat, 3));
        const std::size_t r = rank(to_rational(IntMatrix::from_rows(gens, 3)));
        CHECK(sat.size() == r);
        for (int a = -4; a <= 4; ++a)
            for (int b = -4; b <= 4; ++b)
                for (int c = -4; c <= 4; ++c) {
                    const RatVector p{Rational(a), Rational(b), Rational(c)};
                    std::vector<IntVector> with = gens;
                    with.push_back({a, b, c});
                    if (rank(to_rational(IntMatrix::from_rows(with, 3))) != r)
                        continue;
                    const auto coef = solve(basis, p);
                    REQUIRE(coef);
                    for (const auto& q : *coef)
                        CHECK(denominator(q) == 1);
                }
        CHECK(saturate(sat) == sat);
    }
}

TEST_CASE("lattice index by membership count")
{
    const std::vector<IntVector> gens{{5, 0, 0}, {0, 5, 0}, {0, 0, 5}, {1, 1, 1}};
    CHECK(lattice_index(gens, 3) == 25);
    // 5Z^3 lies in L, so the index is 125 over the number of members of L in [0,5)^3.
    const RatMatrix basis = to_rational(IntMatrix::from_columns(
        [&] {
            const IntMatrix h = hermite_normal_form(IntMatrix::from_rows(gens, 3));
            return std::vector<IntVector>{h.row(0), h.row(1), h.row(2)};
        }(),
        3));
    int members = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) {
                const auto coef = solve(basis, {Rational(a), Rational(b), Rational(c)});
                members += std::all_of(coef->begin(), coef->end(), [](const Rational& q) { return denominator(q) == 1; });
            }
    CHECK(125 / members == 25);
    CHECK(lattice_index({{1, 0, 0}, {0, 1, 0}}, 3) == 0);
}

TEST_CASE("content, primitivity, powers and printing")
{
    CHECK(content({6, -9, 12}) == 3);
    CHECK(is_primitive({5, 0, 1}));
    CHECK_FALSE(is_primitive({5, 0, 0}));
    const IntMatrix t{{1, -5, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(power(t, 3) == IntMatrix{{1, -15, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK((power(t, -1) * t).is_identity());
    CHECK(to_string(t) == "[[1,-5,0],[0,1,0],[0,0,1]]");
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("unimodular intertwiner of conjugate matrices")
{
    const IntMatrix a{{1, -5, 0}, {0, 1, 0}, {0, 0, 1}};
    const IntMatrix p{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
    const IntMatrix b = p * a * inverse_unimodular(p);
    const auto x = find_unimodular_intertwiner({{a, b}});
    REQUIRE(x);
    CHECK(*x * a == b * *x);
    CHECK((abs(determinant(*x)) == 1));
    // [[1,5],[0,1]] and [[1,1],[0,1]] are not conjugate over Z.
    CHECK_FALSE(find_unimodular_intertwiner({{IntMatrix{{1, 5}, {0, 1}}, IntMatrix{{1, 1}, {0, 1}}}}));
}
