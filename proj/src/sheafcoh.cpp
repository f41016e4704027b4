#include "syzlab/sheafcoh.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace syz {

int ConstructibleSheafSpec::c0() const
{
    int s = 0;
    for (const auto& v : vertex_stalks)
        s += v.count * v.dimension;
    return s;
}

int ConstructibleSheafSpec::c1() const
{
    return edge_stalk.count * edge_stalk.dimension;
}

ConstructibleSheafSpec K3_spec()
{
    return {"K3", {{"P_ijk", 10, 24}, {"P_ij", 10, 4}}, {"Gamma_ij^k", 30, 4}};
}

ConstructibleSheafSpec K2_spec()
{
    return {"K2", {{"P_ijk", 10, 8}, {"P_ij", 10, 0}}, {"Gamma_ij^k", 30, 4}};
}

CohomologyDims cohomology(const CechComplex& c)
{
    CohomologyDims h;
    h.rank = c.rank_d();
    h.h0 = c.c0 - h.rank;
    h.h1 = c.c1 - h.rank;
    return h;
}

K3Labeling K3Labeling::canonical()
{
    K3Labeling l;
    for (auto& r : l.roles)
        r = {2, 1, 0};
    for (auto& a : l.affine)
        a = {1, 0, 0};
    for (auto& p : l.pair_side)
        p = {0, 1, 2, 3, 4};
    return l;
}

K3Labeling K3Labeling::random(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    K3Labeling l;
    for (auto& r : l.roles) {
        r = {0, 1, 2};
        std::shuffle(r.begin(), r.end(), rng);
    }
    std::uniform_int_distribution<int> unit(1, 4), shift(0, 4);
    for (auto& a : l.affine)
        a = {unit(rng), shift(rng), shift(rng)};
    for (auto& p : l.pair_side) {
        p = {0, 1, 2, 3, 4};
        std::shuffle(p.begin(), p.end(), rng);
    }
    return l;
}

namespace {

int mod5(int x)
{
    return ((x % 5) + 5) % 5;
}

// Component of Q^5 on the leg with the given role (0 = u, 1 = v, 2 = w) hit by x_lm.
int role_component(int role, int l, int m, const std::array<int, 3>& affine)
{
    const int c = affine[0], a = affine[1], b = affine[2];
    const int n = mod5(-l - m);
    switch (role) {
    case 0: return mod5(c * l + a);
    case 1: return mod5(c * m + b);
    default: return mod5(c * n - a - b);
    }
}

// Coordinates (y0..y3) of e_p - e_q in the sum-zero part of Q^5.
void add_difference(RatMatrix& d, std::size_t row0, std::size_t col, int p, int q, int sign)
{
    if (p == q)
        return;
    if (p < 4)
        d(row0 + p, col) += sign;
    if (q < 4)
        d(row0 + q, col) -= sign;
}

std::vector<GraphEdge> triple_legs(const GraphVertex& v)
{
    std::vector<GraphEdge> out;
    const auto& idx = v.label.indices();
    for (int apex : idx) {
        std::vector<int> rest;
        for (int x : idx)
            if (x != apex)
                rest.push_back(x);
        out.push_back(GraphEdge::make(rest[0], rest[1], apex));
    }
    return out;
}

}  // namespace

CechComplex build_K3(const K3Labeling& labeling)
{
    const BaseGraph g = enumerate_graph();
    CechComplex cx;
    std::vector<std::size_t> offset(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        offset[v] = cx.c0;
        const std::size_t dim = g.vertices[v].kind == VertexKind::Triple ? 24 : 4;
        for (std::size_t k = 0; k < dim; ++k)
            cx.c0_blocks.push_back(g.vertices[v].name());
        cx.c0 += dim;
    }
    cx.c1 = 4 * g.edges.size();
    for (const auto& e : g.edges)
        for (int k = 0; k < 4; ++k)
            cx.c1_blocks.push_back(e.name());
    cx.d = RatMatrix(cx.c1, cx.c0);

    std::size_t triple_no = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& vert = g.vertices[v];
        if (vert.kind != VertexKind::Triple)
            continue;
        const auto legs = triple_legs(vert);
        const auto& roles = labeling.roles[triple_no];
        const auto& affine = labeling.affine[triple_no];
        ++triple_no;
        for (int role = 0; role < 3; ++role) {
            const std::size_t e = g.edge_index(legs[roles[role]]);
            const int ref = role_component(role, 4, 4, affine);
            for (int q = 0; q < 24; ++q) {
                const int comp = role_component(role, q / 5, q % 5, affine);
                add_difference(cx.d, 4 * e, offset[v] + q, comp, ref, -1);
            }
        }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& sigma = labeling.pair_side[e];
        const std::size_t v = g.head[e];
        for (int a = 0; a < 4; ++a)
            add_difference(cx.d, 4 * e, offset[v] + a, sigma[a], sigma[4], +1);
    }
    return cx;
}

RatMatrix pi_tilde_matrix()
{
    const K3Labeling l = K3Labeling::canonical();
    RatMatrix m(15, 25);
    for (int q = 0; q < 25; ++q)
        for (int role = 0; role < 3; ++role)
            m(5 * role + role_component(role, q / 5, q % 5, l.affine[0]), q) = 1;
    return m;
}

SurjectivityReport surjectivity_check_pijk()
{
    SurjectivityReport r;
    const RatMatrix pt = pi_tilde_matrix();
    r.rank_pi_tilde = rank(pt);
    r.image_sums_equal = true;
    for (std::size_t c = 0; c < pt.cols(); ++c) {
        Rational s[3] = {0, 0, 0};
        for (int role = 0; role < 3; ++role)
            for (int k = 0; k < 5; ++k)
                s[role] += pt(5 * role + k, c);
        if (s[0] != s[1] || s[1] != s[2])
            r.image_sums_equal = false;
    }
    // Restrict to the sum-zero subspace with basis x_lm - x_44.
    RatMatrix p(15, 24);
    for (int q = 0; q < 24; ++q)
        for (std::size_t row = 0; row < 15; ++row)
            p(row, q) = pt(row, q) - pt(row, 24);
    r.image_sums_zero = true;
    for (int q = 0; q < 24; ++q)
        for (int role = 0; role < 3; ++role) {
            Rational s = 0;
            for (int k = 0; k < 5; ++k)
                s += p(5 * role + k, q);
            if (s != 0)
                r.image_sums_zero = false;
        }
    // Drop the dependent fifth coordinate of each block.
    RatMatrix reduced(12, 24);
    for (int role = 0; role < 3; ++role)
        for (int k = 0; k < 4; ++k)
            for (int q = 0; q < 24; ++q)
                reduced(4 * role + k, q) = p(5 * role + k, q);
    r.rank_pi = rank(reduced);
    for (int role = 0; role < 3; ++role)
        for (int k = 0; k < 5; ++k)
            if (pt(5 * role + k, 0) != 0)
                r.x00_pattern[role] = k;
    return r;
}

K2Counts K2_dimension_count()
{
    const auto spec = K2_spec();
    K2Counts k;
    k.c0 = spec.c0();
    k.c1 = spec.c1();
    k.chi = k.c0 - k.c1;
    k.h0 = 0;
    k.h1 = k.h0 - k.chi;
    k.h1_R2 = 1 + k.h1;
    return k;
}

int invariant_dimension(const LocalSystem& ls, const std::vector<MonodromyOperator>& generators)
{
    if (generators.empty())
        return 3;
    RatMatrix stacked(3 * generators.size(), 3);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const IntMatrix a = ls.action(generators[g]) - IntMatrix::identity(3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                stacked(3 * g + r, c) = Rational(a(r, c));
    }
    return static_cast<int>(3 - rank(stacked));
}

ICChainData ic_chain_dims()
{
    const LocalSystem e1 = local_system_E1();
    const BaseGraph g = enumerate_graph();
    ICChainData ic;
    const int stalk = 3;

    for (int i = 1; i <= 5; ++i)
        ic.c0_simplices.push_back("P_" + std::to_string(i));
    for (int i = 1; i <= 5; ++i)
        ic.c0_simplices.push_back("P_bar" + std::to_string(i));
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            if (i != j)
                ic.c1_simplices.push_back("<P_" + std::to_string(i) + ",P_bar" + std::to_string(j) + ">");

    int c2 = 0;
    std::optional<int> leg_dim;
    for (const auto& leg : g.edges) {
        const ChartId base{leg.complement()[0], leg.i};
        const int d = invariant_dimension(e1, {leg_monodromy(leg, base)});
        if (leg_dim && *leg_dim != d)
            leg_dim = -1;
        else if (!leg_dim)
            leg_dim = d;
        c2 += d;
        ic.c2_chains.push_back("Delta^" + std::to_string(leg.k) + "_" + std::to_string(leg.i) + std::to_string(leg.j));
    }
    ic.leg_invariant_dim = leg_dim.value_or(0);

    int c3 = 0;
    std::optional<int> pair_dim, triple_dim;
    for (const auto& v : g.vertices) {
        const auto ops = vertex_monodromies(v, vertex_basepoints(v).front());
        const int d = invariant_dimension(e1, ops);
        auto& slot = v.kind == VertexKind::Pair ? pair_dim : triple_dim;
        if (slot && *slot != d)
            slot = -1;
        else if (!slot)
            slot = d;
        c3 += d;
        ic.c3_chains.push_back("Delta_" + v.label.digits());
    }
    ic.pair_invariant_dim = pair_dim.value_or(0);
    ic.triple_invariant_dim = triple_dim.value_or(0);

    ic.dims = {static_cast<int>(ic.c0_simplices.size()) * stalk, static_cast<int>(ic.c1_simplices.size()) * stalk, c2,
               c3};
    return ic;
}

LChain cycle_L()
{
    LChain l;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            if (i != j)
                l[{i, j}] = 1;
    return l;
}

bool ResidueReport::all_zero() const
{
    return std::all_of(entries.begin(), entries.end(), [](const ResidueEntry& e) { return e.zero; });
}

namespace {

std::string gamma(int lower, int upper)
{
    return CycleSymbol{lower, upper}.name();
}

std::string render(const std::vector<std::pair<Rational, std::string>>& terms)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, s] : terms) {
        if (c == 0)
            continue;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        const Rational a = c < 0 ? Rational(-c) : c;
        if (a != 1)
            os << a << "*";
        os << s;
        first = false;
    }
    return first ? "0" : os.str();
}

Rational coef(const LChain& chain, int i, int j)
{
    const auto it = chain.find({i, j});
    return it == chain.end() ? Rational(0) : it->second;
}

}  // namespace

ResidueReport check_cycle(const LChain& chain)
{
    ResidueReport rep;
    // d<P_i, P_jbar> = P_jbar - P_i.
    for (int j = 1; j <= 5; ++j) {
        ResidueEntry e;
        e.vertex = "P_bar" + std::to_string(j);
        std::vector<int> uppers;
        std::vector<std::pair<Rational, std::string>> terms;
        for (int i = 1; i <= 5; ++i)
            if (i != j) {
                uppers.push_back(i);
                terms.push_back({coef(chain, i, j), gamma(j, i)});
            }
        e.steps.push_back("residue = " + render(terms));
        const Rational shift = coef(chain, uppers[0], j);
        e.steps.push_back("subtract " + to_string(shift) + " * (sum_{i != " + std::to_string(j) + "} gamma_" +
                          std::to_string(j) + "^i = 0)");
        std::vector<std::pair<Rational, std::string>> rest;
        for (std::size_t t = 1; t < uppers.size(); ++t) {
            const Rational r = coef(chain, uppers[t], j) - shift;
            e.residual.push_back(r);
            rest.push_back({r, gamma(j, uppers[t])});
        }
        e.steps.push_back("in basis of U_" + std::to_string(j) + "^" + std::to_string(uppers[0]) + ": " + render(rest));
        e.zero = std::all_of(e.residual.begin(), e.residual.end(), [](const Rational& r) { return r == 0; });
        rep.entries.push_back(std::move(e));
    }
    for (int i = 1; i <= 5; ++i) {
        ResidueEntry e;
        e.vertex = "P_" + std::to_string(i);
        std::vector<std::pair<Rational, std::string>> terms, expanded;
        std::map<int, Rational> period;  // coordinates e_k, k != i
        for (int j = 1; j <= 5; ++j) {
            if (j == i)
                continue;
            const Rational c = -coef(chain, i, j);
            terms.push_back({c, gamma(j, i)});
            for (int k = 1; k <= 5; ++k) {
                if (k == i || k == j)
                    continue;
                expanded.push_back({-c, gamma(j, k)});
                period[k] += -c;
                period[j] -= -c;
            }
        }
        e.steps.push_back("residue = " + render(terms));
        e.steps.push_back("divisor relations: " + render(expanded));
        std::vector<std::pair<Rational, std::string>> pv;
        for (const auto& [k, c] : period) {
            e.residual.push_back(c);
            pv.push_back({c, "e_" + std::to_string(k)});
        }
        e.steps.push_back("period vectors with z_" + std::to_string(i) + " dominant: " + render(pv));
        e.zero = std::all_of(e.residual.begin(), e.residual.end(), [](const Rational& r) { return r == 0; });
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

long E2Table::total_degree(int n) const
{
    long s = 0;
    for (int p = 0; p < 4; ++p) {
        const int q = n - p;
        if (q >= 0 && q < 4)
            s += e[p][q];
    }
    return s;
}

long E2Table::alternating_sum() const
{
    long s = 0;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            s += ((p + q) % 2 ? -1 : 1) * e[p][q];
    return s;
}

bool E2Table::centrally_symmetric() const
{
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            if (e[p][q] != e[3 - p][3 - q])
                return false;
    return true;
}

bool E2Table::antidiagonal_symmetric() const
{
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            if (e[p][q] != e[3 - q][3 - p])
                return false;
    return true;
}

std::array<std::array<long, 4>, 4> E2Table::display_rows() const
{
    std::array<std::array<long, 4>, 4> rows{};
    for (int q = 3; q >= 0; --q)
        for (int p = 0; p < 4; ++p)
            rows[3 - q][p] = e[p][q];
    return rows;
}

E2Table E2Table::from_display_rows(const std::string& name, const std::array<std::array<long, 4>, 4>& rows)
{
    E2Table t;
    t.name = name;
    for (int q = 3; q >= 0; --q)
        for (int p = 0; p < 4; ++p)
            t.e[p][q] = rows[3 - q][p];
    return t;
}

std::string to_string(E2Target t)
{
    return t == E2Target::Quintic ? "quintic" : "mirror";
}

E2Target e2_target_from_string(const std::string& s)
{
    if (s == "quintic")
        return E2Target::Quintic;
    if (s == "mirror")
        return E2Target::Mirror;
    throw std::invalid_argument("unknown fibration '" + s + "' (quintic|mirror)");
}

E2Components compute_E2_components(E2Target target)
{
    E2Components c;
    c.h_base = std::array<long, 4>{1, 0, 0, 1};

    // h^1(i_*E1) = 1 and h^0 = h^3 = 0 are taken as given; h^2 follows from chi(R^1) = -chi(IC chains).
    const ICChainData ic = ic_chain_dims();
    const long h0 = 0, h1 = 1, h3 = 0;
    const long chi_r1 = -ic.euler();
    const long h2 = chi_r1 - h0 + h1 + h3;
    c.h_E1 = std::array<long, 4>{h0, h1, h2, h3};
    c.h_E2 = c.h_E1;

    if (target == E2Target::Quintic) {
        const auto h = cohomology(build_K3());
        c.h0_K3 = static_cast<long>(h.h0);
        c.h1_K3 = static_cast<long>(h.h1);
        const auto k2 = K2_dimension_count();
        c.h0_K2 = k2.h0;
        c.h1_K2 = k2.h1;
    } else {
        c.h0_K3 = c.h1_K3 = c.h0_K2 = c.h1_K2 = 0;
    }
    return c;
}

E2Table assemble_E2(E2Target target, const E2Components& c)
{
    auto need = [](const auto& opt, const char* name) {
        if (!opt)
            throw std::invalid_argument(std::string("assemble_E2: missing component ") + name);
        return *opt;
    };
    const auto base = need(c.h_base, "h_base");
    const auto e1 = need(c.h_E1, "h_E1");
    const auto e2 = need(c.h_E2, "h_E2");
    const long k3_0 = need(c.h0_K3, "h0_K3"), k3_1 = need(c.h1_K3, "h1_K3");
    const long k2_0 = need(c.h0_K2, "h0_K2"), k2_1 = need(c.h1_K2, "h1_K2");

    E2Table t;
    t.name = to_string(target);
    for (int p = 0; p < 4; ++p) {
        t.e[p][0] = base[p];
        t.e[p][1] = e1[p];
        t.e[p][2] = e2[p];
        t.e[p][3] = base[p];
    }
    t.e[0][2] += k2_0;
    t.e[1][2] += k2_1;
    t.e[0][3] += k3_0;
    t.e[1][3] += k3_1;
    return t;
}

E2Table golden_E2(E2Target target)
{
    if (target == E2Target::Quintic)
        return E2Table::from_display_rows("quintic", {{{161, 0, 0, 1}, {0, 41, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}}});
    return E2Table::from_display_rows("mirror", {{{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}}});
}

}  // namespace syz
