#include "syzlab/monodromy.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace syz {

bool ChartId::valid() const
{
    return divisor >= 1 && divisor <= 5 && dominant >= 1 && dominant <= 5 && divisor != dominant;
}

std::array<int, 3> ChartId::basis() const
{
    std::array<int, 3> b{};
    int n = 0;
    for (int k = 1; k <= 5; ++k)
        if (k != divisor && k != dominant)
            b[n++] = k;
    return b;
}

std::string ChartId::name() const
{
    return "U_" + std::to_string(divisor) + "^" + std::to_string(dominant);
}

std::vector<std::string> ChartId::basis_names() const
{
    std::vector<std::string> out;
    for (int k : basis())
        out.push_back(CycleSymbol{divisor, k}.name());
    return out;
}

std::vector<ChartId> all_charts()
{
    std::vector<ChartId> out;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            if (i != j)
                out.push_back({i, j});
    return out;
}

std::string CycleSymbol::name() const
{
    return "gamma_" + std::to_string(lower) + "^" + std::to_string(upper);
}

IllegalStep::IllegalStep(ChartId from, ChartId to)
    : std::invalid_argument("illegal chart step " + from.name() + " -> " + to.name() +
                            " (no shared divisor or dominant index)")
{
}

StepKind step_kind(ChartId from, ChartId to)
{
    if (!from.valid() || !to.valid())
        throw std::invalid_argument("invalid chart in step " + from.name() + " -> " + to.name());
    if (from == to)
        return StepKind::Identity;
    if (from.divisor == to.divisor)
        return StepKind::SameDivisor;
    if (from.dominant == to.dominant)
        return StepKind::SameDominant;
    throw IllegalStep(from, to);
}

namespace {

using Relation = std::map<std::pair<int, int>, int>;

struct RelationSystem {
    std::vector<std::pair<int, int>> symbols;  // (lower, upper)
    std::vector<Relation> relations;
};

// Near D_i only the sum relation is visible.
RelationSystem divisor_relations(int i)
{
    RelationSystem rs;
    Relation sum;
    for (int b = 1; b <= 5; ++b)
        if (b != i) {
            rs.symbols.push_back({i, b});
            sum[{i, b}] = 1;
        }
    rs.relations.push_back(sum);
    return rs;
}

// With z_j dominant the cycles gamma_a^b (a, b != j) obey antisymmetry and the triangle rule.
RelationSystem dominant_relations(int j)
{
    RelationSystem rs;
    std::vector<int> idx;
    for (int a = 1; a <= 5; ++a)
        if (a != j)
            idx.push_back(a);
    for (int a : idx)
        for (int b : idx)
            if (a != b)
                rs.symbols.push_back({a, b});
    for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = x + 1; y < idx.size(); ++y) {
            const int a = idx[x], b = idx[y];
            rs.relations.push_back({{{a, b}, 1}, {{b, a}, 1}});
            for (std::size_t z = y + 1; z < idx.size(); ++z) {
                const int c = idx[z];
                rs.relations.push_back({{{a, b}, 1}, {{b, c}, 1}, {{c, a}, 1}});
                rs.relations.push_back({{{a, c}, 1}, {{c, b}, 1}, {{b, a}, 1}});
            }
        }
    return rs;
}

}  // namespace

IntMatrix transition(ChartId from, ChartId to)
{
    const StepKind kind = step_kind(from, to);
    if (kind == StepKind::Identity)
        return IntMatrix::identity(3);
    const RelationSystem rs =
        kind == StepKind::SameDivisor ? divisor_relations(from.divisor) : dominant_relations(from.dominant);
    std::map<std::pair<int, int>, std::size_t> pos;
    for (std::size_t s = 0; s < rs.symbols.size(); ++s)
        pos[rs.symbols[s]] = s;

    const auto tb = to.basis();
    RatMatrix a(rs.symbols.size(), 3 + rs.relations.size());
    for (std::size_t c = 0; c < 3; ++c)
        a(pos.at({to.divisor, tb[c]}), c) = 1;
    for (std::size_t r = 0; r < rs.relations.size(); ++r)
        for (const auto& [sym, coef] : rs.relations[r])
            a(pos.at(sym), 3 + r) = coef;

    IntMatrix m(3, 3);
    const auto fb = from.basis();
    for (std::size_t c = 0; c < 3; ++c) {
        RatVector rhs(rs.symbols.size());
        rhs[pos.at({from.divisor, fb[c]})] = 1;
        const auto sol = solve(a, rhs);
        if (!sol)
            throw std::logic_error("relation engine: no solution for " + from.name() + " -> " + to.name());
        for (std::size_t r = 0; r < 3; ++r) {
            if (denominator((*sol)[r]) != 1)
                throw std::logic_error("relation engine: non-integral transition " + from.name() + " -> " +
                                       to.name());
            m(r, c) = numerator((*sol)[r]);
        }
    }
    return m;
}

IntMatrix path_product(const ChartPath& path)
{
    IntMatrix t = IntMatrix::identity(3);
    for (std::size_t s = 0; s + 1 < path.size(); ++s)
        t = transition(path[s], path[s + 1]) * t;
    return t;
}

MonodromyOperator monodromy_along(const ChartPath& path, const std::string& label)
{
    if (path.empty())
        throw std::invalid_argument("monodromy_along: empty path");
    if (path.front() != path.back())
        throw std::invalid_argument("monodromy_along: path " + path.front().name() + " ... " + path.back().name() +
                                    " is not closed");
    return {path_product(path), path.front(), label, 1};
}

namespace {

int other_of(const std::array<int, 2>& pair, int x)
{
    if (pair[0] == x)
        return pair[1];
    if (pair[1] == x)
        return pair[0];
    throw std::invalid_argument("index " + std::to_string(x) + " not in pair");
}

int permutation_parity(const std::array<int, 5>& p)
{
    int inv = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            if (p[a] > p[b])
                ++inv;
    return inv % 2;
}

bool is_loop_chart(const GraphEdge& leg, ChartId c)
{
    const auto comp = leg.complement();
    return (c.divisor == comp[0] || c.divisor == comp[1]) && (c.dominant == leg.i || c.dominant == leg.j);
}

}  // namespace

ChartPath leg_loop(const GraphEdge& leg, int m, int l)
{
    const auto comp = leg.complement();
    const int i = other_of(comp, m);
    const int j = other_of({leg.i, leg.j}, l);
    return {{m, l}, {m, j}, {i, j}, {i, l}, {m, l}};
}

int leg_loop_sign(const GraphEdge& leg, int m, int l)
{
    const int i = other_of(leg.complement(), m);
    const int j = other_of({leg.i, leg.j}, l);
    return permutation_parity({i, j, leg.k, l, m}) == 0 ? 1 : -1;
}

ChartPath leg_connection(const GraphEdge& leg, ChartId basepoint)
{
    if (!basepoint.valid())
        throw std::invalid_argument("invalid basepoint chart");
    const auto comp = leg.complement();
    const bool in_comp = basepoint.divisor == comp[0] || basepoint.divisor == comp[1];
    const bool in_pair = basepoint.dominant == leg.i || basepoint.dominant == leg.j;
    if (in_comp) {
        const ChartId start{basepoint.divisor, in_pair ? basepoint.dominant : leg.j};
        return start == basepoint ? ChartPath{basepoint} : ChartPath{basepoint, start};
    }
    if (in_pair)
        return {basepoint, {std::min(comp[0], comp[1]), basepoint.dominant}};

    // Breadth-first search in canonical chart order.
    std::map<ChartId, ChartId> parent;
    std::queue<ChartId> q;
    q.push(basepoint);
    parent[basepoint] = basepoint;
    const auto charts = all_charts();
    while (!q.empty()) {
        const ChartId c = q.front();
        q.pop();
        if (is_loop_chart(leg, c)) {
            ChartPath back{c};
            for (ChartId x = c; x != basepoint; x = parent.at(x))
                back.push_back(parent.at(x));
            return ChartPath(back.rbegin(), back.rend());
        }
        for (const auto& n : charts) {
            if (parent.count(n) || (n.divisor != c.divisor && n.dominant != c.dominant))
                continue;
            parent[n] = c;
            q.push(n);
        }
    }
    throw std::logic_error("leg_connection: chart nerve disconnected");
}

MonodromyOperator leg_monodromy(const GraphEdge& leg, ChartId basepoint, int orientation)
{
    if (orientation != 1 && orientation != -1)
        throw std::invalid_argument("orientation must be +1 or -1");
    const ChartPath conn = leg_connection(leg, basepoint);
    const ChartId start = conn.back();
    IntMatrix t = path_product(leg_loop(leg, start.divisor, start.dominant));
    if (leg_loop_sign(leg, start.divisor, start.dominant) < 0)
        t = inverse_unimodular(t);
    const IntMatrix c = path_product(conn);
    t = inverse_unimodular(c) * t * c;
    if (orientation < 0)
        t = inverse_unimodular(t);
    return {t, basepoint, "T_" + std::to_string(leg.i) + std::to_string(leg.j) + "^" + std::to_string(leg.k),
            orientation};
}

std::vector<ChartId> vertex_basepoints(const GraphVertex& v)
{
    std::vector<ChartId> out;
    const FaceLabel comp = v.label.complement();
    for (int d : comp.indices())
        for (int l : v.label.indices())
            out.push_back({d, l});
    return out;
}

namespace {

std::vector<GraphEdge> legs_at(const GraphVertex& v)
{
    std::vector<GraphEdge> legs;
    const auto& idx = v.label.indices();
    if (v.kind == VertexKind::Triple) {
        for (int apex : idx) {
            std::vector<int> rest;
            for (int x : idx)
                if (x != apex)
                    rest.push_back(x);
            legs.push_back(GraphEdge::make(rest[0], rest[1], apex));
        }
    } else {
        const FaceLabel comp = v.label.complement();
        for (int apex : comp.indices())
            legs.push_back(GraphEdge::make(idx[0], idx[1], apex));
    }
    return legs;
}

}  // namespace

std::vector<MonodromyOperator> vertex_monodromies(const GraphVertex& v, ChartId basepoint)
{
    const auto allowed = vertex_basepoints(v);
    if (std::find(allowed.begin(), allowed.end(), basepoint) == allowed.end())
        throw std::invalid_argument("basepoint " + basepoint.name() + " is not adjacent to " + v.name());
    std::vector<MonodromyOperator> ops;
    for (const auto& leg : legs_at(v))
        ops.push_back(leg_monodromy(leg, basepoint));
    return ops;
}

std::string cycle_name(const IntVector& v, ChartId chart)
{
    const auto b = chart.basis();
    std::ostringstream os;
    bool first = true;
    for (std::size_t c = 0; c < 3; ++c) {
        if (v[c] == 0)
            continue;
        const Integer a = abs(v[c]);
        if (v[c] < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        if (a != 1)
            os << a << '*';
        os << CycleSymbol{chart.divisor, b[c]}.name();
        first = false;
    }
    return first ? "0" : os.str();
}

Filtration vanishing_filtration(const std::vector<MonodromyOperator>& ops)
{
    if (ops.empty())
        return {};
    std::vector<IntVector> cols;
    const ChartId base = ops.front().basepoint;
    for (const auto& op : ops) {
        if (op.basepoint != base)
            throw std::invalid_argument("vanishing_filtration: operators at different basepoints");
        const IntMatrix d = op.matrix - IntMatrix::identity(op.matrix.rows());
        for (std::size_t c = 0; c < d.cols(); ++c)
            cols.push_back(d.column(c));
    }
    Filtration f;
    f.generators = saturate(cols);
    for (const auto& g : f.generators)
        f.names.push_back(cycle_name(g, base));
    return f;
}

IntMatrix reorder_basis(const IntMatrix& m, ChartId chart, const std::array<int, 3>& order)
{
    const auto b = chart.basis();
    IntMatrix p(3, 3);
    for (std::size_t c = 0; c < 3; ++c) {
        const auto it = std::find(b.begin(), b.end(), order[c]);
        if (it == b.end())
            throw std::invalid_argument("index " + std::to_string(order[c]) + " not in basis of " + chart.name());
        p(static_cast<std::size_t>(it - b.begin()), c) = 1;
    }
    return inverse_unimodular(p) * m * p;
}

const IntMatrix& LocalSystem::transition_matrix(ChartId from, ChartId to) const
{
    for (const auto& e : transitions)
        if (e.from == from && e.to == to)
            return e.matrix;
    throw IllegalStep(from, to);
}

IntMatrix LocalSystem::along(const ChartPath& path) const
{
    IntMatrix t = IntMatrix::identity(3);
    for (std::size_t s = 0; s + 1 < path.size(); ++s)
        if (path[s] != path[s + 1])
            t = transition_matrix(path[s], path[s + 1]) * t;
    return t;
}

IntMatrix LocalSystem::action(const MonodromyOperator& op) const
{
    return is_dual ? inverse_unimodular(op.matrix).transpose() : op.matrix;
}

LocalSystem cycle_local_system()
{
    LocalSystem ls;
    ls.name = "H1";
    ls.charts = all_charts();
    for (const auto& a : ls.charts)
        for (const auto& b : ls.charts)
            if (a != b && (a.divisor == b.divisor || a.dominant == b.dominant))
                ls.transitions.push_back({a, b, transition(a, b)});
    return ls;
}

LocalSystem dual(const LocalSystem& ls)
{
    LocalSystem out = ls;
    out.is_dual = !ls.is_dual;
    for (auto& e : out.transitions)
        e.matrix = inverse_unimodular(e.matrix).transpose();
    return out;
}

LocalSystem local_system_E1()
{
    LocalSystem e1 = dual(cycle_local_system());
    e1.name = "E1";
    return e1;
}

MirrorConjugacy mirror_conjugacy(const GraphVertex& v, ChartId base_v, ChartId base_sv)
{
    const GraphVertex sv = mirror_involution(v);
    const auto at_v = vertex_monodromies(v, base_v);
    const auto at_sv = vertex_monodromies(sv, base_sv);
    MirrorConjugacy out;
    for (int e : {1, -1}) {
        std::vector<std::pair<IntMatrix, IntMatrix>> pairs;
        out.source.clear();
        out.target.clear();
        for (std::size_t k = 0; k < at_v.size(); ++k) {
            IntMatrix b = inverse_unimodular(at_v[k].matrix).transpose();
            if (e < 0)
                b = inverse_unimodular(b);
            out.source.push_back(at_sv[k].matrix);
            out.target.push_back(b);
            pairs.push_back({at_sv[k].matrix, b});
        }
        if (auto x = find_unimodular_intertwiner(pairs)) {
            out.found = true;
            out.exponent = e;
            out.conjugator = *x;
            return out;
        }
    }
    return out;
}

IntMatrix standard_leg_matrix()
{
    return IntMatrix{{1, -5, 0}, {0, 1, 0}, {0, 0, 1}};
}

}  // namespace syz
