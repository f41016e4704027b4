#include "syzlab/basecomplex.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace syz {

FaceLabel::FaceLabel(std::vector<int> indices) : indices_(std::move(indices))
{
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
        throw std::invalid_argument("face label has repeated index");
    for (int i : indices_)
        if (i < 1 || i > 5)
            throw std::invalid_argument("face index " + std::to_string(i) + " outside 1..5");
}

bool FaceLabel::contains(int i) const
{
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

FaceLabel FaceLabel::complement() const
{
    std::vector<int> out;
    for (int i = 1; i <= 5; ++i)
        if (!contains(i))
            out.push_back(i);
    return FaceLabel(out);
}

std::string FaceLabel::digits() const
{
    std::string s;
    for (int i : indices_)
        s += char('0' + i);
    return s;
}

std::string FaceLabel::name() const
{
    return "Delta_" + digits();
}

GraphVertex GraphVertex::from_label(const FaceLabel& label)
{
    const std::size_t n = label.size();
    if (n != 2 && n != 3)
        throw std::invalid_argument("graph vertex needs 2 or 3 indices, got " + label.digits());
    GraphVertex v{n == 2 ? VertexKind::Pair : VertexKind::Triple, label, {}};
    for (auto& x : v.barycentric)
        x = 0;
    for (int i : label.indices())
        v.barycentric[i - 1] = Rational(1, static_cast<long>(n));
    return v;
}

GraphVertex GraphVertex::pair(int i, int j)
{
    return from_label(FaceLabel({i, j}));
}

GraphVertex GraphVertex::triple(int i, int j, int k)
{
    return from_label(FaceLabel({i, j, k}));
}

std::string GraphVertex::name() const
{
    return "P_" + label.digits();
}

GraphEdge GraphEdge::make(int a, int b, int apex)
{
    if (a == b || a == apex || b == apex)
        throw std::invalid_argument("leg indices must be distinct");
    FaceLabel check({a, b, apex});
    return GraphEdge{std::min(a, b), std::max(a, b), apex};
}

std::array<int, 2> GraphEdge::complement() const
{
    const auto c = triple().complement().indices();
    return {c[0], c[1]};
}

std::string GraphEdge::name() const
{
    return "Gamma_" + std::to_string(i) + std::to_string(j) + "^" + std::to_string(k);
}

std::size_t BaseGraph::vertex_index(const FaceLabel& label) const
{
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].label == label)
            return v;
    throw std::out_of_range("no graph vertex P_" + label.digits());
}

std::size_t BaseGraph::edge_index(const GraphEdge& e) const
{
    for (std::size_t x = 0; x < edges.size(); ++x)
        if (edges[x] == e)
            return x;
    throw std::out_of_range("no leg " + e.name());
}

std::vector<std::size_t> BaseGraph::incident_edges(std::size_t vertex) const
{
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (tail[e] == vertex || head[e] == vertex)
            out.push_back(e);
    return out;
}

bool BaseGraph::connected() const
{
    if (vertices.empty())
        return true;
    std::vector<bool> seen(vertices.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        const auto v = q.front();
        q.pop();
        for (auto e : incident_edges(v)) {
            const auto w = tail[e] == v ? head[e] : tail[e];
            if (!seen[w]) {
                seen[w] = true;
                q.push(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

BaseGraph enumerate_graph()
{
    BaseGraph g;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            g.vertices.push_back(GraphVertex::pair(i, j));
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k)
                g.vertices.push_back(GraphVertex::triple(i, j, k));
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = 1; k <= 5; ++k) {
                if (k == i || k == j)
                    continue;
                const GraphEdge e{i, j, k};
                g.edges.push_back(e);
                g.tail.push_back(g.vertex_index(e.triple()));
                g.head.push_back(g.vertex_index(e.pair()));
            }
    return g;
}

std::string to_string(Stratum s)
{
    switch (s) {
    case Stratum::Interior2: return "Interior2";
    case Stratum::Edge1: return "Edge1";
    case Stratum::Vertex0: return "Vertex0";
    case Stratum::Outside: return "Outside";
    }
    return "?";
}

FattenedStratum classify_fattened(double r1, double r2, double tol)
{
    if (!(r1 >= 0) || !(r2 >= 0))
        throw std::domain_error("classify_fattened: negative or NaN face coordinate");
    if (std::hypot(r1 - 1, r2) <= tol || std::hypot(r1, r2 - 1) <= tol)
        return {Stratum::Vertex0, r1, r2};
    const double a = std::pow(r1, 5), b = std::pow(r2, 5);
    const double e[3] = {a + b - 1, a + 1 - b, b + 1 - a};
    bool on_boundary = false, inside = true, strict = true;
    for (double x : e) {
        if (std::abs(x) <= tol)
            on_boundary = true;
        if (x < -tol)
            inside = false;
        if (x <= tol)
            strict = false;
    }
    if (strict)
        return {Stratum::Interior2, r1, r2};
    if (on_boundary && inside)
        return {Stratum::Edge1, r1, r2};
    return {Stratum::Outside, r1, r2};
}

FaceLabel mirror_involution(const FaceLabel& face)
{
    return face.complement();
}

GraphVertex mirror_involution(const GraphVertex& v)
{
    return GraphVertex::from_label(v.label.complement());
}

Anchors standard_anchors()
{
    Anchors a{};
    for (int k = 0; k < 4; ++k)
        a[k][k] = 1.0;
    return a;
}

Point4 moment_image(const std::array<std::complex<double>, 5>& z, const Anchors& anchors)
{
    double total = 0;
    for (const auto& x : z)
        total += std::norm(x);
    if (total == 0)
        throw std::domain_error("moment_image: zero homogeneous coordinates");
    Point4 p{};
    for (int k = 0; k < 5; ++k) {
        const double w = std::norm(z[k]) / total;
        for (int c = 0; c < 4; ++c)
            p[c] += w * anchors[k][c];
    }
    return p;
}

}  // namespace syz
