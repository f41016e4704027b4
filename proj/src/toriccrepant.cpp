#include "syzlab/toriccrepant.hpp"

#include <algorithm>
#include <stdexcept>

namespace syz {

bool LatticeCone::generators_primitive() const
{
    return std::all_of(generators.begin(), generators.end(), [](const IntVector& v) { return is_primitive(v); });
}

bool LatticeCone::strongly_convex() const
{
    if (generators.empty())
        return true;
    // Simplicial case: linearly independent generators span a pointed cone.
    const std::size_t n = generators.front().size();
    return rank(IntMatrix::from_columns(generators, n)) == generators.size();
}

std::vector<IntVector> quotient_lattice_generators()
{
    return {{5, 0, 0}, {0, 5, 0}, {0, 0, 5}, {1, 1, 1}};
}

LatticeCone quotient_cone()
{
    // Generators 5e^i are primitive in M, though not in Z^3.
    return {{{5, 0, 0}, {0, 5, 0}, {0, 0, 5}}};
}

Integer quotient_lattice_index()
{
    return lattice_index(quotient_lattice_generators(), 3);
}

std::vector<IntVector> quotient_lattice_basis()
{
    const IntMatrix h = hermite_normal_form(IntMatrix::from_rows(quotient_lattice_generators(), 3));
    std::vector<IntVector> out;
    for (std::size_t r = 0; r < h.rows(); ++r)
        out.push_back(h.row(r));
    return out;
}

CrepancyDetail crepancy_detail(const RatVector& ray, const std::vector<RatVector>& base_rays)
{
    if (base_rays.empty())
        throw std::invalid_argument("crepancy_check: no base rays");
    const std::size_t n = ray.size();
    const RatMatrix v = RatMatrix::from_columns(base_rays, n);
    if (rank(v) != base_rays.size())
        throw std::invalid_argument("crepancy_check: base rays are linearly dependent");
    CrepancyDetail d;
    const auto lambda = solve(v, ray);
    if (!lambda)
        return d;  // ray outside the span
    d.lambda = *lambda;
    d.lambda_sum = 0;
    d.nonnegative = true;
    for (const auto& x : d.lambda) {
        d.lambda_sum += x;
        if (x < 0)
            d.nonnegative = false;
    }
    const auto w = solve(v.transpose(), RatVector(base_rays.size(), Rational(1)));
    if (w) {
        d.weight = *w;
        d.pairing = 0;
        for (std::size_t i = 0; i < n; ++i)
            d.pairing += ray[i] * d.weight[i];
    }
    d.crepant = d.nonnegative && d.lambda_sum == 1;
    return d;
}

bool crepancy_check(const RatVector& ray, const std::vector<RatVector>& base_rays)
{
    return crepancy_detail(ray, base_rays).crepant;
}

std::string to_string(RayClass c)
{
    switch (c) {
    case RayClass::Vertex: return "vertex";
    case RayClass::EdgeInterior: return "edge-interior";
    case RayClass::TriangleInterior: return "interior";
    }
    return "?";
}

std::string CrepantRay::name() const
{
    return "v_" + std::to_string(ijk[0]) + std::to_string(ijk[1]) + std::to_string(ijk[2]);
}

std::vector<CrepantRay> enumerate_crepant_rays()
{
    const auto mb = quotient_lattice_basis();
    std::vector<CrepantRay> out;
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j) {
            const int k = 5 - i - j;
            CrepantRay r;
            r.ijk = {i, j, k};
            r.coords = {Rational(i, 5), Rational(j, 5), Rational(k, 5)};
            for (const auto& b : mb) {
                Rational p = 0;
                for (int c = 0; c < 3; ++c)
                    p += r.coords[c] * Rational(b[c]);
                if (denominator(p) != 1)
                    throw std::logic_error("point " + r.name() + " is not in the dual lattice");
                r.n_coords.push_back(numerator(p));
            }
            const int zeros = (i == 0) + (j == 0) + (k == 0);
            r.cls = zeros == 2 ? RayClass::Vertex : zeros == 1 ? RayClass::EdgeInterior : RayClass::TriangleInterior;
            if (zeros == 1)
                r.edge = i == 0 ? 0 : j == 0 ? 1 : 2;
            out.push_back(std::move(r));
        }
    return out;
}

namespace {

std::size_t ray_index(const std::vector<CrepantRay>& rays, int i, int j)
{
    for (std::size_t r = 0; r < rays.size(); ++r)
        if (rays[r].ijk[0] == i && rays[r].ijk[1] == j)
            return r;
    throw std::out_of_range("no lattice point");
}

using P2 = std::array<long, 2>;

long cross(const P2& o, const P2& a, const P2& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

ResolutionFan triangulate_dilated_triangle()
{
    ResolutionFan fan;
    fan.rays = enumerate_crepant_rays();
    for (std::size_t r = 0; r < fan.rays.size(); ++r)
        if (fan.rays[r].cls != RayClass::Vertex)
            fan.added_rays.push_back(r);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; i + j < 5; ++j) {
            fan.cones.push_back({{ray_index(fan.rays, i, j), ray_index(fan.rays, i + 1, j), ray_index(fan.rays, i, j + 1)},
                                 true});
            if (i + j < 4)
                fan.cones.push_back({{ray_index(fan.rays, i + 1, j), ray_index(fan.rays, i + 1, j + 1),
                                      ray_index(fan.rays, i, j + 1)},
                                     false});
        }
    return fan;
}

Integer ResolutionFan::cone_determinant(std::size_t cone) const
{
    std::vector<IntVector> cols;
    for (auto r : cones.at(cone).rays)
        cols.push_back(rays[r].n_coords);
    return determinant(IntMatrix::from_columns(cols, 3));
}

Integer ResolutionFan::doubled_area(std::size_t cone) const
{
    const auto& t = cones.at(cone).rays;
    auto p = [&](std::size_t r) { return P2{rays[r].ijk[0], rays[r].ijk[1]}; };
    const long c = cross(p(t[0]), p(t[1]), p(t[2]));
    return c < 0 ? -c : c;
}

bool ResolutionFan::interiors_overlap(std::size_t a, std::size_t b) const
{
    auto pts = [&](std::size_t cone) {
        std::array<P2, 3> out;
        for (int v = 0; v < 3; ++v) {
            const auto& r = rays[cones.at(cone).rays[v]];
            out[v] = {r.ijk[0], r.ijk[1]};
        }
        if (cross(out[0], out[1], out[2]) < 0)
            std::swap(out[1], out[2]);
        return out;
    };
    const auto ta = pts(a), tb = pts(b);
    // Separating axis: some edge line has the other triangle weakly on its outer side.
    auto separated = [](const std::array<P2, 3>& s, const std::array<P2, 3>& o) {
        for (int e = 0; e < 3; ++e) {
            const P2& p = s[e];
            const P2& q = s[(e + 1) % 3];
            if (std::all_of(o.begin(), o.end(), [&](const P2& x) { return cross(p, q, x) <= 0; }))
                return true;
        }
        return false;
    };
    return !(separated(ta, tb) || separated(tb, ta));
}

DivisorCount divisor_census()
{
    const auto rays = enumerate_crepant_rays();
    DivisorCount d;
    std::array<int, 3> per_edge{};
    for (const auto& r : rays) {
        if (r.cls == RayClass::EdgeInterior)
            ++per_edge[r.edge];
        if (r.cls == RayClass::TriangleInterior)
            ++d.per_point;
    }
    if (per_edge[0] != per_edge[1] || per_edge[1] != per_edge[2])
        throw std::logic_error("edge counts differ");
    d.per_curve = per_edge[0];
    d.curves = 10;  // hatSigma_ijk
    d.points = 10;  // singular points over P_ij
    return d;
}

HodgeVector mirror_hodge_summary(const DivisorCount& divisors, long h3)
{
    const long h2 = 1 + divisors.total();
    return {1, 0, h2, h3, h2, 0, 1};
}

long hodge_euler(const HodgeVector& h)
{
    long s = 0;
    for (int i = 0; i < 7; ++i)
        s += (i % 2 ? -1 : 1) * h[i];
    return s;
}

}  // namespace syz
