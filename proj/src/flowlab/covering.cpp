#include "syzlab/flowlab.hpp"

#include <cmath>

namespace syz {

namespace {

constexpr double two_pi = 2 * M_PI;

double wrap(double t)
{
    t = std::fmod(t, two_pi);
    return t < 0 ? t + two_pi : t;
}

struct Polished {
    double t1, t2, residual;
};

Polished polish(double a, double b, double t1, double t2, int max_iter)
{
    auto G = [&](double x, double y) { return a * std::polar(1.0, 5 * x) + b * std::polar(1.0, 5 * y) + 1.0; };
    cd g = G(t1, t2);
    double mu = 1e-6;
    for (int it = 0; it < max_iter && std::abs(g) > 1e-15; ++it) {
        const cd j1 = cd(0, 5 * a) * std::polar(1.0, 5 * t1);
        const cd j2 = cd(0, 5 * b) * std::polar(1.0, 5 * t2);
        Eigen::Matrix2d J;
        J << j1.real(), j2.real(), j1.imag(), j2.imag();
        const Eigen::Vector2d r(g.real(), g.imag());
        const Eigen::Matrix2d A = J.transpose() * J + mu * Eigen::Matrix2d::Identity();
        const Eigen::Vector2d d = -A.ldlt().solve(J.transpose() * r);
        const cd gn = G(t1 + d[0], t2 + d[1]);
        if (std::abs(gn) < std::abs(g)) {
            t1 += d[0];
            t2 += d[1];
            g = gn;
            mu = std::max(mu / 10, 1e-14);
        } else {
            mu *= 10;
            if (mu > 1e6)
                break;
        }
    }
    return {wrap(t1), wrap(t2), std::abs(g)};
}

double torus_distance(const std::array<double, 2>& p, const std::array<double, 2>& q)
{
    const cd d1 = std::polar(1.0, p[0]) - std::polar(1.0, q[0]);
    const cd d2 = std::polar(1.0, p[1]) - std::polar(1.0, q[1]);
    return std::sqrt(std::norm(d1) + std::norm(d2));
}

}  // namespace

CoveringResult covering_count(double r1, double r2, const CoveringConfig& cfg)
{
    CoveringResult res;
    res.stratum = classify_fattened(r1, r2).tag;
    if (res.stratum == Stratum::Outside) {
        res.warning = "point (" + std::to_string(r1) + ", " + std::to_string(r2) + ") lies outside the fattened face";
        return res;
    }
    const double a = std::pow(r1, 5), b = std::pow(r2, 5);
    const double h = two_pi / cfg.grid;

    if (res.stratum == Stratum::Vertex0) {
        // One modulus vanishes: count solutions of c e^{5 i theta} = -1 in the surviving angle.
        const double c = std::max(a, b);
        std::vector<double> roots;
        for (int n = 0; n < cfg.grid; ++n) {
            double t = (n + 0.5) * h;
            if (std::abs(c * std::polar(1.0, 5 * t) + 1.0) > 5 * c * h / 2)
                continue;
            ++res.candidate_cells;
            cd g;
            for (int it = 0; it < cfg.max_iterations; ++it) {
                g = c * std::polar(1.0, 5 * t) + 1.0;
                const cd dg = cd(0, 5 * c) * std::polar(1.0, 5 * t);
                const double step = (std::conj(dg) * g).real() / std::norm(dg);
                t -= step;
                if (std::abs(step) < 1e-15)
                    break;
            }
            g = c * std::polar(1.0, 5 * t) + 1.0;
            if (std::abs(g) > std::max(cfg.residual_tol, std::abs(c - 1) * 2))
                continue;
            t = wrap(t);
            bool dup = false;
            for (double s : roots)
                if (std::abs(std::polar(1.0, s) - std::polar(1.0, t)) < cfg.tol)
                    dup = true;
            if (!dup)
                roots.push_back(t);
        }
        for (double t : roots)
            res.roots.push_back(a >= b ? std::array<double, 2>{t, 0.0} : std::array<double, 2>{0.0, t});
        res.count = static_cast<int>(res.roots.size());
        return res;
    }

    const double bound = 5 * (a + b) * h / 2;
    for (int n1 = 0; n1 < cfg.grid; ++n1) {
        const cd e1 = a * std::polar(1.0, 5 * (n1 + 0.5) * h) + 1.0;
        for (int n2 = 0; n2 < cfg.grid; ++n2) {
            const double t2 = (n2 + 0.5) * h;
            if (std::abs(e1 + b * std::polar(1.0, 5 * t2)) > bound)
                continue;
            ++res.candidate_cells;
            const Polished p = polish(a, b, (n1 + 0.5) * h, t2, cfg.max_iterations);
            if (p.residual > cfg.residual_tol)
                continue;
            const std::array<double, 2> root{p.t1, p.t2};
            bool dup = false;
            for (const auto& q : res.roots)
                if (torus_distance(root, q) < cfg.tol) {
                    dup = true;
                    break;
                }
            if (!dup)
                res.roots.push_back(root);
        }
    }
    res.count = static_cast<int>(res.roots.size());
    return res;
}

}  // namespace syz
