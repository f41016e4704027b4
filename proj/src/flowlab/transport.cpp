#include "syzlab/flowlab.hpp"

#include <cmath>

namespace syz {

double symplectic_defect(const AffinePoint& p, const C4& u, const C4& v, Metric m)
{
    const Eigen::Matrix4cd h = metric_matrix(p, m);
    Eigen::Vector4cd uu, vv;
    for (int k = 0; k < 4; ++k) {
        uu[k] = u[k];
        vv[k] = v[k];
    }
    const cd huv = uu.transpose() * h * vv.conjugate();
    const double nu = std::sqrt((uu.transpose() * h * uu.conjugate()).value().real());
    const double nv = std::sqrt((vv.transpose() * h * vv.conjugate()).value().real());
    if (nu == 0 || nv == 0)
        return 0;
    return std::abs(huv.imag()) / (nu * nv);
}

namespace {

AffinePoint face_point(const TransportConfig& cfg, const std::array<double, 3>& angles)
{
    if (cfg.face == cfg.chart)
        throw std::invalid_argument("transport_fiber: face coordinate cannot be the chart coordinate");
    C5 z{};
    z[cfg.chart - 1] = 1.0;
    int k = 0;
    for (int i = 1; i <= 5; ++i) {
        if (i == cfg.chart || i == cfg.face)
            continue;
        z[i - 1] = std::polar(cfg.moduli[k], angles[k]);
        ++k;
    }
    return AffinePoint::from_homogeneous(z, cfg.chart);
}

struct Endpoint {
    AffinePoint p;
    bool ok;
};

Endpoint transport(const TransportConfig& cfg, const std::array<double, 3>& angles, double t)
{
    try {
        const auto r = flow(face_point(cfg, angles), t, cfg.flow);
        return {r.end, r.diagnostics.reason == Termination::ReachedTarget};
    } catch (const FlowError&) {
        return {face_point(cfg, angles), false};
    }
}

}  // namespace

TransportResult transport_fiber(const TransportConfig& cfg)
{
    if (cfg.psi == 0)
        throw std::invalid_argument("transport_fiber: psi must be nonzero");
    const double t = 1.0 / (5 * cfg.psi);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> phase(0.0, 2 * M_PI);
    std::vector<std::array<double, 3>> angles(cfg.samples);
    for (auto& a : angles)
        a = {phase(rng), phase(rng), phase(rng)};

    TransportResult out;
    out.samples = parallel_map(angles.size(), [&](std::size_t n) {
        TransportSample s;
        s.angles = angles[n];
        const Endpoint centre = transport(cfg, s.angles, t);
        s.point = centre.p;
        if (!centre.ok) {
            s.flagged = true;
            return s;
        }
        std::array<C4, 4> frame;
        for (int a = 0; a < 3; ++a) {
            auto plus = s.angles, minus = s.angles;
            plus[a] += cfg.fd_step;
            minus[a] -= cfg.fd_step;
            const Endpoint ep = transport(cfg, plus, t), em = transport(cfg, minus, t);
            if (!ep.ok || !em.ok) {
                s.flagged = true;
                return s;
            }
            for (int k = 0; k < 4; ++k)
                frame[a][k] = (ep.p.x[k] - em.p.x[k]) / (2 * cfg.fd_step);
        }
        try {
            frame[3] = grad_V(s.point, cfg.flow);
            s.im_s = std::abs(eval_s(s.point).imag());
        } catch (const FlowError&) {
            s.flagged = true;
            return s;
        }
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                s.defect = std::max(s.defect, symplectic_defect(s.point, frame[a], frame[b], cfg.flow.metric));
        return s;
    });
    for (std::size_t n = 0; n < out.samples.size(); ++n) {
        const auto& s = out.samples[n];
        if (s.flagged) {
            out.flagged.push_back(n);
            continue;
        }
        out.max_defect = std::max(out.max_defect, s.defect);
        out.max_im_s = std::max(out.max_im_s, s.im_s);
        out.max_quintic_residual = std::max(out.max_quintic_residual, quintic_residual(s.point.homogeneous(), cfg.psi));
    }
    return out;
}

WindingResult transported_circle_winding(const WindingConfig& cfg)
{
    const int c = cfg.chart, f1 = cfg.face[0], f2 = cfg.face[1];
    if (c == f1 || c == f2 || f1 == f2)
        throw std::invalid_argument("transported_circle_winding: chart and face indices must be distinct");
    std::array<int, 2> rest{};
    int k = 0;
    for (int i = 1; i <= 5; ++i)
        if (i != c && i != f1 && i != f2)
            rest[k++] = i;

    const double t_end = 1.0 / (5 * cfg.psi);
    auto start = [&](double phi) {
        // Fix the phase of the first free coordinate so that s is real and positive.
        C5 z{};
        z[c - 1] = 1.0;
        z[f1 - 1] = std::polar(cfg.epsilon, phi);
        z[f2 - 1] = std::polar(cfg.epsilon, -phi);
        z[rest[1] - 1] = cfg.moduli[1];
        double alpha = 0;
        for (int it = 0; it < 50; ++it) {
            z[rest[0] - 1] = std::polar(cfg.moduli[0], alpha);
            const AffinePoint p = AffinePoint::from_homogeneous(z, c);
            alpha -= std::arg(eval_s(p));
        }
        z[rest[0] - 1] = std::polar(cfg.moduli[0], alpha);
        return AffinePoint::from_homogeneous(z, c);
    };

    WindingResult w;
    std::vector<double> args(cfg.samples);
    const auto ends = parallel_map(static_cast<std::size_t>(cfg.samples), [&](std::size_t n) {
        const AffinePoint p0 = start(2 * M_PI * n / cfg.samples);
        const double s0 = eval_s(p0).real();
        return flow(p0, t_end - s0, cfg.flow);
    });
    for (int n = 0; n < cfg.samples; ++n) {
        const auto& r = ends[n];
        if (r.diagnostics.reason != Termination::ReachedTarget)
            w.all_reached = false;
        w.max_im_s = std::max(w.max_im_s, std::abs(eval_s(r.end).imag()));
        args[n] = std::arg(r.end.x[r.end.slot(f1)]);
    }
    for (int n = 0; n < cfg.samples; ++n) {
        double d = args[(n + 1) % cfg.samples] - args[n];
        d = std::remainder(d, 2 * M_PI);
        w.angle += d;
    }
    w.winding = w.angle / (2 * M_PI);
    return w;
}

}  // namespace syz
