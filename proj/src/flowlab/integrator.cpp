#include "syzlab/flowlab.hpp"

#include <cmath>
#include <initializer_list>
#include <utility>

namespace syz {

namespace {

using State = std::array<double, 8>;

State pack(const AffinePoint& p)
{
    State y{};
    for (int k = 0; k < 4; ++k) {
        y[2 * k] = p.x[k].real();
        y[2 * k + 1] = p.x[k].imag();
    }
    return y;
}

AffinePoint unpack(int chart, const State& y)
{
    AffinePoint p;
    p.chart = chart;
    for (int k = 0; k < 4; ++k)
        p.x[k] = cd(y[2 * k], y[2 * k + 1]);
    return p;
}

State field(int chart, const State& y, const FlowConfig& cfg)
{
    const C4 v = grad_V(unpack(chart, y), cfg);
    State out{};
    for (int k = 0; k < 4; ++k) {
        out[2 * k] = v[k].real();
        out[2 * k + 1] = v[k].imag();
    }
    return out;
}

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Step {
    State y;
    double err;
};

Step dp_step(int chart, const State& y, double h, const FlowConfig& cfg)
{
    auto comb = [&](std::initializer_list<std::pair<double, const State*>> terms) {
        State out = y;
        for (const auto& [w, k] : terms)
            for (int i = 0; i < 8; ++i)
                out[i] += h * w * (*k)[i];
        return out;
    };
    const State k1 = field(chart, y, cfg);
    const State k2 = field(chart, comb({{a21, &k1}}), cfg);
    const State k3 = field(chart, comb({{a31, &k1}, {a32, &k2}}), cfg);
    const State k4 = field(chart, comb({{a41, &k1}, {a42, &k2}, {a43, &k3}}), cfg);
    const State k5 = field(chart, comb({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}), cfg);
    const State k6 = field(chart, comb({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}), cfg);
    Step s;
    s.y = comb({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = field(chart, s.y, cfg);
    s.err = 0;
    for (int i = 0; i < 8; ++i) {
        const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double sc = cfg.tol + cfg.tol * std::max(std::abs(y[i]), std::abs(s.y[i]));
        s.err = std::max(s.err, std::abs(e) / sc);
    }
    return s;
}

}  // namespace

FlowResult flow(const AffinePoint& p0, double t_target, const FlowConfig& cfg, bool keep_trajectory)
{
    const cd s0 = eval_s(p0);
    grad_V(p0, cfg);  // refuses a start inside the guard zone

    FlowResult r;
    r.end = p0;
    if (keep_trajectory)
        r.trajectory.push_back(p0);
    if (t_target == 0)
        return r;

    const double dir = t_target > 0 ? 1 : -1;
    const double total = std::abs(t_target);
    State y = pack(p0);
    double t = 0;
    double h = cfg.fixed_step > 0 ? cfg.fixed_step : std::min(cfg.initial_step, cfg.max_step);
    auto& d = r.diagnostics;

    while (t < total) {
        if (d.accepted_steps + d.rejected_steps >= cfg.max_steps) {
            d.reason = Termination::StepUnderflow;
            break;
        }
        const bool last = t + h >= total;
        const double step = last ? total - t : h;
        Step s;
        try {
            s = dp_step(p0.chart, y, dir * step, cfg);
        } catch (const GuardViolation&) {
            if (cfg.fixed_step > 0 || step <= cfg.min_step) {
                d.reason = Termination::SigmaGuardHit;
                break;
            }
            h = step / 4;
            ++d.rejected_steps;
            continue;
        } catch (const PoleError&) {
            d.reason = Termination::SigmaGuardHit;
            break;
        }
        if (cfg.fixed_step <= 0 && !(s.err <= 1.0)) {
            ++d.rejected_steps;
            const double fac = std::isfinite(s.err) ? std::max(0.2, 0.9 * std::pow(s.err, -0.2)) : 0.2;
            h = step * fac;
            if (h < cfg.min_step) {
                d.reason = Termination::StepUnderflow;
                break;
            }
            continue;
        }
        y = s.y;
        t = last ? total : t + step;
        ++d.accepted_steps;

        const AffinePoint p = unpack(p0.chart, y);
        try {
            const cd sv = eval_s(p);
            d.max_im_s_drift = std::max(d.max_im_s_drift, std::abs(sv.imag() - s0.imag()));
            d.max_f_drift = std::max(d.max_f_drift, std::abs(sv.real() - s0.real() - dir * t));
            const auto g = gradient_f(p, cfg.metric);
            cd rate = 0;
            const C4 a = grad_s(p);
            for (int k = 0; k < 4; ++k)
                rate += a[k] * g.v[k];
            d.max_normalization_error = std::max(d.max_normalization_error, std::abs(rate - 1.0));
        } catch (const PoleError&) {
            d.reason = Termination::SigmaGuardHit;
            r.end = p;
            d.t_reached = dir * t;
            return r;
        }
        if (keep_trajectory)
            r.trajectory.push_back(p);
        if (cfg.fixed_step <= 0) {
            const double fac = s.err > 0 ? std::min(5.0, 0.9 * std::pow(s.err, -0.2)) : 5.0;
            h = std::min(cfg.max_step, step * fac);
        }
    }
    r.end = unpack(p0.chart, y);
    d.t_reached = dir * t;
    return r;
}

}  // namespace syz
