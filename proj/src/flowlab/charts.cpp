#include "syzlab/flowlab.hpp"

#include <cmath>
#include <sstream>

namespace syz {

namespace {

std::string describe(const AffinePoint& p)
{
    std::ostringstream os;
    os.precision(6);
    os << "chart " << p.chart << " x=(";
    for (int k = 0; k < 4; ++k)
        os << (k ? ", " : "") << p.x[k].real() << (p.x[k].imag() < 0 ? "" : "+") << p.x[k].imag() << "i";
    os << ")";
    return os.str();
}

void check_chart(int c)
{
    if (c < 1 || c > 5)
        throw std::out_of_range("chart index must be in 1..5");
}

}  // namespace

PoleError::PoleError(const AffinePoint& p)
    : FlowError("pole of s at " + describe(p)), where(p)
{
}

GuardViolation::GuardViolation(const AffinePoint& p, double g)
    : FlowError("sigma guard violated at " + describe(p) + ", |grad f|^2 = " + std::to_string(g)),
      where(p), grad_norm2(g)
{
}

std::array<int, 4> AffinePoint::labels() const
{
    check_chart(chart);
    std::array<int, 4> out{};
    int k = 0;
    for (int i = 1; i <= 5; ++i)
        if (i != chart)
            out[k++] = i;
    return out;
}

int AffinePoint::slot(int index) const
{
    if (index == chart)
        return -1;
    return index < chart ? index - 1 : index - 2;
}

C5 AffinePoint::homogeneous() const
{
    C5 z{};
    const auto lab = labels();
    z[chart - 1] = 1.0;
    for (int k = 0; k < 4; ++k)
        z[lab[k] - 1] = x[k];
    return z;
}

AffinePoint AffinePoint::from_homogeneous(const C5& z, int c)
{
    check_chart(c);
    const cd w = z[c - 1];
    if (w == cd(0))
        throw std::domain_error("from_homogeneous: coordinate " + std::to_string(c) + " vanishes");
    AffinePoint p;
    p.chart = c;
    const auto lab = p.labels();
    for (int k = 0; k < 4; ++k)
        p.x[k] = z[lab[k] - 1] / w;
    return p;
}

AffinePoint AffinePoint::well_conditioned(const C5& z)
{
    int best = 0;
    for (int i = 1; i < 5; ++i)
        if (std::abs(z[i]) > std::abs(z[best]))
            best = i;
    return from_homogeneous(z, best + 1);
}

AffinePoint AffinePoint::in_chart(int c) const
{
    return from_homogeneous(homogeneous(), c);
}

std::string to_string(Metric m)
{
    return m == Metric::Flat ? "flat" : "fubini-study";
}

Metric metric_from_string(const std::string& s)
{
    if (s == "flat")
        return Metric::Flat;
    if (s == "fubini-study" || s == "fs")
        return Metric::FubiniStudy;
    throw std::invalid_argument("unknown metric '" + s + "'");
}

std::string to_string(Termination t)
{
    switch (t) {
    case Termination::ReachedTarget: return "reached-target";
    case Termination::SigmaGuardHit: return "sigma-guard";
    case Termination::StepUnderflow: return "step-underflow";
    }
    return "?";
}

cd quintic_value(const C5& z, double psi)
{
    cd sum = 0, prod = 1;
    for (const auto& w : z) {
        const cd w2 = w * w;
        sum += w2 * w2 * w;
        prod *= w;
    }
    return sum - 5.0 * psi * prod;
}

double quintic_residual(const C5& z, double psi)
{
    double n2 = 0;
    for (const auto& w : z)
        n2 += std::norm(w);
    if (n2 == 0)
        throw std::domain_error("quintic_residual: zero vector");
    return std::abs(quintic_value(z, psi)) / std::pow(n2, 2.5);
}

namespace {

struct SParts {
    cd num, den;
    C4 dnum, dden;
};

SParts s_parts(const AffinePoint& p)
{
    SParts s;
    s.num = 1;
    s.den = 1;
    for (int k = 0; k < 4; ++k) {
        const cd x = p.x[k];
        const cd x2 = x * x;
        s.num *= x;
        s.den += x2 * x2 * x;
        s.dden[k] = 5.0 * x2 * x2;
    }
    for (int k = 0; k < 4; ++k) {
        cd prod = 1;
        for (int m = 0; m < 4; ++m)
            if (m != k)
                prod *= p.x[m];
        s.dnum[k] = prod;
    }
    const double scale = 1 + std::norm(p.x[0]) + std::norm(p.x[1]) + std::norm(p.x[2]) + std::norm(p.x[3]);
    if (!std::isfinite(std::abs(s.den)) || std::abs(s.den) <= 1e-14 * scale * scale * std::sqrt(scale))
        throw PoleError(p);
    return s;
}

}  // namespace

cd eval_s(const AffinePoint& p)
{
    const auto s = s_parts(p);
    return s.num / s.den;
}

C4 grad_s(const AffinePoint& p)
{
    const auto s = s_parts(p);
    C4 a;
    for (int k = 0; k < 4; ++k)
        a[k] = s.dnum[k] / s.den - s.num * s.dden[k] / (s.den * s.den);
    return a;
}

Eigen::Matrix4cd metric_matrix(const AffinePoint& p, Metric m)
{
    if (m == Metric::Flat)
        return Eigen::Matrix4cd::Identity();
    double r2 = 0;
    for (const auto& x : p.x)
        r2 += std::norm(x);
    const double w = 1 + r2;
    Eigen::Matrix4cd h;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            h(j, k) = ((j == k ? w : 0.0) - std::conj(p.x[j]) * p.x[k]) / (w * w);
    return h;
}

GradientInfo gradient_f(const AffinePoint& p, Metric m)
{
    const C4 a = grad_s(p);
    GradientInfo g{};
    Eigen::Vector4cd av;
    for (int k = 0; k < 4; ++k)
        av[k] = a[k];
    Eigen::Vector4cd hinv_a = m == Metric::Flat ? av : Eigen::Vector4cd(metric_matrix(p, m).ldlt().solve(av));
    cd norm = 0;
    for (int k = 0; k < 4; ++k) {
        g.gradient[k] = std::conj(hinv_a[k]);
        norm += a[k] * g.gradient[k];
    }
    g.norm2 = norm.real();
    for (int k = 0; k < 4; ++k)
        g.v[k] = g.norm2 > 0 ? g.gradient[k] / g.norm2 : cd(NAN, NAN);
    return g;
}

C4 grad_V(const AffinePoint& p, const FlowConfig& cfg)
{
    GradientInfo g;
    try {
        g = gradient_f(p, cfg.metric);
    } catch (const PoleError&) {
        // s = 0/0 where Sigma meets the polar divisor.
        if (p.x[0] * p.x[1] * p.x[2] * p.x[3] == cd(0))
            throw GuardViolation(p, 0.0);
        throw;
    }
    if (!(g.norm2 > cfg.sigma_guard))
        throw GuardViolation(p, g.norm2);
    return g.v;
}

std::array<double, 8> real_gradient(const AffinePoint& p)
{
    // For f = Re s: df/du = Re a, df/dv = -Im a with x = u + i v.
    const C4 a = grad_s(p);
    std::array<double, 8> out{};
    for (int k = 0; k < 4; ++k) {
        out[2 * k] = a[k].real();
        out[2 * k + 1] = -a[k].imag();
    }
    return out;
}

AffinePoint newton_project(const AffinePoint& p, double psi, int iterations)
{
    AffinePoint q = p;
    for (int it = 0; it < iterations; ++it) {
        cd prod = 1, val = 1;
        for (const auto& x : q.x) {
            prod *= x;
            val += std::pow(x, 5);
        }
        val -= 5.0 * psi * prod;
        C4 grad;
        double g2 = 0;
        for (int k = 0; k < 4; ++k) {
            cd others = 1;
            for (int m = 0; m < 4; ++m)
                if (m != k)
                    others *= q.x[m];
            grad[k] = 5.0 * std::pow(q.x[k], 4) - 5.0 * psi * others;
            g2 += std::norm(grad[k]);
        }
        if (g2 == 0 || std::abs(val) < 1e-17)
            break;
        for (int k = 0; k < 4; ++k)
            q.x[k] -= val * std::conj(grad[k]) / g2;
    }
    return q;
}

AffinePoint random_xinf_point(std::mt19937_64& rng, double min_grad_norm2)
{
    std::uniform_int_distribution<int> face(1, 5);
    std::uniform_real_distribution<double> modulus(0.5, 1.5), phase(0.0, 2 * M_PI);
    for (;;) {
        C5 z;
        const int zero = face(rng);
        for (int i = 0; i < 5; ++i)
            z[i] = std::polar(modulus(rng), phase(rng));
        z[zero - 1] = 0;
        const AffinePoint p = AffinePoint::well_conditioned(z);
        cd den = 1;
        for (const auto& x : p.x)
            den += std::pow(x, 5);
        if (std::abs(den) < 0.1)
            continue;
        try {
            if (gradient_f(p, Metric::Flat).norm2 >= min_grad_norm2)
                return p;
        } catch (const PoleError&) {
        }
    }
}

}  // namespace syz
