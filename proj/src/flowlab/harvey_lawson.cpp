#include "syzlab/flowlab.hpp"

#include <cmath>

namespace syz {

R3 hl_map(const Z3& z)
{
    const double n1 = std::norm(z[0]);
    return {(z[0] * z[1] * z[2]).imag(), n1 - std::norm(z[1]), n1 - std::norm(z[2])};
}

Eigen::Matrix<double, 3, 6> hl_jacobian(const Z3& z)
{
    Eigen::Matrix<double, 3, 6> j = Eigen::Matrix<double, 3, 6>::Zero();
    for (int k = 0; k < 3; ++k) {
        const cd others = z[(k + 1) % 3] * z[(k + 2) % 3];
        j(0, 2 * k) = others.imag();
        j(0, 2 * k + 1) = others.real();
    }
    for (int r = 1; r < 3; ++r) {
        j(r, 0) = 2 * z[0].real();
        j(r, 1) = 2 * z[0].imag();
        j(r, 2 * r) = -2 * z[r].real();
        j(r, 2 * r + 1) = -2 * z[r].imag();
    }
    return j;
}

int hl_rank(const Z3& z, double rel_tol)
{
    double scale = 1;
    for (const auto& w : z)
        scale = std::max(scale, std::norm(w));
    const Eigen::JacobiSVD<Eigen::Matrix<double, 3, 6>> svd(hl_jacobian(z));
    int r = 0;
    for (int k = 0; k < 3; ++k)
        if (svd.singularValues()[k] > rel_tol * scale)
            ++r;
    return r;
}

std::string to_string(HLClass c)
{
    switch (c) {
    case HLClass::Smooth: return "smooth";
    case HLClass::SingularOrigin: return "singular-origin";
    case HLClass::SingularAxis: return "singular-axis";
    }
    return "?";
}

namespace {

// Dimension of M_c meeting the three coordinate axes, -1 when disjoint.
int axis_meeting_dimension(const R3& c, double tol)
{
    if (std::abs(c[0]) > tol)
        return -1;
    int dim = -1;
    auto meet = [&](double r2) { dim = std::max(dim, r2 > tol ? 1 : 0); };
    if (std::abs(c[1] - c[2]) <= tol && c[1] >= -tol)  // z_1 axis: c = (0, |z1|^2, |z1|^2)
        meet(c[1]);
    if (c[1] <= tol && std::abs(c[2]) <= tol)          // z_2 axis: c = (0, -|z2|^2, 0)
        meet(-c[1]);
    if (c[2] <= tol && std::abs(c[1]) <= tol)          // z_3 axis
        meet(-c[2]);
    return dim;
}

}  // namespace

HLClass classify_hl(const R3& c, double tol)
{
    if (std::abs(c[0]) <= tol && std::abs(c[1]) <= tol && std::abs(c[2]) <= tol)
        return HLClass::SingularOrigin;
    return axis_meeting_dimension(c, tol) >= 0 ? HLClass::SingularAxis : HLClass::Smooth;
}

HLProbe hl_fiber_probe(const R3& c, int n_samples, std::uint64_t seed)
{
    HLProbe out;
    out.cls = classify_hl(c);
    out.singular_set_dimension = axis_meeting_dimension(c, 1e-12);
    out.samples = n_samples;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0), phase(0.0, 2 * M_PI);
    const double t_min = std::max({0.0, c[1], c[2]});
    for (int n = 0; n < n_samples; ++n) {
        // Seed on the T^2 orbit: |z1|^2 = t, then the moduli and the phase of z1 z2 z3 are forced.
        double t = 0, rho = 0;
        for (int attempt = 0; attempt < 100; ++attempt) {
            t = t_min + 0.05 + 2 * unit(rng);
            rho = std::sqrt(t * (t - c[1]) * (t - c[2]));
            if (rho > std::abs(c[0]) + 1e-3)
                break;
        }
        const double base = std::asin(c[0] / rho);
        const double prod_phase = unit(rng) < 0.5 ? base : M_PI - base;
        const double a1 = phase(rng), a2 = phase(rng);
        Z3 z{std::polar(std::sqrt(t), a1), std::polar(std::sqrt(t - c[1]), a2),
             std::polar(std::sqrt(t - c[2]), prod_phase - a1 - a2)};

        // Gauss-Newton refinement of the three constraints (minimum-norm steps).
        double resid = 0;
        for (int it = 0; it < 20; ++it) {
            const R3 v = hl_map(z);
            const Eigen::Vector3d r(v[0] - c[0], v[1] - c[1], v[2] - c[2]);
            resid = r.norm();
            if (resid < 1e-15)
                break;
            const Eigen::Matrix<double, 6, 1> d =
                hl_jacobian(z).completeOrthogonalDecomposition().solve(-r);
            for (int k = 0; k < 3; ++k)
                z[k] += cd(d[2 * k], d[2 * k + 1]);
        }
        out.max_constraint_residual = std::max(out.max_constraint_residual, resid);
        if (!(resid < 1e-10) || hl_rank(z) < 3) {
            ++out.flagged;
            continue;
        }
        ++out.regular_samples;

        const Eigen::JacobiSVD<Eigen::Matrix<double, 3, 6>> svd(hl_jacobian(z), Eigen::ComputeFullV);
        std::array<Eigen::Vector3cd, 3> u;
        for (int a = 0; a < 3; ++a)
            for (int k = 0; k < 3; ++k)
                u[a][k] = cd(svd.matrixV()(2 * k, 3 + a), svd.matrixV()(2 * k + 1, 3 + a));
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                out.omega_defect = std::max(out.omega_defect, std::abs(u[a].dot(u[b]).imag()));
        Eigen::Matrix3cd frame;
        for (int a = 0; a < 3; ++a)
            frame.col(a) = u[a];
        // Calibration phase 0: Im(dz1 dz2 dz3) vanishes on the fibers.
        out.phase_defect = std::max(out.phase_defect, std::abs(frame.determinant().imag()));
    }
    out.slag_defect = std::max(out.omega_defect, out.phase_defect);
    return out;
}

AxisRankSurvey hl_rank_survey(int samples, std::uint64_t seed)
{
    AxisRankSurvey s;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> modulus(0.1, 2.0), phase(0.0, 2 * M_PI);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int n = 0; n < samples; ++n) {
        Z3 z{};
        z[pick(rng)] = std::polar(modulus(rng), phase(rng));
        const int r = hl_rank(z);
        ++s.axis_samples;
        s.max_axis_rank = std::max(s.max_axis_rank, r);
        if (r < 3)
            ++s.axis_rank_drops;
    }
    for (int n = 0; n < samples; ++n) {
        Z3 z;
        for (auto& w : z)
            w = std::polar(modulus(rng), phase(rng));
        if (n % 2)
            z[pick(rng)] = 0;  // coordinate planes off the axes stay regular
        ++s.off_axis_samples;
        if (hl_rank(z) == 3)
            ++s.off_axis_full_rank;
    }
    return s;
}

}  // namespace syz
