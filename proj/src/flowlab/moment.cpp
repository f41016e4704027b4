#include "syzlab/flowlab.hpp"

#include <cmath>

namespace syz {

std::string to_string(MomentKind k)
{
    switch (k) {
    case MomentKind::FubiniStudy: return "fubini-study";
    case MomentKind::Log: return "log";
    case MomentKind::Weighted: return "weighted";
    }
    return "?";
}

MomentKind moment_kind_from_string(const std::string& s)
{
    if (s == "fubini-study" || s == "fs")
        return MomentKind::FubiniStudy;
    if (s == "log")
        return MomentKind::Log;
    if (s == "weighted")
        return MomentKind::Weighted;
    throw std::invalid_argument("unknown moment map '" + s + "'");
}

std::vector<double> moment_maps(const AffinePoint& p, MomentKind kind, const std::array<double, 4>& weights)
{
    std::vector<double> out(4);
    switch (kind) {
    case MomentKind::Log:
        for (int k = 0; k < 4; ++k) {
            const double r2 = std::norm(p.x[k]);
            if (!(r2 > 0))
                throw std::domain_error("moment_maps: log map needs nonzero coordinates");
            out[k] = std::log(r2);
        }
        return out;
    case MomentKind::FubiniStudy:
    case MomentKind::Weighted: {
        const bool fs = kind == MomentKind::FubiniStudy;
        double denom = 1;
        for (int k = 0; k < 4; ++k) {
            const double w = fs ? 1.0 : weights[k];
            if (!(w > 0))
                throw std::domain_error("moment_maps: weights must be positive");
            denom += w * std::norm(p.x[k]);
        }
        for (int k = 0; k < 4; ++k)
            out[k] = (fs ? 1.0 : weights[k]) * std::norm(p.x[k]) / denom;
        return out;
    }
    }
    return out;
}

double flat_cy_volume_ratio(const C4& x)
{
    // g_{j kbar} = (delta_jk - 1/5) / (x_j conj(x_k)) in the coordinates x.
    Eigen::Matrix4cd g;
    double prod = 1;
    for (int j = 0; j < 4; ++j) {
        if (x[j] == cd(0))
            throw std::domain_error("flat_cy_volume_ratio: coordinate on a toric divisor");
        prod *= std::norm(x[j]);
        for (int k = 0; k < 4; ++k)
            g(j, k) = ((j == k ? 1.0 : 0.0) - 0.2) / (x[j] * std::conj(x[k]));
    }
    return g.determinant().real() * prod;
}

}  // namespace syz
