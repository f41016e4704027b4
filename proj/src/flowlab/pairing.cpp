#include "syzlab/flowlab.hpp"

#include <cmath>
#include <set>

namespace syz {

namespace {

void check_index(int i, const char* what)
{
    if (i < 1 || i > 5)
        throw std::out_of_range(std::string("loop_pairing: index ") + what + " outside 1..5");
}

}  // namespace

PairingResult loop_pairing(int i, int j, int k, int l, int m, const PairingConfig& cfg)
{
    for (auto [v, n] : {std::pair{i, "i"}, {j, "j"}, {k, "k"}, {l, "l"}, {m, "m"}})
        check_index(v, n);
    if (std::set<int>{i, j, k}.size() != 3)
        throw std::invalid_argument("loop_pairing: i, j, k must be distinct");
    if (cfg.nodes < 8)
        throw std::invalid_argument("loop_pairing: too few quadrature nodes");

    // Chart z_j = 1; z_k runs around a circle, the other two fixed; z_i is the small root of p_psi.
    std::array<int, 2> fixed{};
    int f = 0;
    for (int a = 1; a <= 5; ++a)
        if (a != i && a != j && a != k)
            fixed[f++] = a;
    const double c = cfg.modulus;
    const double lam = 5 * cfg.psi;

    C5 z{};
    cd zi = 0;
    bool first = true;
    cd sum = 0;
    for (int n = 0; n < cfg.nodes; ++n) {
        const double theta = 2 * M_PI * n / cfg.nodes;
        const cd zk = std::polar(c, theta);
        const cd P = zk * c * c;
        const cd Q = 1.0 + std::pow(zk, 5) + 2 * std::pow(c, 5);
        if (first) {
            zi = Q / (lam * P);
            first = false;
        }
        for (int it = 0; it < 60; ++it) {
            const cd F = std::pow(zi, 5) - lam * P * zi + Q;
            const cd dF = 5.0 * std::pow(zi, 4) - lam * P;
            const cd step = F / dF;
            zi -= step;
            if (std::abs(step) < 1e-16 * (1 + std::abs(zi)))
                break;
        }
        const cd Fz = 5.0 * std::pow(zi, 4) - lam * P;
        const cd Ft = -lam * zi * cd(0, 1) * P + 5.0 * cd(0, 1) * std::pow(zk, 5);
        const cd dzi = -Ft / Fz;
        const cd dzk = cd(0, 1) * zk;

        z[j - 1] = 1;
        z[k - 1] = zk;
        z[i - 1] = zi;
        z[fixed[0] - 1] = c;
        z[fixed[1] - 1] = c;
        C5 dz{};
        dz[k - 1] = dzk;
        dz[i - 1] = dzi;

        auto dlog = [&](int a) {
            if (std::abs(z[a - 1]) < 1e-12)
                throw std::domain_error("loop_pairing: loop passes too close to a pole of the form");
            return dz[a - 1] / z[a - 1];
        };
        sum += dlog(l) - dlog(m);
    }
    PairingResult r;
    r.integral = sum * (2 * M_PI / cfg.nodes) / cd(0, 2 * M_PI);
    r.value = std::lround(r.integral.real());
    r.residue = std::abs(r.integral - cd(static_cast<double>(r.value), 0));
    return r;
}

PairingMatrix pairing_matrix(int i, int j, const PairingConfig& cfg)
{
    PairingMatrix pm;
    int n = 0;
    for (int a = 1; a <= 5; ++a)
        if (a != i && a != j)
            pm.cycles[n++] = a;
    for (int a = 0; a < 3; ++a)
        pm.forms[a] = pm.cycles[a];
    pm.forms[3] = i;
    pm.values = IntMatrix(3, 4);
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 4; ++col) {
            const auto res = loop_pairing(i, j, pm.cycles[r], pm.forms[col], j, cfg);
            pm.values(r, col) = res.value;
            pm.max_residue = std::max(pm.max_residue, res.residue);
        }
    return pm;
}

}  // namespace syz
