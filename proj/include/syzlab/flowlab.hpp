#pragma once

#include "syzlab/basecomplex.hpp"
#include "syzlab/ratkernel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace syz {

using cd = std::complex<double>;
using C4 = std::array<cd, 4>;
using C5 = std::array<cd, 5>;

// Point of P^4 in the affine chart z_chart = 1; x lists the other coordinates in ascending index order.
struct AffinePoint {
    int chart = 5;
    C4 x{};

    C5 homogeneous() const;
    std::array<int, 4> labels() const;  // homogeneous index of each x entry
    int slot(int index) const;          // position of homogeneous index in x, -1 for the chart index
    AffinePoint in_chart(int c) const;

    static AffinePoint from_homogeneous(const C5& z, int chart);
    // Chart in which the largest homogeneous coordinate is 1.
    static AffinePoint well_conditioned(const C5& z);
};

class FlowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PoleError : public FlowError {
public:
    explicit PoleError(const AffinePoint& p);
    AffinePoint where;
};

class GuardViolation : public FlowError {
public:
    GuardViolation(const AffinePoint& p, double grad_norm2);
    AffinePoint where;
    double grad_norm2;
};

enum class Metric { Flat, FubiniStudy };
std::string to_string(Metric m);
Metric metric_from_string(const std::string& s);

struct FlowConfig {
    double initial_step = 1e-3;
    double min_step = 1e-14;
    double max_step = 2e-3;
    double tol = 1e-10;
    double sigma_guard = 1e-8;
    Metric metric = Metric::Flat;
    double fixed_step = 0;  // > 0 disables step control
    int max_steps = 200000;
};

double quintic_residual(const C5& z, double psi);  // |p_psi(z)| / |z|^5
cd quintic_value(const C5& z, double psi);

// s = prod z_k / sum z_k^5.
cd eval_s(const AffinePoint& p);
// Holomorphic partial derivatives of s in the chart coordinates.
C4 grad_s(const AffinePoint& p);

// Hermitian matrix g_{j kbar} of the chosen metric in chart coordinates.
Eigen::Matrix4cd metric_matrix(const AffinePoint& p, Metric m);

struct GradientInfo {
    C4 gradient;   // gradient of f = Re s as a (1,0) vector
    double norm2;  // |grad f|^2
    C4 v;          // gradient / norm2
};

GradientInfo gradient_f(const AffinePoint& p, Metric m);
// Normalized field; throws GuardViolation below cfg.sigma_guard.
C4 grad_V(const AffinePoint& p, const FlowConfig& cfg);
// Flat-metric gradient of Re s in real coordinates (Re x_1, Im x_1, ..., Re x_4, Im x_4).
std::array<double, 8> real_gradient(const AffinePoint& p);

enum class Termination { ReachedTarget, SigmaGuardHit, StepUnderflow };
std::string to_string(Termination t);

struct FlowDiagnostics {
    double max_im_s_drift = 0;
    double max_f_drift = 0;
    double max_normalization_error = 0;
    Termination reason = Termination::ReachedTarget;
    double t_reached = 0;
    int accepted_steps = 0;
    int rejected_steps = 0;
};

struct FlowResult {
    AffinePoint end;
    FlowDiagnostics diagnostics;
    std::vector<AffinePoint> trajectory;
};

// Dormand-Prince 5(4) on the 8 real chart coordinates.
FlowResult flow(const AffinePoint& p0, double t_target, const FlowConfig& cfg, bool keep_trajectory = false);

// Newton projection x <- x - p conj(grad p) / |grad p|^2 onto X_psi in the point's chart.
AffinePoint newton_project(const AffinePoint& p, double psi, int iterations = 20);

// Random point of the smooth part of X_infinity: exactly one homogeneous coordinate zero.
AffinePoint random_xinf_point(std::mt19937_64& rng, double min_grad_norm2 = 1e-3);

struct TransportConfig {
    int face = 5;
    int chart = 4;
    std::array<double, 3> moduli{0.6, 0.7, 0.8};
    double psi = 10;
    int samples = 512;
    std::uint64_t seed = 1;
    double fd_step = 1e-4;
    FlowConfig flow = [] {
        FlowConfig c;
        c.metric = Metric::FubiniStudy;
        return c;
    }();
};

struct TransportSample {
    std::array<double, 3> angles;
    AffinePoint point;
    double im_s = 0;
    double defect = 0;
    bool flagged = false;
};

struct TransportResult {
    std::vector<TransportSample> samples;
    std::vector<std::size_t> flagged;
    double max_defect = 0;
    double max_im_s = 0;
    double max_quintic_residual = 0;
};

// Normalized symplectic pairing |omega(u, v)| / (|u| |v|) in the metric of the point.
double symplectic_defect(const AffinePoint& p, const C4& u, const C4& v, Metric m);

TransportResult transport_fiber(const TransportConfig& cfg);

struct WindingConfig {
    int chart = 3;
    std::array<int, 2> face{4, 5};
    std::array<double, 2> moduli{0.7, 0.8};
    double epsilon = 1e-3;
    double psi = 10;
    int samples = 64;
    FlowConfig flow;
};

struct WindingResult {
    double angle = 0;  // total change of arg of the first face coordinate
    double winding = 0;
    bool all_reached = true;
    double max_im_s = 0;
};

// Flows a small circle linking D_I (|I| = 2) and measures how the endpoints wind.
WindingResult transported_circle_winding(const WindingConfig& cfg);

struct PairingConfig {
    double psi = 10;
    double modulus = 0.6;
    int nodes = 256;
};

struct PairingResult {
    cd integral;  // (1 / 2 pi i) loop integral
    long value = 0;
    double residue = 0;  // distance to the nearest integer
};

// <gamma_ij^k, alpha_{l m}> with alpha_{lm} = d log(z_l / z_m), loop in the chart z_j = 1 near D_i.
PairingResult loop_pairing(int i, int j, int k, int l, int m, const PairingConfig& cfg = {});

struct PairingMatrix {
    std::array<int, 3> cycles;  // k for rows
    std::array<int, 4> forms;   // l for columns (alpha_{l j})
    IntMatrix values;
    double max_residue = 0;
};

PairingMatrix pairing_matrix(int i, int j, const PairingConfig& cfg = {});

struct CoveringConfig {
    int grid = 400;
    double tol = 1e-5;             // deduplication radius in C^2
    double residual_tol = 1e-12;   // accepted |G|
    int max_iterations = 200;
};

struct CoveringResult {
    int count = 0;
    Stratum stratum = Stratum::Outside;
    std::vector<std::array<double, 2>> roots;
    int candidate_cells = 0;
    std::string warning;
};

// Points (theta_1, theta_2) in [0, 2 pi)^2 with r1^5 e^{5 i theta_1} + r2^5 e^{5 i theta_2} = -1.
CoveringResult covering_count(double r1, double r2, const CoveringConfig& cfg = {});

using R3 = std::array<double, 3>;
using Z3 = std::array<cd, 3>;

R3 hl_map(const Z3& z);
Eigen::Matrix<double, 3, 6> hl_jacobian(const Z3& z);
int hl_rank(const Z3& z, double rel_tol = 1e-10);

enum class HLClass { Smooth, SingularOrigin, SingularAxis };
std::string to_string(HLClass c);
HLClass classify_hl(const R3& c, double tol = 1e-12);

struct HLProbe {
    HLClass cls = HLClass::Smooth;
    int singular_set_dimension = -1;  // dimension of M_c meeting the rank-drop locus, -1 if empty
    double slag_defect = 0;           // max of omega and Im(Omega) defects over regular samples
    double omega_defect = 0;
    double phase_defect = 0;
    double max_constraint_residual = 0;
    int samples = 0;
    int regular_samples = 0;
    int flagged = 0;
};

HLProbe hl_fiber_probe(const R3& c, int n_samples, std::uint64_t seed = 7);

struct AxisRankSurvey {
    int axis_samples = 0;
    int axis_rank_drops = 0;
    int max_axis_rank = 0;
    int off_axis_samples = 0;
    int off_axis_full_rank = 0;
};

AxisRankSurvey hl_rank_survey(int samples, std::uint64_t seed = 11);

enum class MomentKind { FubiniStudy, Log, Weighted };
std::string to_string(MomentKind k);
MomentKind moment_kind_from_string(const std::string& s);

// Weighted: potential log(1 + sum w_i |x_i|^2), map entries w_i |x_i|^2 / (1 + sum w |x|^2).
std::vector<double> moment_maps(const AffinePoint& p, MomentKind kind, const std::array<double, 4>& weights = {1, 1, 1, 1});

// det g * prod |x_i|^2 for the flat metric with potential sum (log|x_i|^2)^2 - (sum log|x_i|^2)^2 / 5.
double flat_cy_volume_ratio(const C4& x);

// Applies f to 0..n-1 on worker threads; result i is always f(i).
template <typename F>
auto parallel_map(std::size_t n, F f, unsigned threads = 0) -> std::vector<decltype(f(std::size_t{0}))>
{
    using R = decltype(f(std::size_t{0}));
    std::vector<R> out(n);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = f(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += threads)
                    out[i] = f(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

}  // namespace syz
