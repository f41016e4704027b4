#pragma once

#include "syzlab/basecomplex.hpp"
#include "syzlab/fibercensus.hpp"
#include "syzlab/monodromy.hpp"
#include "syzlab/ratkernel.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace syz {

struct StalkSpec {
    std::string stratum;
    int count;
    int dimension;
};

struct ConstructibleSheafSpec {
    std::string name;
    std::vector<StalkSpec> vertex_stalks;
    StalkSpec edge_stalk;
    int c0() const;
    int c1() const;
};

ConstructibleSheafSpec K3_spec();
ConstructibleSheafSpec K2_spec();

struct CechComplex {
    std::size_t c0 = 0;
    std::size_t c1 = 0;
    RatMatrix d;  // c1 x c0, (restriction from head) - (restriction from tail)
    std::vector<std::string> c0_blocks;  // vertex name per C^0 coordinate block
    std::vector<std::string> c1_blocks;

    std::size_t rank_d() const { return rank(d); }
};

struct CohomologyDims {
    std::size_t rank = 0;
    std::size_t h0 = 0;
    std::size_t h1 = 0;
};

CohomologyDims cohomology(const CechComplex& c);

// Choices entering the K3 restriction maps that must not change its cohomology.
struct K3Labeling {
    // Per triple vertex (ascending order): which incident leg receives the u, v, w component.
    std::array<std::array<int, 3>, 10> roles;
    // Per triple vertex: l' = c l + a, m' = c m + b, n' = c n - a - b (mod 5), c invertible mod 5.
    std::array<std::array<int, 3>, 10> affine;
    // Per edge: permutation of the five components on the pair-vertex side.
    std::array<std::array<int, 5>, 30> pair_side;

    static K3Labeling canonical();
    static K3Labeling random(std::uint64_t seed);
};

CechComplex build_K3(const K3Labeling& labeling = K3Labeling::canonical());

struct SurjectivityReport {
    std::size_t rank_pi_tilde = 0;  // Q^25 -> Q^15
    std::size_t rank_pi = 0;        // sum-zero Q^25 -> three sum-zero Q^5
    bool image_sums_equal = false;  // every image of pi-tilde has equal block sums
    bool image_sums_zero = false;   // every image of pi has zero block sums
    std::array<int, 3> x00_pattern{};  // (u, v, w) component indices hit by x_00
    bool surjective() const { return rank_pi == 12; }
};

RatMatrix pi_tilde_matrix();
SurjectivityReport surjectivity_check_pijk();

struct K2Counts {
    int c0 = 0;
    int c1 = 0;
    int chi = 0;
    int h0 = 0;  // supplied: sections at pair vertices vanish
    int h1 = 0;
    int h1_R2 = 0;
};

K2Counts K2_dimension_count();

struct ICChainData {
    std::vector<std::string> c0_simplices;
    std::vector<std::string> c1_simplices;
    std::vector<std::string> c2_chains;
    std::vector<std::string> c3_chains;
    std::array<int, 4> dims{};
    int leg_invariant_dim = 0;
    int pair_invariant_dim = 0;
    int triple_invariant_dim = 0;
    int euler() const { return dims[0] - dims[1] + dims[2] - dims[3]; }
};

// Dimension of the subspace of a local system fixed by a group given by generators.
int invariant_dimension(const LocalSystem& ls, const std::vector<MonodromyOperator>& generators);

ICChainData ic_chain_dims();

// A 1-chain sum c_ij * gamma_j^i <P_i, P_jbar>, keyed by (i, j).
using LChain = std::map<std::pair<int, int>, Rational>;

LChain cycle_L();

struct ResidueEntry {
    std::string vertex;
    std::vector<std::string> steps;
    RatVector residual;  // coordinates in the local lattice after reduction
    bool zero = false;
};

struct ResidueReport {
    std::vector<ResidueEntry> entries;
    bool all_zero() const;
};

ResidueReport check_cycle(const LChain& chain);
inline ResidueReport check_cycle_L() { return check_cycle(cycle_L()); }

using E2Grid = std::array<std::array<long, 4>, 4>;  // [p][q]

struct E2Table {
    std::string name;
    E2Grid e{};

    long at(int p, int q) const { return e[p][q]; }
    long total_degree(int n) const;
    long alternating_sum() const;
    bool centrally_symmetric() const;   // (p,q) -> (3-p, 3-q)
    bool antidiagonal_symmetric() const;  // (p,q) -> (3-q, 3-p)
    // Display rows q = 3..0, columns p = 0..3.
    std::array<std::array<long, 4>, 4> display_rows() const;
    static E2Table from_display_rows(const std::string& name, const std::array<std::array<long, 4>, 4>& rows);
    bool operator==(const E2Table& o) const { return e == o.e; }
};

enum class E2Target { Quintic, Mirror };
std::string to_string(E2Target t);
E2Target e2_target_from_string(const std::string& s);

struct E2Components {
    std::optional<long> h0_K3, h1_K3;
    std::optional<long> h0_K2, h1_K2;
    std::optional<std::array<long, 4>> h_E1;  // h^p(i_* E1)
    std::optional<std::array<long, 4>> h_E2;  // h^p(i_* E2)
    std::optional<std::array<long, 4>> h_base;  // h^p of the base with constant coefficients
};

// Quintic components from the complexes above plus the supplied inputs; mirror components have no K-sheaves.
E2Components compute_E2_components(E2Target target);
E2Table assemble_E2(E2Target target, const E2Components& components);
inline E2Table assemble_E2(E2Target target) { return assemble_E2(target, compute_E2_components(target)); }

E2Table golden_E2(E2Target target);

}  // namespace syz
