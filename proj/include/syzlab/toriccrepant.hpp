#pragma once

#include "syzlab/ratkernel.hpp"

#include <array>
#include <string>
#include <vector>

namespace syz {

struct LatticeCone {
    std::vector<IntVector> generators;

    bool generators_primitive() const;
    // No nonzero vector of the cone has its negative in the cone.
    bool strongly_convex() const;
};

// Cone <5e^1, 5e^2, 5e^3> inside M = <5e^1, 5e^2, 5e^3, sum e^i>, coordinates in Z^3.
LatticeCone quotient_cone();
std::vector<IntVector> quotient_lattice_generators();
// Index of M in Z^3 (Smith normal form).
Integer quotient_lattice_index();
// Basis of M in Hermite form.
std::vector<IntVector> quotient_lattice_basis();

struct CrepancyDetail {
    RatVector lambda;      // ray = sum lambda_i v_i
    Rational lambda_sum;
    RatVector weight;      // <v_i, w> = 1 for every base ray
    Rational pairing;      // <ray, w>
    bool nonnegative = false;
    bool crepant = false;  // nonnegative and lambda_sum == 1
};

// Throws std::invalid_argument when the base rays are linearly dependent.
CrepancyDetail crepancy_detail(const RatVector& ray, const std::vector<RatVector>& base_rays);
bool crepancy_check(const RatVector& ray, const std::vector<RatVector>& base_rays);

enum class RayClass { Vertex, EdgeInterior, TriangleInterior };
std::string to_string(RayClass c);

struct CrepantRay {
    std::array<int, 3> ijk;  // v = (i e_1 + j e_2 + k e_3) / 5
    RatVector coords;        // in the basis e_1, e_2, e_3
    IntVector n_coords;      // pairings with the basis of M
    RayClass cls;
    int edge = -1;           // index of the vanishing coordinate for edge-interior rays
    std::string name() const;  // "v_014"
};

std::vector<CrepantRay> enumerate_crepant_rays();

struct UnitTriangle {
    std::array<std::size_t, 3> rays;
    bool upward;
};

struct ResolutionFan {
    std::vector<CrepantRay> rays;
    std::vector<UnitTriangle> cones;
    std::vector<std::size_t> added_rays;  // non-vertex rays

    Integer cone_determinant(std::size_t cone) const;  // in N coordinates
    // Twice the area in the (i, j) chart of the triangle; a unit triangle has 1.
    Integer doubled_area(std::size_t cone) const;
    bool interiors_overlap(std::size_t a, std::size_t b) const;
};

ResolutionFan triangulate_dilated_triangle();

struct DivisorCount {
    int per_curve = 0;
    int curves = 0;
    int per_point = 0;
    int points = 0;
    int total() const { return per_curve * curves + per_point * points; }
};

DivisorCount divisor_census();

using HodgeVector = std::array<long, 7>;

// h^3 is supplied by the mirror Leray table.
HodgeVector mirror_hodge_summary(const DivisorCount& divisors, long h3);
long hodge_euler(const HodgeVector& h);

}  // namespace syz
