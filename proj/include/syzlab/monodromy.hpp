#pragma once

#include "syzlab/basecomplex.hpp"
#include "syzlab/ratkernel.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace syz {

// Region U_i^j: near the divisor D_i, with z_j dominant.
struct ChartId {
    int divisor;
    int dominant;

    bool valid() const;
    // Upper indices of the canonical basis gamma_i^k, k ascending.
    std::array<int, 3> basis() const;
    std::string name() const;  // "U_5^4"
    std::vector<std::string> basis_names() const;
    bool operator==(const ChartId&) const = default;
    auto operator<=>(const ChartId&) const = default;
};

std::vector<ChartId> all_charts();

struct CycleSymbol {
    int lower;
    int upper;
    std::string name() const;  // "gamma_5^1"
    bool operator==(const CycleSymbol&) const = default;
};

using ChartPath = std::vector<ChartId>;

class IllegalStep : public std::invalid_argument {
public:
    IllegalStep(ChartId from, ChartId to);
};

enum class StepKind { Identity, SameDivisor, SameDominant };
StepKind step_kind(ChartId from, ChartId to);

// Column c holds the coordinates of the c-th basis cycle of `from` in the basis of `to`.
IntMatrix transition(ChartId from, ChartId to);

// Matrix of a closed chart path; the last step acts leftmost.
IntMatrix path_product(const ChartPath& path);

struct MonodromyOperator {
    IntMatrix matrix;
    ChartId basepoint;
    std::string label;
    int orientation = 1;
};

MonodromyOperator monodromy_along(const ChartPath& path, const std::string& label = "loop");

// Chart sequence of the standard loop around a leg, starting at U_m^l.
// m must lie outside the leg's index triple and l in its pair.
ChartPath leg_loop(const GraphEdge& leg, int m, int l);
// +1 when the standard loop through (i, j, k, l, m) is positively oriented.
int leg_loop_sign(const GraphEdge& leg, int m, int l);

// Deterministic connecting path from a basepoint to a chart on which the standard loop of the leg starts.
ChartPath leg_connection(const GraphEdge& leg, ChartId basepoint);

MonodromyOperator leg_monodromy(const GraphEdge& leg, ChartId basepoint, int orientation = 1);

// Charts from which the three legs at the vertex are reached by at most one step.
std::vector<ChartId> vertex_basepoints(const GraphVertex& v);

// Leg operators around the vertex, ordered by apex (triple vertex) or by apex (pair vertex).
std::vector<MonodromyOperator> vertex_monodromies(const GraphVertex& v, ChartId basepoint);

struct Filtration {
    std::vector<IntVector> generators;
    std::vector<std::string> names;
    std::size_t rank() const { return generators.size(); }
};

// Saturation of the span of the columns of (T - I).
Filtration vanishing_filtration(const std::vector<MonodromyOperator>& ops);

// Symbolic name of an integer vector in the basis of a chart, "gamma_5^1", "-gamma_5^3" or a sum.
std::string cycle_name(const IntVector& v, ChartId chart);

// Reorders a matrix written in the canonical basis of a chart to the given ordering of upper indices.
IntMatrix reorder_basis(const IntMatrix& m, ChartId chart, const std::array<int, 3>& order);

struct NerveEdge {
    ChartId from;
    ChartId to;
    IntMatrix matrix;
};

// A rank-3 local system on the chart nerve.
struct LocalSystem {
    std::string name;
    std::vector<ChartId> charts;
    std::vector<NerveEdge> transitions;

    const IntMatrix& transition_matrix(ChartId from, ChartId to) const;
    IntMatrix along(const ChartPath& path) const;
    // Action of the local system on the loop underlying a cycle-lattice operator.
    IntMatrix action(const MonodromyOperator& op) const;
    bool is_dual = false;
};

// The cycle lattice H_1 of the fiber with the transition matrices above.
LocalSystem cycle_local_system();
// First cohomology of the fiber: dual of the cycle lattice.
LocalSystem local_system_E1();
LocalSystem dual(const LocalSystem& ls);

struct MirrorConjugacy {
    bool found = false;
    int exponent = 1;  // +1: conjugate to dual; -1: to the inverse of the dual
    IntMatrix conjugator;
    std::vector<IntMatrix> source;  // operators at s(v)
    std::vector<IntMatrix> target;  // dual operators at v
};

// Searches X in GL3(Z) with X * A_k = (B_k^{-T})^e * X, A_k at s(v), B_k at v, legs matched by s.
MirrorConjugacy mirror_conjugacy(const GraphVertex& v, ChartId base_v, ChartId base_sv);

// Transvection [[1,-5,0],[0,1,0],[0,0,1]].
IntMatrix standard_leg_matrix();

}  // namespace syz
