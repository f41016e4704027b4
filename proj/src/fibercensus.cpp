#include "syzlab/fibercensus.hpp"

#include <sstream>
#include <stdexcept>

namespace syz {

namespace {

// chi(X / A) = chi(X) - chi(A) + #components(A), with X = T^3 and A a disjoint union of d-tori, d >= 1.
int collapse_euler(int copies, int d)
{
    if (d < 1)
        throw std::invalid_argument("collapsed subtori must be positive dimensional");
    const int chi_t3 = 0, chi_subtorus = 0;
    return chi_t3 - copies * chi_subtorus + copies;
}

}  // namespace

FiberType fiber_type(FiberKind kind)
{
    switch (kind) {
    case FiberKind::Smooth:
        return {kind, "smooth", 0, 0, "empty", 0, "T^3"};
    case FiberKind::GradI50:
        return {kind, "T3 with 50 circles collapsed", std::nullopt, collapse_euler(50, 1), "50 points", 50,
                "T^3 with 50 disjoint circles collapsed to points"};
    case FiberKind::GradI25:
        return {kind, "T3 with 25 circles collapsed", std::nullopt, collapse_euler(25, 1), "25 points", 25,
                "T^3 with 25 disjoint circles collapsed to points"};
    case FiberKind::GradII5:
        return {kind, "T3 with 5 two-tori collapsed", std::nullopt, collapse_euler(5, 2), "5 points", 5,
                "T^3 with 5 disjoint two-tori collapsed to points"};
    case FiberKind::I5:
        return {kind, "I5", 0, 0, "5 circles", 5, "I_5 x S^1 has an S^1 factor"};
    case FiberKind::II5x5:
        return {kind, "II5x5", -25, std::nullopt, "graph Gamma_ijk", 1, ""};
    case FiberKind::III5:
        return {kind, "III5", 5, collapse_euler(5, 2), "5 points", 5,
                "T^3 with 5 disjoint two-tori collapsed to points"};
    case FiberKind::I:
        return {kind, "I", 0, 0, "1 circle", 1, "I_1 x S^1 has an S^1 factor"};
    case FiberKind::II:
        // S^1 x T^2 with the circles over the spine of a pair of pants collapsed: chi = chi(spine) = -1.
        return {kind, "II", 1, -1, "graph hat-Gamma_ijk", 1,
                "S^1 x T^2 with circles over a pair-of-pants spine collapsed"};
    case FiberKind::III:
        // Suspension of T^2 has chi 2; identifying the two poles subtracts 1.
        return {kind, "III", -1, 1, "1 point", 1, "suspension of T^2 with poles identified"};
    }
    throw std::invalid_argument("unknown fiber kind");
}

std::string to_string(FiberKind kind)
{
    switch (kind) {
    case FiberKind::Smooth: return "Smooth";
    case FiberKind::GradI50: return "GradI50";
    case FiberKind::GradI25: return "GradI25";
    case FiberKind::GradII5: return "GradII5";
    case FiberKind::I5: return "I5";
    case FiberKind::II5x5: return "II5x5";
    case FiberKind::III5: return "III5";
    case FiberKind::I: return "I";
    case FiberKind::II: return "II";
    case FiberKind::III: return "III";
    }
    return "?";
}

FiberKind fiber_kind_from_string(const std::string& name)
{
    for (auto k : {FiberKind::Smooth, FiberKind::GradI50, FiberKind::GradI25, FiberKind::GradII5, FiberKind::I5,
                   FiberKind::II5x5, FiberKind::III5, FiberKind::I, FiberKind::II, FiberKind::III})
        if (to_string(k) == name)
            return k;
    throw std::invalid_argument("unknown fiber type '" + name + "'");
}

std::string to_string(Fibration f)
{
    switch (f) {
    case Fibration::Constructed: return "constructed";
    case Fibration::Expected: return "expected";
    case Fibration::Mirror: return "mirror";
    }
    return "?";
}

Fibration fibration_from_string(const std::string& name)
{
    if (name == "constructed")
        return Fibration::Constructed;
    if (name == "expected")
        return Fibration::Expected;
    if (name == "mirror")
        return Fibration::Mirror;
    throw std::invalid_argument("unknown fibration '" + name + "' (constructed|expected|mirror)");
}

std::vector<CensusRow> census(Fibration f)
{
    const BaseGraph g = enumerate_graph();
    int pairs = 0, triples = 0;
    for (const auto& v : g.vertices)
        (v.kind == VertexKind::Pair ? pairs : triples)++;
    const int legs = static_cast<int>(g.edges.size());

    switch (f) {
    case Fibration::Constructed:
        // Per 2-face of the simplex; these strata are two-, one- and zero-dimensional families.
        return {
            {"boundary minus fattened graph", 1, fiber_type(FiberKind::Smooth), 0, false},
            {"fattened interior (2-dim)", 10, fiber_type(FiberKind::GradI50), 50, false},
            {"fattened edge (1-dim)", 10, fiber_type(FiberKind::GradI25), 25, false},
            {"fattened vertex (0-dim)", 10, fiber_type(FiberKind::GradII5), 5, false},
        };
    case Fibration::Expected:
        return {
            {"leg Gamma_ij^k", legs, fiber_type(FiberKind::I5), 5, false},
            {"vertex P_ijk", triples, fiber_type(FiberKind::II5x5), 25, true},
            {"vertex P_ij", pairs, fiber_type(FiberKind::III5), 5, true},
        };
    case Fibration::Mirror:
        return {
            {"leg Gamma_ij^k", legs, quotient_fiber(fiber_type(FiberKind::I5)), 1, false},
            {"vertex P_ijk", triples, quotient_fiber(fiber_type(FiberKind::II5x5)), 1, true},
            {"vertex P_ij", pairs, quotient_fiber(fiber_type(FiberKind::III5)), 1, true},
        };
    }
    return {};
}

std::string EulerLedger::formula() const
{
    std::ostringstream os;
    for (std::size_t t = 0; t < terms.size(); ++t)
        os << (t ? " + " : "") << terms[t].count << "*(" << terms[t].fiber_euler << ")";
    os << " = " << total;
    return os.str();
}

EulerLedger euler_ledger(const std::vector<CensusRow>& rows)
{
    EulerLedger l;
    for (const auto& r : rows) {
        if (!r.contributes_to_euler)
            continue;
        if (!r.fiber.euler)
            throw std::invalid_argument("fiber type " + r.fiber.name + " has no Euler number");
        const int c = r.stratum_count * *r.fiber.euler;
        l.terms.push_back({r.stratum, r.stratum_count, *r.fiber.euler, c});
        l.total += c;
    }
    return l;
}

EulerLedger euler_ledger(Fibration f)
{
    if (f == Fibration::Constructed)
        throw std::invalid_argument("no Euler ledger for the constructed fibration");
    return euler_ledger(census(f));
}

EulerLedger recomputed_euler_ledger(Fibration f)
{
    auto rows = census(f);
    for (auto& r : rows)
        if (r.fiber.recomputed_euler)
            r.fiber.euler = r.fiber.recomputed_euler;
    return euler_ledger(rows);
}

int genus_from_euler(int chi)
{
    if (chi > 2 || (2 - chi) % 2 != 0)
        throw std::domain_error("Euler number " + std::to_string(chi) + " is not that of a closed orientable surface");
    return (2 - chi) / 2;
}

SingularSurface singular_surface(const FaceLabel& ijk, bool quotient)
{
    if (ijk.size() != 3)
        throw std::invalid_argument("singular surface needs three indices");
    // Three 5-point end fibers over the pair vertices and the graph fiber over P_ijk.
    const int points_per_end = 5;
    const int center = *fiber_type(FiberKind::II5x5).euler;
    int chi = 3 * points_per_end + center;
    std::string label = "Sigma_" + ijk.digits();
    if (quotient) {
        if (chi % 5 != 0)
            throw std::logic_error("quotient Euler number not integral");
        chi /= 5;
        label = "hatSigma_" + ijk.digits();
    }
    return {label, chi, genus_from_euler(chi)};
}

FiberType quotient_fiber(const FiberType& type)
{
    switch (type.kind) {
    case FiberKind::I5: return fiber_type(FiberKind::I);
    case FiberKind::II5x5: return fiber_type(FiberKind::II);
    case FiberKind::III5: return fiber_type(FiberKind::III);
    default: throw std::invalid_argument("no quotient rule for fiber type " + type.name);
    }
}

}  // namespace syz
