#pragma once

#include "syzlab/basecomplex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace syz {

enum class FiberKind { Smooth, GradI50, GradI25, GradII5, I5, II5x5, III5, I, II, III };

struct FiberType {
    FiberKind kind;
    std::string name;
    std::optional<int> euler;             // value quoted for the fiber type, if any
    std::optional<int> recomputed_euler;  // from an explicit topological model, if one exists
    std::string singular_set;
    int singular_count = 0;
    std::string model;  // how the recomputation was done

    bool consistent() const { return !euler || !recomputed_euler || *euler == *recomputed_euler; }
};

FiberType fiber_type(FiberKind kind);
std::string to_string(FiberKind kind);
FiberKind fiber_kind_from_string(const std::string& name);

enum class Fibration { Constructed, Expected, Mirror };
std::string to_string(Fibration f);
Fibration fibration_from_string(const std::string& name);

struct CensusRow {
    std::string stratum;
    int stratum_count = 0;
    FiberType fiber;
    int collapsed_cycles = 0;
    bool contributes_to_euler = false;
};

std::vector<CensusRow> census(Fibration f);

struct LedgerTerm {
    std::string stratum;
    int count;
    int fiber_euler;
    int contribution;
};

struct EulerLedger {
    std::vector<LedgerTerm> terms;
    int total = 0;
    std::string formula() const;  // "10*(-25) + 10*(5) = -200"
};

EulerLedger euler_ledger(const std::vector<CensusRow>& rows);
EulerLedger euler_ledger(Fibration f);

// Ledger using recomputed fiber Euler numbers where available.
EulerLedger recomputed_euler_ledger(Fibration f);

struct SingularSurface {
    std::string label;
    int euler;
    int genus;
};

int genus_from_euler(int chi);

// Sigma_ijk on the quintic side or its Z_5^3 quotient.
SingularSurface singular_surface(const FaceLabel& ijk, bool quotient);

FiberType quotient_fiber(const FiberType& type);

}  // namespace syz
