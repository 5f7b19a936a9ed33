#pragma once

#include "repairforge/constraints.hpp"
#include "repairforge/core_model.hpp"
#include "repairforge/disjunctive.hpp"
#include "repairforge/repairs.hpp"

#include <vector>

namespace repairforge {

/** The adversarial instance families used by the size-law experiments. */
struct FamilySpec {
    enum class Family {
        /** 3n facts over r(A,B) with keys on A and on B. */
        DnTwoKeys,
        /** 2n facts over r(A,B,C) with the non-key FD A -> B; canonical
         *  database of size n * 2^n. */
        OneFdExponential,
        /** One clique per listed size over r(A,B), single key on A. */
        OneKeyCliques,
    };

    Family family = Family::DnTwoKeys;
    std::size_t n = 1;
    std::vector<std::size_t> cliqueSizes;  // OneKeyCliques only
};

struct FamilyInstance {
    Database db;
    std::vector<DenialConstraint> constraints;
};

FamilyInstance generate(const FamilySpec& spec);

/** Closed-form size of the canonical disjunctive database for the family
 *  under the chosen repair semantics. */
std::size_t expectedSize(const FamilySpec& spec, RepairKind semantics);

/** The explicit canonical disjunctive database for a DnTwoKeys member, as
 *  a literal instantiation of its closed form. */
DisjunctiveDatabase closedFormDn(std::size_t n, RepairKind semantics);

/** The DnTwoKeys fact t_{ij} (1-based i in 1..n, j in 1..3). */
Fact dnFact(std::size_t i, std::size_t j);

}  // namespace repairforge
