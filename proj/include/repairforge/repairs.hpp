#pragma once

#include "repairforge/constraints.hpp"
#include "repairforge/core_model.hpp"

#include <iosfwd>
#include <vector>

namespace repairforge {

enum class RepairKind { SRepair, CRepair };

const char* toString(RepairKind kind);

/**
 * An antichain of consistent fact subsets of a database: the set-inclusion
 * repairs (maximal consistent subsets) or the cardinality-based repairs
 * (maximum-cardinality consistent subsets). Worlds are sorted by
 * (size descending, lexicographic) for stable output.
 */
struct RepairSet {
    RepairKind kind = RepairKind::SRepair;
    std::vector<FactSet> worlds;

    bool operator==(const RepairSet& other) const {
        return kind == other.kind && worlds == other.worlds;
    }
};

struct RepairLimits {
    std::size_t maxFacts = 24;
    std::size_t maxWorlds = 1'000'000;
};

/** All maximal consistent subsets, via complements of the minimal
 *  transversals of the conflict hypergraph's edge set. */
RepairSet sRepairs(const Database& db, const std::vector<DenialConstraint>& constraints,
                   const RepairLimits& limits = {});

/** The maximum-cardinality consistent subsets (deletions only, which for
 *  denial constraints realizes minimum symmetric difference cardinality). */
RepairSet cRepairs(const Database& db, const std::vector<DenialConstraint>& constraints,
                   const RepairLimits& limits = {});

/** Membership test: consistency plus a maximality (or maximum-cardinality)
 *  witness check, without enumerating the full repair set. */
bool isRepair(const FactSet& m, const Database& db,
              const std::vector<DenialConstraint>& constraints, RepairKind kind);

/**
 * Definitional oracle: exhaustively sweeps all 2^|db| subsets. Hard-capped
 * at 16 facts. Used by tests and the CLI `check` subcommand only.
 */
RepairSet bruteForceRepairs(const Database& db,
                            const std::vector<DenialConstraint>& constraints, RepairKind kind);

/** Text format: one world per line, `#k: fact, fact, ...` with cardinality. */
void writeText(const RepairSet& repairs, std::ostream& out);

/** JSON format: {"kind": ..., "worlds": [[fact strings]]}. */
std::string toJson(const RepairSet& repairs);

}  // namespace repairforge
