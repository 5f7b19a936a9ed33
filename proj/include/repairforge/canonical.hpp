#pragma once

#include "repairforge/conflict_graph.hpp"
#include "repairforge/constraints.hpp"
#include "repairforge/core_model.hpp"
#include "repairforge/disjunctive.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace repairforge {

enum class BuildMode {
    /** Accumulate every generated disjunction; reduce once at the end. */
    Faithful,
    /** Discard newly generated disjunctions that are subsumed (or equal) and
     *  evict existing ones the newcomer subsumes. Must produce the same
     *  result as Faithful; guarded by a property test, not assumed. */
    EagerSubsumption,
};

struct BuildOptions {
    BuildMode mode = BuildMode::Faithful;
    std::size_t maxDisjunctions = 1'000'000;
    std::size_t maxDisjunctionWidth = 0;  // 0 means |D|
};

struct BuildStats {
    std::size_t iterations = 0;
    std::size_t generated = 0;
    std::size_t subsumed = 0;
    std::size_t peakSetSize = 0;

    std::string toJson() const;
};

/**
 * Computes the canonical disjunctive database for (db, constraints): the
 * unique reduced disjunctive database whose minimal models are exactly the
 * set-inclusion repairs. Seeds one disjunction per choice of a conflicting
 * partner from each incident edge, closes under the edge-combination rule
 * until fixpoint, and reduces.
 */
DisjunctiveDatabase algorithm1(const Database& db,
                               const std::vector<DenialConstraint>& constraints,
                               const BuildOptions& opts = {}, BuildStats* stats = nullptr);

/**
 * Closed form for a single key constraint: one disjunction per clique of
 * facts agreeing on the key attributes. Linear size. The classification must
 * be Key over the database's single relation.
 */
DisjunctiveDatabase canonicalOneKey(const Database& db, const ConstraintClass& key);

/**
 * Closed form for a single functional dependency: per clique (facts agreeing
 * on the determining attributes), every selection of one fact per cluster
 * (sub-partition by determined attributes) forms a disjunction.
 */
DisjunctiveDatabase canonicalOneFd(const Database& db, const ConstraintClass& fd,
                                   std::size_t maxDisjunctions = 1'000'000);

/**
 * The canonical disjunctive database whose minimal models are exactly the
 * given worlds: the minimal transversals of the world set. `worlds` must be
 * a non-empty antichain; {{}} yields the empty disjunctive database.
 */
DisjunctiveDatabase canonicalFromWorlds(const std::vector<FactSet>& worlds,
                                        const EnumerationLimits& limits = {});

}  // namespace repairforge
