#pragma once

#include "repairforge/constraints.hpp"
#include "repairforge/core_model.hpp"

#include <vector>

namespace repairforge {

/**
 * The conflict hypergraph of a database w.r.t. a set of denial constraints:
 * vertices are all facts (isolated vertices allowed), edges are the violation
 * instantiation sets. Edges are deduplicated as sets and kept in canonical
 * (size, lexicographic) order. Immutable after construction.
 */
class ConflictHypergraph {
public:
    ConflictHypergraph(FactSet vertices, std::vector<FactSet> edges);

    const FactSet& vertices() const { return vertices_; }
    const std::vector<FactSet>& edges() const { return edges_; }

    /** edges(t): the edges containing the given fact. */
    std::vector<const FactSet*> incidentEdges(const Fact& t) const;

    /** Facts with at least one incident edge. */
    FactSet conflictingFacts() const;

    /** The sub-hypergraph on `keep`: edges entirely within `keep` survive.
     *  Throws Error if `keep` is not a subset of the vertices. */
    ConflictHypergraph restrictTo(const FactSet& keep) const;

    /** True iff no edge is a subset of `subset`. */
    bool isIndependent(const FactSet& subset) const;

    /** Optional normalization: keeps only the inclusion-minimal edges.
     *  Does not change which subsets are independent, hence not the repairs. */
    ConflictHypergraph minimized() const;

private:
    FactSet vertices_;
    std::vector<FactSet> edges_;
};

ConflictHypergraph buildConflictHypergraph(const Database& db,
                                           const std::vector<DenialConstraint>& constraints);

}  // namespace repairforge
