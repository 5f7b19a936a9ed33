#include "repairforge/conflict_graph.hpp"

#include "repairforge/errors.hpp"

#include <algorithm>

namespace repairforge {

ConflictHypergraph::ConflictHypergraph(FactSet vertices, std::vector<FactSet> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (const FactSet& e : edges_) {
        if (e.empty()) throw Error("conflict hypergraph edge must be non-empty");
        for (const Fact& f : e) {
            if (!vertices_.count(f)) {
                throw Error("edge fact " + f.toString() + " is not a vertex");
            }
        }
    }
    std::sort(edges_.begin(), edges_.end(), factSetLess);
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<const FactSet*> ConflictHypergraph::incidentEdges(const Fact& t) const {
    std::vector<const FactSet*> out;
    for (const FactSet& e : edges_) {
        if (e.count(t)) out.push_back(&e);
    }
    return out;
}

FactSet ConflictHypergraph::conflictingFacts() const {
    FactSet out;
    for (const FactSet& e : edges_) out.insert(e.begin(), e.end());
    return out;
}

ConflictHypergraph ConflictHypergraph::restrictTo(const FactSet& keep) const {
    for (const Fact& f : keep) {
        if (!vertices_.count(f)) {
            throw Error("restrict: " + f.toString() + " is not a vertex");
        }
    }
    std::vector<FactSet> kept;
    for (const FactSet& e : edges_) {
        if (std::includes(keep.begin(), keep.end(), e.begin(), e.end())) kept.push_back(e);
    }
    return ConflictHypergraph(keep, std::move(kept));
}

bool ConflictHypergraph::isIndependent(const FactSet& subset) const {
    for (const FactSet& e : edges_) {
        if (std::includes(subset.begin(), subset.end(), e.begin(), e.end())) return false;
    }
    return true;
}

ConflictHypergraph ConflictHypergraph::minimized() const {
    std::vector<FactSet> kept;
    for (const FactSet& e : edges_) {
        bool minimal = true;
        for (const FactSet& other : edges_) {
            if (&other != &e && other.size() < e.size() &&
                std::includes(e.begin(), e.end(), other.begin(), other.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) kept.push_back(e);
    }
    return ConflictHypergraph(vertices_, std::move(kept));
}

ConflictHypergraph buildConflictHypergraph(const Database& db,
                                           const std::vector<DenialConstraint>& constraints) {
    std::vector<FactSet> edges;
    for (const auto& c : constraints) {
        for (auto& e : findViolations(c, db)) edges.push_back(std::move(e));
    }
    return ConflictHypergraph(db.facts(), std::move(edges));
}

}  // namespace repairforge
