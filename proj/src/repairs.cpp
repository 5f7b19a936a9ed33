#include "repairforge/repairs.hpp"

#include "repairforge/conflict_graph.hpp"
#include "repairforge/errors.hpp"

#include "index_set.hpp"
#include "transversal.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>

namespace repairforge {

const char* toString(RepairKind kind) {
    return kind == RepairKind::SRepair ? "s" : "c";
}

namespace {

bool worldLess(const FactSet& a, const FactSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();  // larger worlds first
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<FactSet> maximalIndependentSets(const Database& db,
                                            const std::vector<DenialConstraint>& constraints,
                                            const RepairLimits& limits) {
    if (db.size() > limits.maxFacts) {
        throw LimitError("max_facts", limits.maxFacts, db.size());
    }
    ConflictHypergraph graph = buildConflictHypergraph(db, constraints);
    detail::FactInterner interner(db.facts());
    std::vector<detail::IndexSet> edges;
    for (const FactSet& e : graph.edges()) edges.push_back(interner.intern(e));

    // maximal independent sets are the complements of the minimal
    // transversals of the edge set
    auto transversals = detail::minimalTransversalsIdx(edges, interner.size(), limits.maxWorlds);
    std::vector<FactSet> worlds;
    worlds.reserve(transversals.size());
    detail::IndexSet all(interner.size());
    for (std::uint32_t i = 0; i < interner.size(); ++i) all.insert(i);
    for (const auto& t : transversals) {
        detail::IndexSet complement = all;
        for (std::uint32_t v : t.elements()) complement.erase(v);
        worlds.push_back(interner.extern_(complement));
    }
    std::sort(worlds.begin(), worlds.end(), worldLess);
    return worlds;
}

// size of a largest consistent subset, by branch and bound on a violated edge
std::size_t maxConsistentSize(const std::vector<detail::IndexSet>& edges,
                              detail::IndexSet candidate, std::size_t& best) {
    const detail::IndexSet* violated = nullptr;
    for (const auto& e : edges) {
        if (e.subsetOf(candidate)) {
            violated = &e;
            break;
        }
    }
    if (!violated) {
        best = std::max(best, candidate.count());
        return best;
    }
    if (candidate.count() <= best) return best;  // cannot improve
    for (std::uint32_t v : violated->elements()) {
        detail::IndexSet next = candidate;
        next.erase(v);
        maxConsistentSize(edges, next, best);
    }
    return best;
}

}  // namespace

RepairSet sRepairs(const Database& db, const std::vector<DenialConstraint>& constraints,
                   const RepairLimits& limits) {
    return RepairSet{RepairKind::SRepair, maximalIndependentSets(db, constraints, limits)};
}

RepairSet cRepairs(const Database& db, const std::vector<DenialConstraint>& constraints,
                   const RepairLimits& limits) {
    auto worlds = maximalIndependentSets(db, constraints, limits);
    std::size_t maxSize = 0;
    for (const FactSet& w : worlds) maxSize = std::max(maxSize, w.size());
    std::erase_if(worlds, [&](const FactSet& w) { return w.size() != maxSize; });
    return RepairSet{RepairKind::CRepair, std::move(worlds)};
}

bool isRepair(const FactSet& m, const Database& db,
              const std::vector<DenialConstraint>& constraints, RepairKind kind) {
    for (const Fact& f : m) {
        if (!db.contains(f)) throw Error("isRepair: " + f.toString() + " is not in the database");
    }
    ConflictHypergraph graph = buildConflictHypergraph(db, constraints);
    if (!graph.isIndependent(m)) return false;
    if (kind == RepairKind::SRepair) {
        for (const Fact& f : db.facts()) {
            if (m.count(f)) continue;
            FactSet extended = m;
            extended.insert(f);
            if (graph.isIndependent(extended)) return false;  // not maximal
        }
        return true;
    }
    detail::FactInterner interner(db.facts());
    std::vector<detail::IndexSet> edges;
    for (const FactSet& e : graph.edges()) edges.push_back(interner.intern(e));
    detail::IndexSet all(interner.size());
    for (std::uint32_t i = 0; i < interner.size(); ++i) all.insert(i);
    std::size_t best = 0;
    maxConsistentSize(edges, all, best);
    return m.size() == best;
}

RepairSet bruteForceRepairs(const Database& db,
                            const std::vector<DenialConstraint>& constraints, RepairKind kind) {
    constexpr std::size_t kHardCap = 16;
    if (db.size() > kHardCap) {
        throw LimitError("brute_force_max_facts", kHardCap, db.size());
    }
    std::vector<Fact> facts(db.facts().begin(), db.facts().end());
    std::size_t n = facts.size();

    // violation masks: a subset is consistent iff it contains none of them
    std::vector<std::uint32_t> violationMasks;
    for (const auto& c : constraints) {
        for (const FactSet& violation : findViolations(c, db)) {
            std::uint32_t mask = 0;
            for (const Fact& f : violation) {
                std::size_t idx = static_cast<std::size_t>(
                        std::lower_bound(facts.begin(), facts.end(), f) - facts.begin());
                mask |= std::uint32_t(1) << idx;
            }
            violationMasks.push_back(mask);
        }
    }

    std::vector<bool> consistent(std::size_t(1) << n, true);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        for (std::uint32_t v : violationMasks) {
            if ((mask & v) == v) {
                consistent[mask] = false;
                break;
            }
        }
    }

    std::vector<FactSet> worlds;
    std::size_t bestCard = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        if (!consistent[mask]) continue;
        bool maximal = true;
        for (std::size_t i = 0; i < n && maximal; ++i) {
            if (!(mask & (std::uint32_t(1) << i)) && consistent[mask | (std::uint32_t(1) << i)]) {
                maximal = false;
            }
        }
        if (!maximal) continue;
        FactSet world;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint32_t(1) << i)) world.insert(facts[i]);
        }
        bestCard = std::max(bestCard, world.size());
        worlds.push_back(std::move(world));
    }
    if (kind == RepairKind::CRepair) {
        std::erase_if(worlds, [&](const FactSet& w) { return w.size() != bestCard; });
    }
    std::sort(worlds.begin(), worlds.end(), worldLess);
    return RepairSet{kind, std::move(worlds)};
}

void writeText(const RepairSet& repairs, std::ostream& out) {
    for (const FactSet& w : repairs.worlds) {
        out << "#" << w.size() << ":";
        bool first = true;
        for (const Fact& f : w) {
            out << (first ? " " : ", ") << f.toString();
            first = false;
        }
        out << "\n";
    }
}

std::string toJson(const RepairSet& repairs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const FactSet& w : repairs.worlds) {
        nlohmann::json one = nlohmann::json::array();
        for (const Fact& f : w) one.push_back(f.toString());
        arr.push_back(std::move(one));
    }
    return nlohmann::json{{"kind", toString(repairs.kind)}, {"worlds", std::move(arr)}}.dump();
}

}  // namespace repairforge
