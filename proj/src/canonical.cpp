#include "repairforge/canonical.hpp"

#include "repairforge/errors.hpp"

#include "index_set.hpp"
#include "transversal.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <unordered_set>

namespace repairforge {

std::string BuildStats::toJson() const {
    return nlohmann::json{{"iterations", iterations},
                          {"generated", generated},
                          {"subsumed", subsumed},
                          {"peak_set_size", peakSetSize}}
            .dump();
}

namespace {

using detail::IndexSet;
using detail::IndexSetHash;

struct Closure {
    std::size_t universe;
    const BuildOptions& opts;
    BuildStats& stats;
    bool eager;

    std::vector<IndexSet> items;       // append order; Eager marks evictions
    std::vector<bool> live;            // parallel to items
    std::unordered_set<IndexSet, IndexSetHash> members;
    std::size_t liveCount = 0;

    Closure(std::size_t universe, const BuildOptions& opts, BuildStats& stats)
            : universe(universe), opts(opts), stats(stats),
              eager(opts.mode == BuildMode::EagerSubsumption) {}

    void checkWidth(const IndexSet& s) const {
        std::size_t width = s.count();
        std::size_t maxWidth = opts.maxDisjunctionWidth ? opts.maxDisjunctionWidth : universe;
        if (width > maxWidth) {
            throw LimitError("max_disjunction_width", maxWidth, width);
        }
    }

    // returns true if the set was actually added
    bool add(const IndexSet& s) {
        checkWidth(s);
        if (members.count(s)) return false;
        if (eager) {
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (live[i] && items[i].subsetOf(s)) {
                    ++stats.subsumed;
                    return false;
                }
            }
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (live[i] && s.subsetOf(items[i])) {
                    live[i] = false;
                    --liveCount;
                    ++stats.subsumed;
                }
            }
        }
        members.insert(s);
        items.push_back(s);
        live.push_back(true);
        ++liveCount;
        ++stats.generated;
        stats.peakSetSize = std::max(stats.peakSetSize, liveCount);
        if (liveCount > opts.maxDisjunctions) {
            throw LimitError("max_disjunctions", opts.maxDisjunctions, liveCount);
        }
        return true;
    }
};

// one disjunction per choice of a conflicting partner from each incident edge
void seed(Closure& closure, const std::vector<IndexSet>& edges,
          const std::vector<std::vector<std::uint32_t>>& edgeElems) {
    std::size_t n = closure.universe;
    for (std::uint32_t t = 0; t < n; ++t) {
        std::vector<std::vector<std::uint32_t>> choices;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (!edges[e].contains(t)) continue;
            std::vector<std::uint32_t> others;
            for (std::uint32_t u : edgeElems[e]) {
                if (u != t) others.push_back(u);
            }
            // an incident edge with no other fact cannot happen: singleton
            // edges were removed with their facts in step 2
            choices.push_back(std::move(others));
        }
        std::vector<std::size_t> odometer(choices.size(), 0);
        for (;;) {
            IndexSet d(n);
            d.insert(t);
            for (std::size_t i = 0; i < choices.size(); ++i) d.insert(choices[i][odometer[i]]);
            closure.add(d);
            std::size_t i = 0;
            for (; i < choices.size(); ++i) {
                if (++odometer[i] < choices[i].size()) break;
                odometer[i] = 0;
            }
            if (i == choices.size()) break;
        }
    }
}

}  // namespace

DisjunctiveDatabase algorithm1(const Database& db,
                               const std::vector<DenialConstraint>& constraints,
                               const BuildOptions& opts, BuildStats* statsOut) {
    BuildStats stats;
    ConflictHypergraph full = buildConflictHypergraph(db, constraints);

    // step 2: drop every fact with a singleton edge
    FactSet kept = db.facts();
    for (const FactSet& e : full.edges()) {
        if (e.size() == 1) kept.erase(*e.begin());
    }
    ConflictHypergraph graph = full.restrictTo(kept);

    detail::FactInterner interner(kept);
    std::size_t n = interner.size();
    std::vector<IndexSet> edges;
    std::vector<std::vector<std::uint32_t>> edgeElems;
    for (const FactSet& e : graph.edges()) {
        IndexSet idx = interner.intern(e);
        edgeElems.push_back(idx.elements());
        edges.push_back(std::move(idx));
    }

    Closure closure(n, opts, stats);
    seed(closure, edges, edgeElems);

    // steps 6-9: staged passes until no new disjunction appears
    std::size_t newFrom = 0;  // items added since the pass before last
    for (;;) {
        ++stats.iterations;
        std::size_t snapshot = closure.items.size();
        std::vector<IndexSet> staged;
        std::unordered_set<IndexSet, IndexSetHash> stagedSet;

        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto& elems = edgeElems[e];
            std::size_t k = elems.size();
            // per position: disjunctions meeting the edge exactly in t_i,
            // with something left after removing t_i
            std::vector<std::vector<std::size_t>> lists(k);
            bool empty = false;
            for (std::size_t i = 0; i < k && !empty; ++i) {
                for (std::size_t j = 0; j < snapshot; ++j) {
                    if (!closure.live[j]) continue;
                    const IndexSet& d = closure.items[j];
                    if (!d.contains(elems[i])) continue;
                    if (d.count() < 2) continue;
                    IndexSet overlap = d;
                    overlap &= edges[e];
                    if (overlap.count() != 1) continue;  // must meet e only in t_i
                    lists[i].push_back(j);
                }
                if (lists[i].empty()) empty = true;
            }
            if (empty) continue;

            // lists are in ascending item order, so the old items (handled in
            // an earlier pass) form a prefix; enumerate only tuples with at
            // least one new item, partitioned by the first new position
            std::vector<std::size_t> oldLen(k);
            for (std::size_t i = 0; i < k; ++i) {
                oldLen[i] = static_cast<std::size_t>(
                        std::lower_bound(lists[i].begin(), lists[i].end(), newFrom) -
                        lists[i].begin());
            }
            for (std::size_t focus = 0; focus < k; ++focus) {
                bool feasible = oldLen[focus] < lists[focus].size();
                for (std::size_t i = 0; i < focus && feasible; ++i) {
                    feasible = oldLen[i] > 0;
                }
                if (!feasible) continue;
                // position < focus: old only; == focus: new only; >: all
                auto listBegin = [&](std::size_t i) {
                    return i == focus ? oldLen[i] : std::size_t(0);
                };
                auto listEnd = [&](std::size_t i) {
                    return i < focus ? oldLen[i] : lists[i].size();
                };
                std::vector<std::size_t> odometer(k);
                for (std::size_t i = 0; i < k; ++i) odometer[i] = listBegin(i);
                for (;;) {
                    IndexSet u(n);
                    for (std::size_t i = 0; i < k; ++i) {
                        u |= closure.items[lists[i][odometer[i]]].minus(elems[i]);
                    }
                    if (!closure.members.count(u) && !stagedSet.count(u)) {
                        closure.checkWidth(u);
                        stagedSet.insert(u);
                        staged.push_back(std::move(u));
                        if (closure.liveCount + staged.size() > opts.maxDisjunctions) {
                            throw LimitError("max_disjunctions", opts.maxDisjunctions,
                                             closure.liveCount + staged.size());
                        }
                    }
                    std::size_t i = 0;
                    for (; i < k; ++i) {
                        if (++odometer[i] < listEnd(i)) break;
                        odometer[i] = listBegin(i);
                    }
                    if (i == k) break;
                }
            }
        }

        if (staged.empty()) break;
        newFrom = snapshot;
        for (const IndexSet& u : staged) closure.add(u);
    }

    // step 10
    std::vector<IndexSet> liveSets;
    for (std::size_t i = 0; i < closure.items.size(); ++i) {
        if (closure.live[i]) liveSets.push_back(closure.items[i]);
    }
    std::size_t before = liveSets.size();
    std::vector<IndexSet> reduced = detail::antichainFilterIdx(std::move(liveSets));
    stats.subsumed += before - reduced.size();

    std::vector<Disjunction> disjunctions;
    disjunctions.reserve(reduced.size());
    for (const IndexSet& s : reduced) disjunctions.push_back(interner.extern_(s));
    if (statsOut) *statsOut = stats;
    return DisjunctiveDatabase(std::move(disjunctions));
}

namespace {

std::vector<Value> project(const Fact& f, const std::vector<std::size_t>& positions) {
    std::vector<Value> out;
    out.reserve(positions.size());
    for (std::size_t p : positions) out.push_back(f.args[p]);
    return out;
}

void checkSingleRelation(const Database& db, const ConstraintClass& cls, const char* what) {
    if (db.schema().size() > 1) {
        throw Error(std::string(what) + ": database spans more than one relation");
    }
    if (!db.facts().empty() && db.facts().begin()->relation != cls.relation) {
        throw Error(std::string(what) + ": constraint is over relation '" + cls.relation +
                    "', database over '" + db.facts().begin()->relation + "'");
    }
}

}  // namespace

DisjunctiveDatabase canonicalOneKey(const Database& db, const ConstraintClass& key) {
    if (key.tag != ConstraintClass::Tag::Key) {
        throw Error("canonicalOneKey: constraint is not a key");
    }
    checkSingleRelation(db, key, "canonicalOneKey");
    std::map<std::vector<Value>, Disjunction> cliques;
    for (const Fact& f : db.facts()) cliques[project(f, key.lhs)].insert(f);
    std::vector<Disjunction> disjunctions;
    for (auto& [proj, clique] : cliques) disjunctions.push_back(std::move(clique));
    return DisjunctiveDatabase(std::move(disjunctions));
}

DisjunctiveDatabase canonicalOneFd(const Database& db, const ConstraintClass& fd,
                                   std::size_t maxDisjunctions) {
    if (fd.tag != ConstraintClass::Tag::FunctionalDependency &&
        fd.tag != ConstraintClass::Tag::Key) {
        throw Error("canonicalOneFd: constraint is not a functional dependency");
    }
    checkSingleRelation(db, fd, "canonicalOneFd");
    std::map<std::vector<Value>, std::map<std::vector<Value>, std::vector<Fact>>> cliques;
    for (const Fact& f : db.facts()) {
        // under a key every non-key attribute is determined
        std::vector<Value> determined =
                fd.tag == ConstraintClass::Tag::Key ? std::vector<Value>{} : project(f, fd.rhs);
        if (fd.tag == ConstraintClass::Tag::Key) {
            for (std::size_t p = 0; p < f.args.size(); ++p) {
                if (!std::binary_search(fd.lhs.begin(), fd.lhs.end(), p)) {
                    determined.push_back(f.args[p]);
                }
            }
        }
        cliques[project(f, fd.lhs)][determined].push_back(f);
    }

    std::vector<Disjunction> disjunctions;
    std::size_t total = 0;
    for (const auto& [proj, clusterMap] : cliques) {
        std::vector<const std::vector<Fact>*> clusters;
        std::size_t product = 1;
        for (const auto& [det, cluster] : clusterMap) {
            clusters.push_back(&cluster);
            product *= cluster.size();
            if (total + product > maxDisjunctions) {
                throw LimitError("max_disjunctions", maxDisjunctions, total + product);
            }
        }
        std::vector<std::size_t> odometer(clusters.size(), 0);
        for (;;) {
            Disjunction d;
            for (std::size_t i = 0; i < clusters.size(); ++i) {
                d.insert((*clusters[i])[odometer[i]]);
            }
            disjunctions.push_back(std::move(d));
            std::size_t i = 0;
            for (; i < clusters.size(); ++i) {
                if (++odometer[i] < clusters[i]->size()) break;
                odometer[i] = 0;
            }
            if (i == clusters.size()) break;
        }
        total += product;
    }
    return DisjunctiveDatabase(std::move(disjunctions));
}

DisjunctiveDatabase canonicalFromWorlds(const std::vector<FactSet>& worlds,
                                        const EnumerationLimits& limits) {
    if (worlds.empty()) throw Error("canonicalFromWorlds: world set must be non-empty");
    std::vector<FactSet> unique = worlds;
    std::sort(unique.begin(), unique.end(), factSetLess);
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    if (unique.size() != worlds.size()) {
        throw Error("canonicalFromWorlds: duplicate worlds");
    }
    for (const FactSet& a : unique) {
        for (const FactSet& b : unique) {
            if (&a != &b && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                throw Error("canonicalFromWorlds: input is not an antichain");
            }
        }
    }
    if (unique.size() == 1 && unique.front().empty()) {
        return DisjunctiveDatabase{};
    }
    return DisjunctiveDatabase(minimalTransversals(unique, limits));
}

}  // namespace repairforge
