#include "repairforge/disjunctive.hpp"

#include "repairforge/errors.hpp"

#include "index_set.hpp"
#include "scanner.hpp"
#include "transversal.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>
#include <unordered_set>

namespace repairforge {

DisjunctiveDatabase::DisjunctiveDatabase(std::vector<Disjunction> disjunctions)
        : disjunctions_(std::move(disjunctions)) {
    for (const Disjunction& d : disjunctions_) {
        if (d.empty()) throw Error("disjunction must be non-empty");
    }
    std::sort(disjunctions_.begin(), disjunctions_.end(), factSetLess);
    disjunctions_.erase(std::unique(disjunctions_.begin(), disjunctions_.end()),
                        disjunctions_.end());
}

FactSet DisjunctiveDatabase::facts() const {
    FactSet out;
    for (const Disjunction& d : disjunctions_) out.insert(d.begin(), d.end());
    return out;
}

bool subsumes(const Disjunction& d1, const Disjunction& d2) {
    if (d1.size() >= d2.size()) return false;
    return std::includes(d2.begin(), d2.end(), d1.begin(), d1.end());
}

DisjunctiveDatabase reduction(const DisjunctiveDatabase& dd) {
    const auto& all = dd.disjunctions();
    std::vector<Disjunction> kept;
    for (const Disjunction& d : all) {
        bool subsumed = false;
        for (const Disjunction& other : all) {
            if (subsumes(other, d)) {
                subsumed = true;
                break;
            }
        }
        if (!subsumed) kept.push_back(d);
    }
    return DisjunctiveDatabase(std::move(kept));
}

bool isModel(const FactSet& m, const DisjunctiveDatabase& dd) {
    for (const Disjunction& d : dd.disjunctions()) {
        bool hit = false;
        for (const Fact& f : d) {
            if (m.count(f)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

std::size_t size(const DisjunctiveDatabase& dd) {
    std::size_t n = 0;
    for (const Disjunction& d : dd.disjunctions()) n += d.size();
    return n;
}

namespace detail {

namespace {

// Branch on the elements of a smallest uncovered edge, excluding within each
// edge the elements already branched on. Every minimal transversal is
// reached; the final antichain filter removes the non-minimal candidates.
struct TransversalSearch {
    const std::vector<IndexSet>& edges;
    std::size_t universe;
    std::size_t maxResults;
    std::unordered_set<IndexSet, IndexSetHash> candidates;

    void run() {
        IndexSet partial(universe);
        IndexSet forbidden(universe);
        recurse(partial, forbidden);
    }

    void recurse(IndexSet& partial, IndexSet forbidden) {
        const IndexSet* pick = nullptr;
        std::size_t best = static_cast<std::size_t>(-1);
        for (const IndexSet& e : edges) {
            if (e.intersects(partial)) continue;
            std::size_t c = e.count();
            if (c < best) {
                best = c;
                pick = &e;
            }
        }
        if (!pick) {
            candidates.insert(partial);
            if (candidates.size() > maxResults) {
                throw LimitError("max_results", maxResults, candidates.size());
            }
            return;
        }
        for (std::uint32_t v : pick->elements()) {
            if (forbidden.contains(v)) continue;
            partial.insert(v);
            recurse(partial, forbidden);
            partial.erase(v);
            forbidden.insert(v);
        }
    }
};

}  // namespace

std::vector<IndexSet> minimalTransversalsIdx(const std::vector<IndexSet>& edges,
                                             std::size_t universe, std::size_t maxResults) {
    TransversalSearch search{edges, universe, maxResults, {}};
    search.run();
    std::vector<IndexSet> sorted(search.candidates.begin(), search.candidates.end());
    std::sort(sorted.begin(), sorted.end(), IndexSet::canonicalLess);
    // keep the inclusion-minimal candidates; ascending size makes one pass enough
    std::vector<IndexSet> minimal;
    for (const IndexSet& s : sorted) {
        bool hasSubset = false;
        for (const IndexSet& kept : minimal) {
            if (kept.subsetOf(s)) {
                hasSubset = true;
                break;
            }
        }
        if (!hasSubset) minimal.push_back(s);
    }
    return minimal;
}

std::vector<IndexSet> antichainFilterIdx(std::vector<IndexSet> sets) {
    std::sort(sets.begin(), sets.end(), IndexSet::canonicalLess);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<IndexSet> minimal;
    for (const IndexSet& s : sets) {
        bool hasSubset = false;
        for (const IndexSet& kept : minimal) {
            if (kept.subsetOf(s)) {
                hasSubset = true;
                break;
            }
        }
        if (!hasSubset) minimal.push_back(s);
    }
    return minimal;
}

}  // namespace detail

std::vector<FactSet> minimalTransversals(const std::vector<FactSet>& h,
                                         const EnumerationLimits& limits) {
    if (h.empty()) return {FactSet{}};
    for (const FactSet& e : h) {
        if (e.empty()) {
            if (h.size() == 1) throw Error("no transversal exists: the only member is empty");
            throw Error("empty edge in transversal input");
        }
    }
    FactSet universe;
    for (const FactSet& e : h) universe.insert(e.begin(), e.end());
    if (universe.size() > limits.maxFacts) {
        throw LimitError("max_facts", limits.maxFacts, universe.size());
    }
    detail::FactInterner interner(universe);
    std::vector<detail::IndexSet> edges;
    edges.reserve(h.size());
    for (const FactSet& e : h) edges.push_back(interner.intern(e));
    auto minimal = detail::minimalTransversalsIdx(edges, interner.size(), limits.maxResults);
    std::vector<FactSet> out;
    out.reserve(minimal.size());
    for (const auto& s : minimal) out.push_back(interner.extern_(s));
    return out;
}

std::vector<FactSet> minimalModels(const DisjunctiveDatabase& dd,
                                   const EnumerationLimits& limits) {
    return minimalTransversals(dd.disjunctions(), limits);
}

void writeText(const DisjunctiveDatabase& dd, std::ostream& out) {
    for (const Disjunction& d : dd.disjunctions()) {
        bool first = true;
        for (const Fact& f : d) {
            if (!first) out << " v ";
            out << f.toString();
            first = false;
        }
        out << ".\n";
    }
}

std::string toJson(const DisjunctiveDatabase& dd) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Disjunction& d : dd.disjunctions()) {
        nlohmann::json one = nlohmann::json::array();
        for (const Fact& f : d) one.push_back(f.toString());
        arr.push_back(std::move(one));
    }
    return nlohmann::json{{"disjunctions", std::move(arr)}}.dump();
}

DisjunctiveDatabase parseDisjunctiveDatabase(std::istream& in) {
    detail::Scanner sc(in);
    std::vector<Disjunction> disjunctions;
    for (;;) {
        sc.skipWhitespaceAndComments();
        if (sc.eof()) break;
        Disjunction d;
        for (;;) {
            d.insert(detail::parseFactLiteral(sc));
            sc.skipWhitespaceAndComments();
            if (sc.consume('.')) break;
            std::string sep = sc.identifier();
            if (sep != "v") sc.fail("expected 'v' or '.'");
        }
        disjunctions.push_back(std::move(d));
    }
    return DisjunctiveDatabase(std::move(disjunctions));
}

}  // namespace repairforge
