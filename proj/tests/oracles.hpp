// Shared test helpers: deliberately naive, definition-level oracles plus
// seeded random instance generators. Everything here is independent of the
// library's optimized enumeration paths.
#pragma once

#include "repairforge/constraints.hpp"
#include "repairforge/core_model.hpp"
#include "repairforge/disjunctive.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracles {

using repairforge::CompareOp;
using repairforge::Database;
using repairforge::DenialConstraint;
using repairforge::DisjunctiveDatabase;
using repairforge::Fact;
using repairforge::FactSet;
using repairforge::Value;

// ---------------------------------------------------------------------------
// Naive constraint evaluation: try every tuple of facts against the atoms.

inline bool naiveUnify(const repairforge::ConstraintAtom& atom, const Fact& fact,
                       std::map<std::string, Value>& binding) {
    if (atom.relation != fact.relation || atom.terms.size() != fact.args.size()) return false;
    for (std::size_t i = 0; i < atom.terms.size(); ++i) {
        const auto& term = atom.terms[i];
        if (term.isVariable()) {
            auto [it, inserted] = binding.emplace(term.var(), fact.args[i]);
            if (!inserted && !(it->second == fact.args[i])) return false;
        } else if (!(term.value() == fact.args[i])) {
            return false;
        }
    }
    return true;
}

inline std::set<FactSet> naiveViolations(const DenialConstraint& c, const Database& db) {
    std::vector<Fact> facts(db.facts().begin(), db.facts().end());
    std::set<FactSet> result;
    std::vector<std::size_t> pick(c.atoms.size(), 0);
    if (facts.empty()) return result;
    for (;;) {
        std::map<std::string, Value> binding;
        bool ok = true;
        for (std::size_t i = 0; ok && i < c.atoms.size(); ++i) {
            ok = naiveUnify(c.atoms[i], facts[pick[i]], binding);
        }
        if (ok) {
            for (const auto& cmp : c.comparisons) {
                Value left = cmp.left.isVariable() ? binding.at(cmp.left.var()) : cmp.left.value();
                Value right =
                        cmp.right.isVariable() ? binding.at(cmp.right.var()) : cmp.right.value();
                if (!repairforge::compareValues(left, right, cmp.op)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            FactSet used;
            for (std::size_t i = 0; i < c.atoms.size(); ++i) used.insert(facts[pick[i]]);
            result.insert(std::move(used));
        }
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == facts.size()) pick[pos++] = 0;
        if (pos == pick.size()) break;
    }
    return result;
}

inline bool naiveSatisfies(const Database& db, const std::vector<DenialConstraint>& cs) {
    for (const auto& c : cs) {
        if (!naiveViolations(c, db).empty()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Naive 2^n sweeps over explicit fact universes.

inline std::vector<FactSet> allSubsets(const FactSet& universe) {
    std::vector<Fact> facts(universe.begin(), universe.end());
    std::vector<FactSet> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << facts.size()); ++mask) {
        FactSet s;
        for (std::size_t i = 0; i < facts.size(); ++i) {
            if (mask & (std::uint32_t(1) << i)) s.insert(facts[i]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<FactSet> minimalAmong(std::vector<FactSet> candidates) {
    std::vector<FactSet> minimal;
    for (const FactSet& a : candidates) {
        bool isMinimal = true;
        for (const FactSet& b : candidates) {
            if (b.size() < a.size() &&
                std::includes(a.begin(), a.end(), b.begin(), b.end())) {
                isMinimal = false;
                break;
            }
        }
        if (isMinimal) minimal.push_back(a);
    }
    std::sort(minimal.begin(), minimal.end(), repairforge::factSetLess);
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    return minimal;
}

inline std::vector<FactSet> naiveMinimalModels(const DisjunctiveDatabase& dd) {
    std::vector<FactSet> models;
    for (FactSet& s : allSubsets(dd.facts())) {
        if (repairforge::isModel(s, dd)) models.push_back(std::move(s));
    }
    return minimalAmong(std::move(models));
}

inline std::vector<FactSet> naiveMinimalTransversals(const std::vector<FactSet>& h) {
    FactSet universe;
    for (const FactSet& e : h) universe.insert(e.begin(), e.end());
    std::vector<FactSet> hitting;
    for (FactSet& s : allSubsets(universe)) {
        bool hits = true;
        for (const FactSet& e : h) {
            if (std::none_of(e.begin(), e.end(),
                             [&](const Fact& f) { return s.count(f) != 0; })) {
                hits = false;
                break;
            }
        }
        if (hits) hitting.push_back(std::move(s));
    }
    return minimalAmong(std::move(hitting));
}

// ---------------------------------------------------------------------------
// Seeded random generators.

struct RandomInstance {
    Database db;
    std::vector<DenialConstraint> constraints;
};

inline Fact randomFact(std::mt19937_64& rng) {
    static const char* relations[] = {"p", "q", "r"};
    static const std::size_t arities[] = {1, 2, 3};
    std::size_t r = rng() % 3;
    Fact f;
    f.relation = relations[r];
    for (std::size_t i = 0; i < arities[r]; ++i) {
        f.args.push_back(Value::integer(static_cast<std::int64_t>(rng() % 4)));
    }
    return f;
}

/** A random database of at most maxFacts facts over p/1, q/2, r/3 with small
 *  integer constants, plus 1..3 random safe denial constraints. */
inline RandomInstance randomInstance(std::mt19937_64& rng, std::size_t maxFacts = 12) {
    RandomInstance out;
    std::size_t nFacts = 1 + rng() % maxFacts;
    for (std::size_t i = 0; i < nFacts; ++i) out.db.insert(randomFact(rng));

    static const char* ops[] = {"=", "!=", "<", "<=", ">", ">="};
    std::size_t nConstraints = 1 + rng() % 3;
    std::string dsl;
    for (std::size_t ci = 0; ci < nConstraints; ++ci) {
        std::size_t nAtoms = 1 + rng() % 3;
        std::vector<std::string> vars;
        std::string line = ":- ";
        for (std::size_t ai = 0; ai < nAtoms; ++ai) {
            static const char* relations[] = {"p", "q", "r"};
            static const std::size_t arities[] = {1, 2, 3};
            std::size_t r = rng() % 3;
            if (ai) line += ", ";
            line += relations[r];
            line += "(";
            for (std::size_t k = 0; k < arities[r]; ++k) {
                if (k) line += ",";
                if (rng() % 5 == 0) {
                    line += std::to_string(rng() % 4);  // constant position
                } else if (!vars.empty() && rng() % 2 == 0) {
                    line += vars[rng() % vars.size()];  // reuse: forces joins
                } else {
                    std::string v = "V" + std::to_string(vars.size());
                    vars.push_back(v);
                    line += v;
                }
            }
            line += ")";
        }
        std::size_t nCmps = rng() % 2;
        for (std::size_t k = 0; k < nCmps && !vars.empty(); ++k) {
            line += ", ";
            line += vars[rng() % vars.size()];
            line += " ";
            line += ops[rng() % 6];
            line += " ";
            if (rng() % 2 == 0) {
                line += vars[rng() % vars.size()];
            } else {
                line += std::to_string(rng() % 4);
            }
        }
        line += ".\n";
        dsl += line;
    }
    out.constraints = repairforge::parseConstraints(dsl, &out.db.schema());
    return out;
}

/** A random antichain of 1..maxSets non-empty sets over at most maxFacts
 *  distinct facts (only the inclusion-minimal generated sets are kept). */
inline std::vector<FactSet> randomAntichain(std::mt19937_64& rng, std::size_t maxSets = 10,
                                            std::size_t maxFacts = 8) {
    std::vector<Fact> universe;
    for (std::size_t i = 0; i < maxFacts; ++i) {
        universe.push_back(Fact{"f", {Value::integer(static_cast<std::int64_t>(i))}});
    }
    std::vector<FactSet> sets;
    std::size_t n = 1 + rng() % maxSets;
    for (std::size_t i = 0; i < n; ++i) {
        FactSet s;
        std::size_t width = 1 + rng() % 4;
        for (std::size_t k = 0; k < width; ++k) s.insert(universe[rng() % universe.size()]);
        sets.push_back(std::move(s));
    }
    return minimalAmong(std::move(sets));
}

/** A random disjunctive database over at most maxFacts facts. */
inline DisjunctiveDatabase randomDisjunctiveDatabase(std::mt19937_64& rng,
                                                     std::size_t maxFacts = 10) {
    std::vector<Fact> universe;
    for (std::size_t i = 0; i < maxFacts; ++i) {
        universe.push_back(Fact{"f", {Value::integer(static_cast<std::int64_t>(i))}});
    }
    std::vector<repairforge::Disjunction> ds;
    std::size_t n = 1 + rng() % 8;
    for (std::size_t i = 0; i < n; ++i) {
        repairforge::Disjunction d;
        std::size_t width = 1 + rng() % 4;
        for (std::size_t k = 0; k < width; ++k) d.insert(universe[rng() % universe.size()]);
        ds.push_back(std::move(d));
    }
    return DisjunctiveDatabase(std::move(ds));
}

}  // namespace oracles
