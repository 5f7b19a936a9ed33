#pragma once

#include "repairforge/core_model.hpp"

#include <iosfwd>
#include <vector>

namespace repairforge {

/** A disjunction is identified with its set of distinct facts (S_d). */
using Disjunction = FactSet;

/**
 * A finite set of non-empty disjunctions of distinct facts, with set
 * semantics, kept in canonical (size, lexicographic) order.
 */
class DisjunctiveDatabase {
public:
    DisjunctiveDatabase() = default;
    explicit DisjunctiveDatabase(std::vector<Disjunction> disjunctions);

    const std::vector<Disjunction>& disjunctions() const { return disjunctions_; }
    bool empty() const { return disjunctions_.empty(); }
    std::size_t count() const { return disjunctions_.size(); }

    /** Every fact mentioned by some disjunction. */
    FactSet facts() const;

    bool operator==(const DisjunctiveDatabase& other) const {
        return disjunctions_ == other.disjunctions_;
    }

private:
    std::vector<Disjunction> disjunctions_;
};

/** True iff S_{d1} is a proper subset of S_{d2}. */
bool subsumes(const Disjunction& d1, const Disjunction& d2);

/** Discards all subsumed disjunctions; the result is an antichain. */
DisjunctiveDatabase reduction(const DisjunctiveDatabase& dd);

/** True iff every disjunction of `dd` intersects `m`. */
bool isModel(const FactSet& m, const DisjunctiveDatabase& dd);

/** Total fact-occurrence count, sum over disjunctions of their width. */
std::size_t size(const DisjunctiveDatabase& dd);

struct EnumerationLimits {
    std::size_t maxFacts = 24;
    std::size_t maxResults = 1'000'000;
};

/**
 * The minimal hitting sets of `h`: the inclusion-minimal fact sets
 * intersecting every member. h = {} yields {{}}; an empty member set is
 * rejected unless h = {{}} itself (then no transversal exists and the call
 * is rejected too). Result is an antichain in canonical order.
 */
std::vector<FactSet> minimalTransversals(const std::vector<FactSet>& h,
                                         const EnumerationLimits& limits = {});

/**
 * The minimal models of `dd`, i.e. the minimal transversals of its
 * disjunction hypergraph. Guarded by `limits` (fact universe and output
 * count); throws LimitError when exceeded.
 */
std::vector<FactSet> minimalModels(const DisjunctiveDatabase& dd,
                                   const EnumerationLimits& limits = {});

/** Text format: one disjunction per line, facts joined by " v ". */
void writeText(const DisjunctiveDatabase& dd, std::ostream& out);

/** JSON format: {"disjunctions": [[fact strings]]} in canonical order. */
std::string toJson(const DisjunctiveDatabase& dd);

/** Parses the text format written by writeText. */
DisjunctiveDatabase parseDisjunctiveDatabase(std::istream& in);

}  // namespace repairforge
