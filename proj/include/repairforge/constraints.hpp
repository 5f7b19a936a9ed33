#pragma once

#include "repairforge/core_model.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace repairforge {

/** A term of a constraint atom: a variable or a constant value. */
struct Term {
    static Term variable(std::string name) { return Term{std::move(name), std::nullopt}; }
    static Term constant(Value v) { return Term{{}, std::move(v)}; }

    bool isVariable() const { return !constant_.has_value(); }
    const std::string& var() const { return var_; }
    const Value& value() const { return *constant_; }

    std::string toString() const { return isVariable() ? var_ : constant_->toString(); }

    std::string var_;
    std::optional<Value> constant_;
};

struct ConstraintAtom {
    std::string relation;
    std::vector<Term> terms;

    std::string toString() const;
};

struct Comparison {
    Term left;
    Term right;
    CompareOp op;

    std::string toString() const;
};

/**
 * A universally quantified negated conjunction of relational atoms plus
 * comparison atoms. The atom list is non-empty and every variable appearing
 * in a comparison also appears in some atom (safety).
 */
struct DenialConstraint {
    std::string id;
    std::vector<ConstraintAtom> atoms;
    std::vector<Comparison> comparisons;

    std::string toString() const;
};

struct ConstraintClass {
    enum class Tag { GeneralDenial, FunctionalDependency, Key };

    Tag tag = Tag::GeneralDenial;
    std::string relation;
    std::vector<std::size_t> lhs;  // determining / key attribute positions (0-based)
    std::vector<std::size_t> rhs;  // determined attribute positions (FD only)
};

/**
 * Parses the denial DSL. The schema is needed to expand the `FD` and `KEY`
 * shorthands (their templates depend on the relation arity); plain `:-`
 * constraints parse without it.
 */
std::vector<DenialConstraint> parseConstraints(std::istream& in, const Schema* schema = nullptr);
std::vector<DenialConstraint> parseConstraints(const std::string& text, const Schema* schema = nullptr);

/**
 * Recognizes the functional-dependency and key templates: two atoms over the
 * same relation sharing variables on the determining positions and a single
 * disequality between same-position variables, all other positions free.
 * Invariant under variable renaming and attribute permutation.
 */
ConstraintClass classify(const DenialConstraint& c, const Schema& schema);

/**
 * All minimal violation instantiations of `c` in `db`: for every substitution
 * grounding the atoms to facts of `db` under which all comparisons hold, the
 * set of facts used. Duplicate sets collapse. Result in canonical
 * (size, lexicographic) order.
 */
std::vector<FactSet> findViolations(const DenialConstraint& c, const Database& db);

/** True iff `db` satisfies `c`, i.e. there is no violation instantiation. */
bool satisfies(const Database& db, const DenialConstraint& c);

}  // namespace repairforge
