#pragma once

#include "repairforge/errors.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace repairforge {

/**
 * A constant of the relational model: a 64-bit integer, a normalized
 * rational, or an uninterpreted symbol. Rationals always carry a positive
 * denominator and are in lowest terms; a rational with denominator 1 is
 * canonicalized to an integer, so value equality is structural equality.
 */
class Value {
public:
    enum class Kind { Symbol, Integer, Rational };

    static Value integer(std::int64_t v);
    static Value rational(std::int64_t num, std::int64_t den);
    static Value symbol(std::string name);

    Kind kind() const { return kind_; }
    bool isNumeric() const { return kind_ != Kind::Symbol; }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }
    const std::string& name() const { return sym_; }

    bool operator==(const Value& other) const;

    /** Total order used for deterministic output: symbols (by name) sort
     *  before numerics (by value). Not the semantic comparison. */
    bool operator<(const Value& other) const;

    std::string toString() const;

private:
    Value() = default;

    Kind kind_ = Kind::Integer;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::string sym_;
};

enum class CompareOp { Eq, Neq, Lt, Leq, Gt, Geq };

const char* toString(CompareOp op);

/**
 * Semantic comparison of two values. Equality across a symbol and a numeric
 * value is false (and inequality true); order comparisons require both sides
 * numeric and throw TypeError otherwise.
 */
bool compareValues(const Value& a, const Value& b, CompareOp op);

/** A ground relational atom. Totally ordered (relation name, then args). */
struct Fact {
    std::string relation;
    std::vector<Value> args;

    bool operator==(const Fact& other) const;
    bool operator<(const Fact& other) const;

    std::string toString() const;
};

using FactSet = std::set<Fact>;

using Schema = std::map<std::string, std::size_t>;

/** A finite set of facts together with the relation arities. */
class Database {
public:
    Database() = default;

    /** Inserts a fact, inferring or checking its relation's arity.
     *  Duplicates collapse silently. Throws Error on arity mismatch. */
    void insert(Fact fact);

    /** Declares a relation arity ahead of any fact (schema header). */
    void declare(const std::string& relation, std::size_t arity);

    const FactSet& facts() const { return facts_; }
    const Schema& schema() const { return schema_; }
    std::size_t size() const { return facts_.size(); }
    bool contains(const Fact& f) const { return facts_.count(f) != 0; }

    bool operator==(const Database& other) const { return facts_ == other.facts_; }

private:
    FactSet facts_;
    Schema schema_;
};

/** Parses the facts file format. See the README for the grammar. */
Database parseFacts(std::istream& in);
Database parseFacts(const std::string& text);

/** Writes a database in the facts file format, in canonical fact order.
 *  Round-trips through parseFacts. */
void serialize(const Database& db, std::ostream& out);

/** Canonical (size, lexicographic) order on fact sets. */
bool factSetLess(const FactSet& a, const FactSet& b);

}  // namespace repairforge
