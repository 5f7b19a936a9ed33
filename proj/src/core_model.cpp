#include "repairforge/core_model.hpp"

#include "scanner.hpp"

#include <cctype>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace repairforge {

namespace {

__int128 cross(const Value& a, const Value& b) {
    // sign of a - b over the rationals
    return static_cast<__int128>(a.numerator()) * b.denominator() -
           static_cast<__int128>(b.numerator()) * a.denominator();
}

}  // namespace

Value Value::integer(std::int64_t v) {
    Value r;
    r.kind_ = Kind::Integer;
    r.num_ = v;
    r.den_ = 1;
    return r;
}

Value Value::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (den == 1) return integer(num);
    Value r;
    r.kind_ = Kind::Rational;
    r.num_ = num;
    r.den_ = den;
    return r;
}

Value Value::symbol(std::string name) {
    if (name.empty()) throw Error("empty symbol name");
    Value r;
    r.kind_ = Kind::Symbol;
    r.sym_ = std::move(name);
    return r;
}

bool Value::operator==(const Value& other) const {
    if (kind_ != other.kind_) return false;
    if (kind_ == Kind::Symbol) return sym_ == other.sym_;
    return num_ == other.num_ && den_ == other.den_;
}

bool Value::operator<(const Value& other) const {
    bool aSym = kind_ == Kind::Symbol;
    bool bSym = other.kind_ == Kind::Symbol;
    if (aSym != bSym) return aSym;  // symbols sort first
    if (aSym) return sym_ < other.sym_;
    __int128 d = cross(*this, other);
    if (d != 0) return d < 0;
    // equal rational value implies equal normalized representation
    return false;
}

std::string Value::toString() const {
    switch (kind_) {
        case Kind::Integer:
            return std::to_string(num_);
        case Kind::Rational:
            return std::to_string(num_) + "/" + std::to_string(den_);
        case Kind::Symbol: {
            bool bare = std::islower(static_cast<unsigned char>(sym_[0]));
            for (char c : sym_) {
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') bare = false;
            }
            if (bare) return sym_;
            std::string quoted = "'";
            quoted += sym_;
            quoted += "'";
            return quoted;
        }
    }
    return {};
}

const char* toString(CompareOp op) {
    switch (op) {
        case CompareOp::Eq: return "=";
        case CompareOp::Neq: return "!=";
        case CompareOp::Lt: return "<";
        case CompareOp::Leq: return "<=";
        case CompareOp::Gt: return ">";
        case CompareOp::Geq: return ">=";
    }
    return "?";
}

bool compareValues(const Value& a, const Value& b, CompareOp op) {
    if (op == CompareOp::Eq || op == CompareOp::Neq) {
        bool eq;
        if (a.isNumeric() != b.isNumeric()) {
            eq = false;
        } else if (!a.isNumeric()) {
            eq = a.name() == b.name();
        } else {
            eq = cross(a, b) == 0;
        }
        return op == CompareOp::Eq ? eq : !eq;
    }
    if (!a.isNumeric() || !b.isNumeric()) {
        throw TypeError(std::string("cannot order symbol with '") + toString(op) + "'");
    }
    __int128 d = cross(a, b);
    switch (op) {
        case CompareOp::Lt: return d < 0;
        case CompareOp::Leq: return d <= 0;
        case CompareOp::Gt: return d > 0;
        case CompareOp::Geq: return d >= 0;
        default: return false;
    }
}

bool Fact::operator==(const Fact& other) const {
    return relation == other.relation && args == other.args;
}

bool Fact::operator<(const Fact& other) const {
    if (relation != other.relation) return relation < other.relation;
    return std::lexicographical_compare(args.begin(), args.end(),
                                        other.args.begin(), other.args.end());
}

std::string Fact::toString() const {
    std::string s = relation;
    s += "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) s += ",";
        s += args[i].toString();
    }
    s += ")";
    return s;
}

void Database::insert(Fact fact) {
    auto it = schema_.find(fact.relation);
    if (it == schema_.end()) {
        schema_.emplace(fact.relation, fact.args.size());
    } else if (it->second != fact.args.size()) {
        throw Error("arity mismatch for relation '" + fact.relation + "': declared " +
                    std::to_string(it->second) + ", got " + std::to_string(fact.args.size()));
    }
    facts_.insert(std::move(fact));
}

void Database::declare(const std::string& relation, std::size_t arity) {
    auto it = schema_.find(relation);
    if (it == schema_.end()) {
        schema_.emplace(relation, arity);
    } else if (it->second != arity) {
        throw Error("arity mismatch for relation '" + relation + "': declared " +
                    std::to_string(it->second) + ", re-declared " + std::to_string(arity));
    }
}

Database parseFacts(std::istream& in) {
    detail::Scanner sc(in);
    Database db;
    for (;;) {
        sc.skipWhitespaceAndComments();
        if (sc.eof()) break;
        if (sc.peek() == '#') {
            sc.get();
            std::string directive = sc.identifier();
            if (directive != "relation") sc.fail("unknown directive '#" + directive + "'");
            sc.skipWhitespaceAndComments();
            std::string rel = sc.identifier();
            sc.expect('/');
            std::int64_t arity = sc.integerLiteral();
            if (arity < 0) sc.fail("negative arity");
            sc.skipWhitespaceAndComments();
            sc.expect('.');
            try {
                db.declare(rel, static_cast<std::size_t>(arity));
            } catch (const Error& e) {
                sc.fail(e.what());
            }
            continue;
        }
        Fact fact;
        fact.relation = sc.identifier();
        sc.skipWhitespaceAndComments();
        sc.expect('(');
        for (;;) {
            fact.args.push_back(sc.valueLiteral());
            sc.skipWhitespaceAndComments();
            if (sc.consume(',')) continue;
            sc.expect(')');
            break;
        }
        sc.skipWhitespaceAndComments();
        sc.expect('.');
        try {
            db.insert(std::move(fact));
        } catch (const Error& e) {
            sc.fail(e.what());
        }
    }
    return db;
}

Database parseFacts(const std::string& text) {
    std::istringstream in(text);
    return parseFacts(in);
}

void serialize(const Database& db, std::ostream& out) {
    for (const auto& [rel, arity] : db.schema()) {
        out << "#relation " << rel << "/" << arity << ".\n";
    }
    for (const Fact& f : db.facts()) {
        out << f.toString() << ".\n";
    }
}

bool factSetLess(const FactSet& a, const FactSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace repairforge
