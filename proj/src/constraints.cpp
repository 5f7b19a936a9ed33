#include "repairforge/constraints.hpp"

#include "scanner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace repairforge {

std::string ConstraintAtom::toString() const {
    std::string s = relation;
    s += "(";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) s += ",";
        s += terms[i].toString();
    }
    s += ")";
    return s;
}

std::string Comparison::toString() const {
    return left.toString() + " " + repairforge::toString(op) + " " + right.toString();
}

std::string DenialConstraint::toString() const {
    std::string s = ":- ";
    bool first = true;
    for (const auto& a : atoms) {
        if (!first) s += ", ";
        s += a.toString();
        first = false;
    }
    for (const auto& cmp : comparisons) {
        s += ", ";
        s += cmp.toString();
    }
    s += ".";
    return s;
}

namespace {

void checkSafety(const DenialConstraint& c, detail::Scanner* sc) {
    auto fail = [&](const std::string& msg) {
        if (sc) sc->fail(msg);
        throw Error(msg);
    };
    if (c.atoms.empty()) fail("denial constraint must have at least one relational atom");
    std::set<std::string> bound;
    for (const auto& a : c.atoms) {
        for (const auto& t : a.terms) {
            if (t.isVariable()) bound.insert(t.var());
        }
    }
    for (const auto& cmp : c.comparisons) {
        for (const Term* t : {&cmp.left, &cmp.right}) {
            if (t->isVariable() && !bound.count(t->var())) {
                fail("unsafe variable '" + t->var() + "' in comparison");
            }
        }
    }
}

Term parseTerm(detail::Scanner& sc) {
    sc.skipWhitespaceAndComments();
    if (sc.eof()) sc.fail("expected term");
    char c = sc.peek();
    if (std::isupper(static_cast<unsigned char>(c))) {
        return Term::variable(sc.identifier());
    }
    return Term::constant(sc.valueLiteral());
}

CompareOp parseOp(detail::Scanner& sc) {
    sc.skipWhitespaceAndComments();
    if (sc.consume('=')) return CompareOp::Eq;
    if (sc.consume('!')) {
        sc.expect('=');
        return CompareOp::Neq;
    }
    if (sc.consume('<')) return sc.consume('=') ? CompareOp::Leq : CompareOp::Lt;
    if (sc.consume('>')) return sc.consume('=') ? CompareOp::Geq : CompareOp::Gt;
    sc.fail("expected comparison operator");
}

// positions are 1-based in the DSL
std::vector<std::size_t> parsePositions(detail::Scanner& sc, std::size_t arity) {
    std::vector<std::size_t> positions;
    for (;;) {
        sc.skipWhitespaceAndComments();
        if (sc.eof() || !std::isdigit(static_cast<unsigned char>(sc.peek()))) break;
        std::int64_t p = sc.integerLiteral();
        if (p < 1 || static_cast<std::size_t>(p) > arity) {
            sc.fail("attribute position " + std::to_string(p) + " out of range 1.." +
                    std::to_string(arity));
        }
        positions.push_back(static_cast<std::size_t>(p - 1));
    }
    if (positions.empty()) sc.fail("expected attribute positions");
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    return positions;
}

// One denial constraint per determined position, following the two-atom
// disequality template.
std::vector<DenialConstraint> expandFd(const std::string& id, const std::string& rel,
                                       std::size_t arity, const std::vector<std::size_t>& lhs,
                                       const std::vector<std::size_t>& rhs) {
    std::vector<DenialConstraint> out;
    for (std::size_t det : rhs) {
        DenialConstraint c;
        c.id = id + ":" + std::to_string(det + 1);
        ConstraintAtom a1{rel, {}};
        ConstraintAtom a2{rel, {}};
        for (std::size_t p = 0; p < arity; ++p) {
            std::string suffix = std::to_string(p + 1);
            if (std::binary_search(lhs.begin(), lhs.end(), p)) {
                a1.terms.push_back(Term::variable("X" + suffix));
                a2.terms.push_back(Term::variable("X" + suffix));
            } else if (p == det) {
                a1.terms.push_back(Term::variable("Y" + suffix));
                a2.terms.push_back(Term::variable("Z" + suffix));
            } else {
                a1.terms.push_back(Term::variable("U" + suffix));
                a2.terms.push_back(Term::variable("V" + suffix));
            }
        }
        c.comparisons.push_back(Comparison{Term::variable("Y" + std::to_string(det + 1)),
                                           Term::variable("Z" + std::to_string(det + 1)),
                                           CompareOp::Neq});
        c.atoms.push_back(std::move(a1));
        c.atoms.push_back(std::move(a2));
        out.push_back(std::move(c));
    }
    return out;
}

std::size_t lookupArity(detail::Scanner& sc, const Schema* schema, const std::string& rel) {
    if (!schema) sc.fail("shorthand for relation '" + rel + "' requires a schema");
    auto it = schema->find(rel);
    if (it == schema->end()) sc.fail("unknown relation '" + rel + "' in shorthand");
    return it->second;
}

}  // namespace

std::vector<DenialConstraint> parseConstraints(std::istream& in, const Schema* schema) {
    detail::Scanner sc(in);
    std::vector<DenialConstraint> out;
    std::size_t ordinal = 0;
    for (;;) {
        sc.skipWhitespaceAndComments();
        if (sc.eof()) break;
        ++ordinal;
        if (sc.peek() == ':') {
            sc.get();
            sc.expect('-');
            DenialConstraint c;
            c.id = "c" + std::to_string(ordinal);
            for (;;) {
                sc.skipWhitespaceAndComments();
                // a lowercase identifier followed by '(' opens an atom
                std::size_t mark = sc.pos;
                std::size_t markLine = sc.line, markCol = sc.col;
                bool isAtom = false;
                if (!sc.eof() && std::islower(static_cast<unsigned char>(sc.peek()))) {
                    std::string ident = sc.identifier();
                    sc.skipWhitespaceAndComments();
                    if (!sc.eof() && sc.peek() == '(') {
                        isAtom = true;
                        sc.get();
                        ConstraintAtom atom{ident, {}};
                        for (;;) {
                            atom.terms.push_back(parseTerm(sc));
                            sc.skipWhitespaceAndComments();
                            if (sc.consume(',')) continue;
                            sc.expect(')');
                            break;
                        }
                        if (!c.comparisons.empty()) {
                            sc.fail("relational atoms must precede comparisons");
                        }
                        c.atoms.push_back(std::move(atom));
                    }
                }
                if (!isAtom) {
                    sc.pos = mark;
                    sc.line = markLine;
                    sc.col = markCol;
                    Comparison cmp;
                    cmp.left = parseTerm(sc);
                    cmp.op = parseOp(sc);
                    cmp.right = parseTerm(sc);
                    c.comparisons.push_back(std::move(cmp));
                }
                sc.skipWhitespaceAndComments();
                if (sc.consume(',')) continue;
                sc.expect('.');
                break;
            }
            checkSafety(c, &sc);
            out.push_back(std::move(c));
            continue;
        }
        std::string keyword = sc.identifier();
        if (keyword == "FD") {
            sc.skipWhitespaceAndComments();
            std::string rel = sc.identifier();
            sc.skipWhitespaceAndComments();
            sc.expect(':');
            std::size_t arity = lookupArity(sc, schema, rel);
            auto lhs = parsePositions(sc, arity);
            sc.skipWhitespaceAndComments();
            sc.expect('-');
            sc.expect('>');
            auto rhs = parsePositions(sc, arity);
            sc.skipWhitespaceAndComments();
            sc.expect('.');
            for (std::size_t p : rhs) {
                if (std::binary_search(lhs.begin(), lhs.end(), p)) {
                    sc.fail("position " + std::to_string(p + 1) + " on both sides of FD");
                }
            }
            for (auto& c : expandFd("fd" + std::to_string(ordinal) + ":" + rel, rel, arity, lhs, rhs)) {
                out.push_back(std::move(c));
            }
        } else if (keyword == "KEY") {
            sc.skipWhitespaceAndComments();
            std::string rel = sc.identifier();
            sc.skipWhitespaceAndComments();
            sc.expect(':');
            std::size_t arity = lookupArity(sc, schema, rel);
            auto key = parsePositions(sc, arity);
            sc.skipWhitespaceAndComments();
            sc.expect('.');
            std::vector<std::size_t> rest;
            for (std::size_t p = 0; p < arity; ++p) {
                if (!std::binary_search(key.begin(), key.end(), p)) rest.push_back(p);
            }
            if (rest.empty()) sc.fail("key covers every attribute of '" + rel + "'");
            for (auto& c : expandFd("key" + std::to_string(ordinal) + ":" + rel, rel, arity, key, rest)) {
                out.push_back(std::move(c));
            }
        } else {
            sc.fail("expected ':-', 'FD' or 'KEY'");
        }
    }
    return out;
}

std::vector<DenialConstraint> parseConstraints(const std::string& text, const Schema* schema) {
    std::istringstream in(text);
    return parseConstraints(in, schema);
}

ConstraintClass classify(const DenialConstraint& c, const Schema& schema) {
    ConstraintClass general;
    if (c.atoms.size() != 2 || c.comparisons.size() != 1) return general;
    const ConstraintAtom& a1 = c.atoms[0];
    const ConstraintAtom& a2 = c.atoms[1];
    if (a1.relation != a2.relation) return general;
    auto it = schema.find(a1.relation);
    std::size_t arity = it != schema.end() ? it->second : a1.terms.size();
    if (a1.terms.size() != arity || a2.terms.size() != arity) return general;

    for (const auto& a : {a1, a2}) {
        std::set<std::string> seen;
        for (const auto& t : a.terms) {
            if (!t.isVariable()) return general;
            if (!seen.insert(t.var()).second) return general;  // repeated variable
        }
    }
    // cross-atom variable sharing only at equal positions
    std::vector<std::size_t> shared;
    for (std::size_t p = 0; p < arity; ++p) {
        for (std::size_t q = 0; q < arity; ++q) {
            if (a1.terms[p].var() == a2.terms[q].var() && p != q) return general;
        }
        if (a1.terms[p].var() == a2.terms[p].var()) shared.push_back(p);
    }

    const Comparison& cmp = c.comparisons[0];
    if (cmp.op != CompareOp::Neq) return general;
    if (!cmp.left.isVariable() || !cmp.right.isVariable()) return general;
    std::size_t det = arity;
    for (std::size_t p = 0; p < arity; ++p) {
        if (std::binary_search(shared.begin(), shared.end(), p)) continue;
        bool straight = cmp.left.var() == a1.terms[p].var() && cmp.right.var() == a2.terms[p].var();
        bool flipped = cmp.left.var() == a2.terms[p].var() && cmp.right.var() == a1.terms[p].var();
        if (straight || flipped) {
            det = p;
            break;
        }
    }
    if (det == arity) return general;

    ConstraintClass result;
    result.relation = a1.relation;
    result.lhs = shared;
    if (shared.size() + 1 == arity) {
        result.tag = ConstraintClass::Tag::Key;
    } else {
        result.tag = ConstraintClass::Tag::FunctionalDependency;
        result.rhs = {det};
    }
    return result;
}

namespace {

using Substitution = std::map<std::string, Value>;

const Value* resolve(const Term& t, const Substitution& subst) {
    if (!t.isVariable()) return &t.value();
    auto it = subst.find(t.var());
    return it == subst.end() ? nullptr : &it->second;
}

bool comparisonHolds(const Comparison& cmp, const Substitution& subst, bool& allBound) {
    const Value* l = resolve(cmp.left, subst);
    const Value* r = resolve(cmp.right, subst);
    if (!l || !r) {
        allBound = false;
        return true;  // defer until bound
    }
    allBound = true;
    return compareValues(*l, *r, cmp.op);
}

struct ViolationSearch {
    const DenialConstraint& c;
    std::map<std::string, std::vector<const Fact*>> byRelation;
    Substitution subst;
    std::vector<const Fact*> chosen;
    std::set<FactSet> found;
    bool stopAtFirst = false;
    bool any = false;

    ViolationSearch(const DenialConstraint& c, const Database& db) : c(c) {
        for (const Fact& f : db.facts()) byRelation[f.relation].push_back(&f);
    }

    bool unify(const ConstraintAtom& atom, const Fact& f, std::vector<std::string>& newlyBound) {
        if (f.args.size() != atom.terms.size()) return false;
        for (std::size_t i = 0; i < atom.terms.size(); ++i) {
            const Term& t = atom.terms[i];
            if (!t.isVariable()) {
                if (!(t.value() == f.args[i])) return false;
                continue;
            }
            auto it = subst.find(t.var());
            if (it != subst.end()) {
                if (!(it->second == f.args[i])) return false;
            } else {
                subst.emplace(t.var(), f.args[i]);
                newlyBound.push_back(t.var());
            }
        }
        return true;
    }

    // returns false to abort the whole search (first hit found)
    bool search(std::size_t atomIndex) {
        if (atomIndex == c.atoms.size()) {
            for (const auto& cmp : c.comparisons) {
                bool bound = false;
                if (!comparisonHolds(cmp, subst, bound)) return true;
            }
            FactSet edge;
            for (const Fact* f : chosen) edge.insert(*f);
            found.insert(std::move(edge));
            any = true;
            return !stopAtFirst;
        }
        const ConstraintAtom& atom = c.atoms[atomIndex];
        auto it = byRelation.find(atom.relation);
        if (it == byRelation.end()) return true;
        for (const Fact* f : it->second) {
            std::vector<std::string> newlyBound;
            if (unify(atom, *f, newlyBound)) {
                bool viable = true;
                for (const auto& cmp : c.comparisons) {
                    bool bound = false;
                    if (!comparisonHolds(cmp, subst, bound)) {
                        viable = false;
                        break;
                    }
                }
                chosen.push_back(f);
                bool keepGoing = !viable || search(atomIndex + 1);
                chosen.pop_back();
                for (const auto& v : newlyBound) subst.erase(v);
                if (!keepGoing) return false;
            } else {
                for (const auto& v : newlyBound) subst.erase(v);
            }
        }
        return true;
    }
};

}  // namespace

std::vector<FactSet> findViolations(const DenialConstraint& c, const Database& db) {
    ViolationSearch vs(c, db);
    vs.search(0);
    std::vector<FactSet> out(vs.found.begin(), vs.found.end());
    std::sort(out.begin(), out.end(), factSetLess);
    return out;
}

bool satisfies(const Database& db, const DenialConstraint& c) {
    ViolationSearch vs(c, db);
    vs.stopAtFirst = true;
    vs.search(0);
    return !vs.any;
}

}  // namespace repairforge
