#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repairforge/core_model.hpp"
#include "repairforge/errors.hpp"

#include <random>
#include <sstream>

using namespace repairforge;

TEST_CASE("values normalize and compare structurally") {
    CHECK(Value::rational(2, 4) == Value::rational(1, 2));
    CHECK(Value::rational(4, 2) == Value::integer(2));
    CHECK(Value::rational(1, -2) == Value::rational(-1, 2));
    CHECK(Value::rational(-3, -6) == Value::rational(1, 2));
    CHECK(Value::rational(6, 3).kind() == Value::Kind::Integer);
    CHECK_THROWS_AS(Value::rational(1, 0), Error);
    CHECK_THROWS_AS(Value::symbol(""), Error);
}

TEST_CASE("compare_values semantics") {
    CHECK(compareValues(Value::integer(50), Value::integer(100), CompareOp::Neq));
    CHECK(compareValues(Value::rational(1, 2), Value::integer(1), CompareOp::Lt));
    CHECK(compareValues(Value::rational(1, 2), Value::rational(2, 4), CompareOp::Eq));
    CHECK(compareValues(Value::integer(3), Value::rational(7, 2), CompareOp::Leq));
    CHECK(compareValues(Value::symbol("cs"), Value::symbol("cs"), CompareOp::Eq));
    CHECK_FALSE(compareValues(Value::symbol("cs"), Value::symbol("ee"), CompareOp::Eq));

    SUBCASE("reflexivity of = for every kind") {
        for (const Value& v : {Value::integer(-7), Value::rational(3, 7), Value::symbol("x")}) {
            CHECK(compareValues(v, v, CompareOp::Eq));
            CHECK_FALSE(compareValues(v, v, CompareOp::Neq));
        }
    }
    SUBCASE("cross-kind equality is false, inequality true") {
        CHECK_FALSE(compareValues(Value::symbol("a"), Value::integer(1), CompareOp::Eq));
        CHECK(compareValues(Value::symbol("a"), Value::integer(1), CompareOp::Neq));
    }
    SUBCASE("ordering a symbol is a type error") {
        CHECK_THROWS_AS(compareValues(Value::symbol("a"), Value::integer(1), CompareOp::Lt),
                        TypeError);
        CHECK_THROWS_AS(compareValues(Value::integer(1), Value::symbol("a"), CompareOp::Geq),
                        TypeError);
    }
}

TEST_CASE("parse_facts basics") {
    SUBCASE("two employee facts") {
        Database db = parseFacts("employee(john,50,cs).\nemployee(john,100,cs).");
        CHECK(db.size() == 2);
        CHECK(db.schema().at("employee") == 3);
    }
    SUBCASE("empty input") {
        Database db = parseFacts("");
        CHECK(db.size() == 0);
    }
    SUBCASE("duplicates collapse") {
        Database db = parseFacts("p(1,2).\np(1,2).");
        CHECK(db.size() == 1);
    }
    SUBCASE("comments, rationals, quoted symbols, negatives, headers") {
        Database db = parseFacts("% header comment\n"
                                 "#relation q/2.\n"
                                 "q(1/2, 'Hello World'). % trailing\n"
                                 "q(-3, abc_1).\n");
        CHECK(db.size() == 2);
        CHECK(db.contains(Fact{"q", {Value::rational(1, 2), Value::symbol("Hello World")}}));
        CHECK(db.contains(Fact{"q", {Value::integer(-3), Value::symbol("abc_1")}}));
    }
    SUBCASE("arity mismatch is a hard error") {
        CHECK_THROWS_AS(parseFacts("p(1).\np(1,2)."), ParseError);
        CHECK_THROWS_AS(parseFacts("#relation p/2.\np(1)."), ParseError);
    }
    SUBCASE("syntax errors carry a position") {
        try {
            parseFacts("p(1)\nq(2).");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line >= 1);
            CHECK(e.column >= 1);
        }
    }
}

TEST_CASE("serialize round-trips through parse_facts") {
    Database db = parseFacts("#relation s/1.\n"
                             "employee(john,50,cs).\n"
                             "employee(john,100,cs).\n"
                             "q(1/2,'A b').\n"
                             "q(-7,x).\n");
    std::ostringstream out;
    serialize(db, out);
    Database again = parseFacts(out.str());
    CHECK(again == db);
    CHECK(again.schema() == db.schema());

    std::ostringstream out2;
    serialize(again, out2);
    CHECK(out.str() == out2.str());
}

TEST_CASE("fact order is a strict total order") {
    std::mt19937_64 rng(20260823);
    std::vector<Fact> facts;
    for (int i = 0; i < 60; ++i) {
        Fact f;
        f.relation = (rng() % 2) ? "p" : "q";
        std::size_t arity = 1 + rng() % 2;
        for (std::size_t k = 0; k < arity; ++k) {
            switch (rng() % 3) {
                case 0: f.args.push_back(Value::integer(static_cast<std::int64_t>(rng() % 5))); break;
                case 1: f.args.push_back(Value::rational(1 + static_cast<std::int64_t>(rng() % 4), 3)); break;
                default: f.args.push_back(Value::symbol(std::string(1, char('a' + rng() % 3))));
            }
        }
        facts.push_back(std::move(f));
    }
    // `p(x)` and `p(x,y)` coexist here; the order does not consult the schema
    for (const Fact& a : facts) {
        CHECK_FALSE(a < a);  // irreflexive
        for (const Fact& b : facts) {
            if (a < b) CHECK_FALSE(b < a);                       // asymmetric
            CHECK((a < b || b < a || a == b));                    // total
            for (const Fact& c : facts) {
                if (a < b && b < c) CHECK(a < c);                 // transitive
            }
        }
    }
}

TEST_CASE("factSetLess orders by size then lexicographically") {
    Fact a{"p", {Value::integer(1)}};
    Fact b{"p", {Value::integer(2)}};
    CHECK(factSetLess({a}, {a, b}));
    CHECK(factSetLess({a}, {b}));
    CHECK_FALSE(factSetLess({a, b}, {a, b}));
}
