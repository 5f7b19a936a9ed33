#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repairforge/constraints.hpp"
#include "repairforge/core_model.hpp"
#include "repairforge/errors.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace repairforge;

namespace {

const char* kExample1Facts = "employee(john,50,cs).\nemployee(john,100,cs).";
const char* kExample1Fd =
        ":- employee(N,S1,D1), employee(N,S2,D2), S1 != S2.\n"
        ":- employee(N,S1,D1), employee(N,S2,D2), D1 != D2.\n";

}  // namespace

TEST_CASE("parse_constraints basics") {
    SUBCASE("two-atom FD constraint") {
        auto cs = parseConstraints(":- employee(N,S1,D1), employee(N,S2,D2), S1 != S2.");
        REQUIRE(cs.size() == 1);
        CHECK(cs[0].atoms.size() == 2);
        CHECK(cs[0].comparisons.size() == 1);
        CHECK((cs[0].comparisons[0].op == CompareOp::Neq));
    }
    SUBCASE("unsatisfiable comparison still parses") {
        auto cs = parseConstraints(":- p(X), X < X.");
        REQUIRE(cs.size() == 1);
        Database db = parseFacts("p(1).");
        CHECK(findViolations(cs[0], db).empty());
    }
    SUBCASE("unsafe variable is rejected") {
        CHECK_THROWS_AS(parseConstraints(":- q(X,Y), Z != Y."), Error);
    }
    SUBCASE("comparison before an atom is rejected") {
        CHECK_THROWS_AS(parseConstraints(":- X != Y, q(X,Y)."), Error);
    }
    SUBCASE("constants in atoms and comparisons") {
        auto cs = parseConstraints(":- q(X, 3), X >= 1/2.");
        REQUIRE(cs.size() == 1);
        Database db = parseFacts("q(1,3).\nq(0,3).\nq(5,4).");
        auto v = findViolations(cs[0], db);
        REQUIRE(v.size() == 1);
        CHECK(v[0] == FactSet{Fact{"q", {Value::integer(1), Value::integer(3)}}});
    }
    SUBCASE("FD and KEY shorthands require a schema") {
        CHECK_THROWS_AS(parseConstraints("FD r: 1 -> 2."), Error);
        Schema schema{{"r", 3}};
        auto fd = parseConstraints("FD r: 1 -> 2 3.", &schema);
        CHECK(fd.size() == 2);  // one constraint per determined position
        auto key = parseConstraints("KEY r: 1.", &schema);
        CHECK(key.size() == 2);
        CHECK_THROWS_AS(parseConstraints("KEY r: 1 2 3.", &schema), Error);  // covers all attrs
        CHECK_THROWS_AS(parseConstraints("FD r: 1 -> 1.", &schema), Error);
        CHECK_THROWS_AS(parseConstraints("FD r: 1 -> 4.", &schema), Error);  // out of range
    }
}

TEST_CASE("classify recognizes the FD and key templates") {
    Schema employee{{"employee", 3}};
    SUBCASE("the two halves of Name -> Salary Dept") {
        auto cs = parseConstraints(kExample1Fd);
        REQUIRE(cs.size() == 2);
        auto salary = classify(cs[0], employee);
        CHECK(salary.tag == ConstraintClass::Tag::FunctionalDependency);
        CHECK(salary.relation == "employee");
        CHECK(salary.lhs == std::vector<std::size_t>{0});
        CHECK(salary.rhs == std::vector<std::size_t>{1});
        auto dept = classify(cs[1], employee);
        CHECK(dept.tag == ConstraintClass::Tag::FunctionalDependency);
        CHECK(dept.rhs == std::vector<std::size_t>{2});
    }
    SUBCASE("key on position 1 of a binary relation") {
        Schema s{{"p", 2}};
        auto cs = parseConstraints(":- p(X,Y), p(X,Z), Y != Z.");
        auto cls = classify(cs[0], s);
        CHECK(cls.tag == ConstraintClass::Tag::Key);
        CHECK(cls.lhs == std::vector<std::size_t>{0});
    }
    SUBCASE("shorthand expansions classify as written") {
        Schema s{{"r", 3}, {"p", 2}};
        // a key over a binary relation matches the key template exactly
        for (const auto& c : parseConstraints("KEY p: 1.", &s)) {
            CHECK(classify(c, s).tag == ConstraintClass::Tag::Key);
        }
        // over a wider relation each per-position expansion leaves the other
        // non-key attributes free, which is the FD template
        for (const auto& c : parseConstraints("KEY r: 1.", &s)) {
            CHECK(classify(c, s).tag == ConstraintClass::Tag::FunctionalDependency);
        }
        for (const auto& c : parseConstraints("FD r: 1 -> 2.", &s)) {
            CHECK(classify(c, s).tag == ConstraintClass::Tag::FunctionalDependency);
        }
        // an FD determining the single remaining attribute is a key
        for (const auto& c : parseConstraints("FD r: 1 2 -> 3.", &s)) {
            CHECK(classify(c, s).tag == ConstraintClass::Tag::Key);
        }
    }
    SUBCASE("non-matching shapes are general denials") {
        Schema s{{"p", 2}, {"q", 2}};
        auto two = parseConstraints(":- p(X,Y), q(X,Z), Y < Z.");
        CHECK(classify(two[0], s).tag == ConstraintClass::Tag::GeneralDenial);
        auto lt = parseConstraints(":- p(X,Y), p(X,Z), Y < Z.");
        CHECK(classify(lt[0], s).tag == ConstraintClass::Tag::GeneralDenial);
        auto single = parseConstraints(":- p(X,X).");
        CHECK(classify(single[0], s).tag == ConstraintClass::Tag::GeneralDenial);
        auto constant = parseConstraints(":- p(X,1), p(X,Z), 1 != Z.");
        CHECK(classify(constant[0], s).tag == ConstraintClass::Tag::GeneralDenial);
    }
    SUBCASE("invariant under variable renaming and comparison flip") {
        Schema s{{"p", 2}};
        auto a = parseConstraints(":- p(X,Y), p(X,Z), Y != Z.");
        auto b = parseConstraints(":- p(K,Alpha), p(K,Beta), Beta != Alpha.");
        CHECK(classify(a[0], s).tag == ConstraintClass::Tag::Key);
        CHECK(classify(b[0], s).tag == ConstraintClass::Tag::Key);
        CHECK(classify(a[0], s).lhs == classify(b[0], s).lhs);
    }
}

TEST_CASE("find_violations on the employee example") {
    Database db = parseFacts(kExample1Facts);
    auto cs = parseConstraints(kExample1Fd);
    auto v = findViolations(cs[0], db);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == db.facts());
    CHECK_FALSE(satisfies(db, cs[0]));
    CHECK(findViolations(cs[1], db).empty());  // depts agree
    CHECK(satisfies(db, cs[1]));
}

TEST_CASE("find_violations corner cases") {
    SUBCASE("empty database") {
        auto cs = parseConstraints(":- p(X,Y), p(Y,X).");
        CHECK(findViolations(cs[0], Database{}).empty());
    }
    SUBCASE("self-join collapses to a singleton edge") {
        Database db = parseFacts("p(a,a).");
        auto cs = parseConstraints(":- p(X,Y), p(Y,X).");
        auto v = findViolations(cs[0], db);
        REQUIRE(v.size() == 1);
        CHECK(v[0].size() == 1);
    }
    SUBCASE("type error propagates from an order comparison on symbols") {
        Database db = parseFacts("p(a,b).");
        auto cs = parseConstraints(":- p(X,Y), X < Y.");
        CHECK_THROWS_AS(findViolations(cs[0], db), TypeError);
    }
}

TEST_CASE("find_violations agrees with the naive nested-loop oracle") {
    std::mt19937_64 rng(0x5eed0001);
    for (int round = 0; round < 150; ++round) {
        auto inst = oracles::randomInstance(rng, 8);
        for (const auto& c : inst.constraints) {
            auto fast = findViolations(c, inst.db);
            auto naive = oracles::naiveViolations(c, inst.db);
            CHECK(std::set<FactSet>(fast.begin(), fast.end()) == naive);
            CHECK(satisfies(inst.db, c) == naive.empty());
            CHECK(std::is_sorted(fast.begin(), fast.end(), factSetLess));
        }
    }
}

TEST_CASE("find_violations is monotone under database growth") {
    std::mt19937_64 rng(0x5eed0002);
    for (int round = 0; round < 60; ++round) {
        auto inst = oracles::randomInstance(rng, 10);
        Database smaller;
        for (const Fact& f : inst.db.facts()) {
            if (rng() % 2) smaller.insert(f);
        }
        for (const auto& c : inst.constraints) {
            auto small = findViolations(c, smaller);
            auto big = findViolations(c, inst.db);
            std::set<FactSet> bigSet(big.begin(), big.end());
            for (const auto& e : small) CHECK(bigSet.count(e) == 1);
        }
    }
}
