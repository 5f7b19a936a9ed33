#pragma once

// Internal character-level scanner shared by the facts and constraints
// parsers. Not part of the public headers.

#include "repairforge/core_model.hpp"
#include "repairforge/errors.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <string>

namespace repairforge::detail {

struct Scanner {
    explicit Scanner(std::istream& in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    std::string text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    char get() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skipWhitespaceAndComments() {
        while (!eof()) {
            char c = peek();
            if (c == '%') {
                while (!eof() && peek() != '\n') get();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                return;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    bool consume(char c) {
        if (!eof() && peek() == c) {
            get();
            return true;
        }
        return false;
    }

    std::string identifier() {
        if (eof() || (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')) {
            fail("expected identifier");
        }
        std::string s;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            s += get();
        }
        return s;
    }

    std::int64_t integerLiteral() {
        std::string s;
        if (!eof() && peek() == '-') s += get();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number");
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
        try {
            return std::stoll(s);
        } catch (const std::exception&) {
            fail("integer out of range: " + s);
        }
    }

    // integer, rational or symbol literal
    Value valueLiteral() {
        skipWhitespaceAndComments();
        if (eof()) fail("expected value");
        char c = peek();
        if (c == '\'') {
            get();
            std::string s;
            while (!eof() && peek() != '\'' && peek() != '\n') s += get();
            if (eof() || peek() != '\'') fail("unterminated quoted symbol");
            get();
            if (s.empty()) fail("empty quoted symbol");
            return Value::symbol(s);
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t num = integerLiteral();
            if (consume('/')) {
                std::int64_t den = integerLiteral();
                if (den <= 0) fail("rational denominator must be positive");
                return Value::rational(num, den);
            }
            return Value::integer(num);
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            return Value::symbol(identifier());
        }
        fail("expected value literal");
    }
};

inline Fact parseFactLiteral(Scanner& sc) {
    sc.skipWhitespaceAndComments();
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
    return fact;
}

}  // namespace repairforge::detail
