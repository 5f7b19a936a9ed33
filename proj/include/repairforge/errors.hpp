#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace repairforge {

/** Base class for all errors raised by the library. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/** Syntax or schema error while reading an input file. Carries line/column. */
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
            : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
              line(line), column(column) {}

    std::size_t line;
    std::size_t column;
};

/** Raised when an order comparison is applied to a non-numeric value. */
class TypeError : public Error {
public:
    explicit TypeError(const std::string& msg) : Error("type error: " + msg) {}
};

/** Raised when a configured resource limit is hit. Never a truncated answer. */
class LimitError : public Error {
public:
    LimitError(const std::string& limitName, std::size_t limit, std::size_t reached)
            : Error("limit exceeded: " + limitName + " = " + std::to_string(limit) +
                    " (reached " + std::to_string(reached) + ")"),
              limitName(limitName), limit(limit), reached(reached) {}

    std::string limitName;
    std::size_t limit;
    std::size_t reached;
};

}  // namespace repairforge
