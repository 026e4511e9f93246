#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prefasp {

/// Location of a token or statement in an input text. Lines and columns are 1-based,
/// offsets are byte offsets into the text.
struct SourceSpan {
    std::size_t line   = 1;
    std::size_t column = 1;
    std::size_t begin  = 0;
    std::size_t end    = 0;
};

/// Syntax error or rejected input statement.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, SourceSpan span);

    [[nodiscard]] const SourceSpan& span() const noexcept { return span_; }
    [[nodiscard]] const std::string& message() const noexcept { return msg_; }

private:
    SourceSpan  span_;
    std::string msg_;
};

/// A value violates an invariant of a model type (duplicate rule ids, cyclic order, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside of its precondition, e.g. with a set that is not an answer set.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource limit (enumeration size, rule count, time) was exceeded.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The solver deadline passed before the search finished.
class Timeout : public LimitExceeded {
public:
    using LimitExceeded::LimitExceeded;
};

} // namespace prefasp
