#pragma once

#include <stdexcept>
#include <string>

namespace giz {

// Bad input: syntax, usage, out-of-range arguments.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Source-located input error from the document parser.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, int line, int col)
        : InputError(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line_(line), col_(col), message_(what) {}
    int line() const { return line_; }
    int column() const { return col_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int col_;
    std::string message_;
};

// Data is well formed but violates a structural invariant.
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Invariant violation found while reading a document.
class LocatedInvariantError : public InvariantError {
public:
    LocatedInvariantError(const std::string& what, int line, int col)
        : InvariantError(std::to_string(line) + ":" + std::to_string(col) + ": " + what), line_(line), col_(col) {}
    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

// A hypothesis of the requested analysis does not hold for the given data.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace giz
