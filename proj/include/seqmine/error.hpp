#pragma once

#include <stdexcept>
#include <string>

namespace seqmine {

/// Base class for every error the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user configuration: unknown column, inverted window, tau out of range...
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Input could not be read (malformed XML, bad row in strict mode).
class ParseError : public Error {
public:
    ParseError(std::string locator, const std::string& message)
        : Error(locator.empty() ? message : locator + ": " + message), locator_(std::move(locator)) {}

    const std::string& locator() const noexcept { return locator_; }

private:
    std::string locator_;
};

/// An operation that needs at least one event received an empty log.
class EmptyLogError : public Error {
public:
    EmptyLogError() : Error("event log is empty") {}
};

/// Every cluster gives a sequence zero probability.
class AssignmentError : public Error {
public:
    explicit AssignmentError(const std::string& case_id)
        : Error("case '" + case_id + "' has zero likelihood under every cluster"), case_id_(case_id) {}

    const std::string& case_id() const noexcept { return case_id_; }

private:
    std::string case_id_;
};

/// A structural invariant was found broken. Indicates a bug, not bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace seqmine
