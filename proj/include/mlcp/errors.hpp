#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mlcp {

/// Malformed `.mlcp` text or outcome literal. `line()` is 0 when the error
/// is not tied to a source line (e.g. a command-line outcome literal).
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string & reason) :
        std::runtime_error(line == 0 ? reason : "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason)
    {
    }

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] const std::string & reason() const { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

/// A model that cannot be built at all (bad domain, unknown value, ...).
class ModelError : public std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/// A well-formed net that fails a structural or class requirement of the
/// requested operation (cyclic, broken CPT partition, not more-or-less).
class ValidationError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// A search or enumeration went over its configured budget.
class ResourceError : public std::runtime_error
{
public:
    ResourceError(const std::string & what, std::uint64_t amount) :
        std::runtime_error(what),
        amount_(amount)
    {
    }

    /// The size that tripped the budget (outcome count or expansions).
    [[nodiscard]] std::uint64_t amount() const { return amount_; }

private:
    std::uint64_t amount_;
};

/// An operation was called outside its precondition.
class PreconditionError : public std::logic_error
{
    using std::logic_error::logic_error;
};

/// An internal guarantee failed. Never caught inside the library.
class InvariantError : public std::logic_error
{
    using std::logic_error::logic_error;
};

} // namespace mlcp
