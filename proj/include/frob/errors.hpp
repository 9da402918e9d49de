#pragma once

#include <stdexcept>
#include <string>

namespace frob {

/// Base for all library errors; name() is the stable identifier the CLI
/// prints and maps to exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// Invalid input or out-of-contract request (CLI exit code 2).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}

protected:
    DomainError(const std::string& name, const std::string& msg)
        : Error(name, msg) {}
};

class NotCoprimeError : public DomainError {
public:
    explicit NotCoprimeError(const std::string& msg)
        : DomainError("NotCoprime", msg) {}
};

class InvalidWeightError : public DomainError {
public:
    explicit InvalidWeightError(const std::string& msg)
        : DomainError("InvalidWeight", msg) {}
};

class OutOfValidatedRangeError : public DomainError {
public:
    explicit OutOfValidatedRangeError(const std::string& msg)
        : DomainError("OutOfValidatedRange", msg) {}
};

/// No integer has at most p representations; the requested quantity is
/// undefined rather than some sentinel.
class EmptySetError : public DomainError {
public:
    explicit EmptySetError(const std::string& msg)
        : DomainError("EmptySet", msg) {}
};

/// A self-check failed: an expression that must collapse to an integer did
/// not, or a constructed set violates its invariants (CLI exit code 3).
class InternalInconsistencyError : public Error {
public:
    explicit InternalInconsistencyError(const std::string& msg)
        : Error("InternalInconsistency", msg) {}
};

}  // namespace frob
