#pragma once

#include <stdexcept>
#include <string>

namespace gosper {

/// Raised by operations whose parameters fall on a pole or outside a
/// documented domain.
class ParameterError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an exact identity that must hold by construction is violated.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a numeric evaluation cannot meet its contract.
class NumericError : public std::runtime_error {
public:
    enum class Kind { pole, branch_cut, degenerate_connection, no_convergence, unsupported };

    NumericError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

inline const char* to_string(NumericError::Kind k) {
    switch (k) {
        case NumericError::Kind::pole: return "pole";
        case NumericError::Kind::branch_cut: return "branch-cut";
        case NumericError::Kind::degenerate_connection: return "degenerate-connection";
        case NumericError::Kind::no_convergence: return "no-convergence";
        case NumericError::Kind::unsupported: return "unsupported";
    }
    return "unknown";
}

}  // namespace gosper
