#pragma once

#include <stdexcept>
#include <string>

namespace knotvol {

// Malformed textual input (braid words, CLI ranges). CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical/domain failures: branch cuts, degenerate saddles, singular
// systems, evaluation outside a supported region. CLI exit code 3.
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

// Branch-tracking failure of the deformation machinery (|u| outside the
// supported box or a lost branch). CLI exit code 3.
class BranchError : public MathError {
public:
    explicit BranchError(const std::string& msg) : MathError(msg) {}
};

// Resource guard tripped (state-sum size cap). CLI exit code 4.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace knotvol
