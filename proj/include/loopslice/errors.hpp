#pragma once

#include <stdexcept>
#include <string>

namespace loopslice {

/// Violated mathematical precondition; the message names the precondition.
class precondition_error : public std::domain_error {
public:
    explicit precondition_error(const std::string& msg) : std::domain_error(msg) {}
};

/// Broken internal invariant.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace loopslice
