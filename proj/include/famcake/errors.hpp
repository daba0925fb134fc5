#pragma once

#include <stdexcept>
#include <string>

namespace famcake {

// Raised when an exhaustive search hits the configured node limit
// (FAMCAKE_SEARCH_LIMIT). Maps to CLI exit code 3.
class search_limit_error : public std::runtime_error {
  public:
    explicit search_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when mark() is asked for more value than remains after the start
// point.
class infeasible_target_error : public std::domain_error {
  public:
    explicit infeasible_target_error(const std::string& what) : std::domain_error(what) {}
};

} // namespace famcake
