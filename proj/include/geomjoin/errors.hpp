#ifndef GEOMJOIN_ERRORS_HPP
#define GEOMJOIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geomjoin {

/** Malformed or out-of-contract input (CLI exit code 1). */
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/** A configured resource budget was exhausted (CLI exit code 2). */
class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/**
 * A condition guaranteed by a proved theorem failed, or an internal
 * cross-check between two independent computations disagreed.  Always a
 * bug, never a property of the input (CLI exit code 3).
 */
class InternalInconsistencyError : public std::logic_error {
  public:
    explicit InternalInconsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace geomjoin

#endif
