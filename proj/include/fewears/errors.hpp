#ifndef FEWEARS_ERRORS_HPP
#define FEWEARS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fewears {

/// Malformed or out-of-range arguments (bad labels, wrong sizes, unparsable text).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Arguments are well-formed but outside the domain of the requested operation
/// (a closed form evaluated where it does not hold, a 3-ear query on a 2-eared
/// triangulation, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An internal invariant failed, e.g. a closed form produced a non-integer.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fewears

#endif  // FEWEARS_ERRORS_HPP
