#ifndef CYP_ERRORS_HPP
#define CYP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyp
{

// Argument outside the mathematical domain of an operation (k > m, empty
// stratum, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A root series passed to symmetrization is not permutation invariant.
struct SymmetryError : std::invalid_argument {
    SymmetryError(int i, int j, const std::string &what)
        : std::invalid_argument(what), first(i), second(j)
    {
    }
    // 1-based root indices of the violating transposition.
    int first;
    int second;
};

// Malformed user data: stratum tables, diamonds, Chern classes.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A cohomology model produced an impossible value (e.g. non-integral Euler
// characteristic).
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cyp

#endif
