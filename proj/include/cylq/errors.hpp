#ifndef CYLQ_ERRORS_HPP
#define CYLQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cylq {

/* Base class for all contract violations raised by this library.
 * Validation of untrusted input (JSON, CLI flags) reports through result
 * types instead; exceptions mean the caller broke a documented
 * precondition or an internal exactness guarantee failed.
 */
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OrderMismatch : Error {
    OrderMismatch(int lhs, int rhs)
        : Error("series truncation orders differ: " + std::to_string(lhs) +
                " vs " + std::to_string(rhs)) {}
};

struct NonUnitConstantTerm : Error {
    NonUnitConstantTerm() : Error("series inversion requires a unit constant term") {}
};

struct NotTruncatable : Error {
    explicit NotTruncatable(const std::string& detail)
        : Error("infinite product is not truncatable: " + detail) {}
};

/* An exact division failed.  The identities this library verifies guarantee
 * divisibility, so hitting this indicates a bug, never bad data. */
struct InexactDivision : Error {
    explicit InexactDivision(const std::string& detail)
        : Error("inexact division: " + detail) {}
};

struct BetaNotDistinctOdd : Error {
    BetaNotDistinctOdd() : Error("beta must be a partition into distinct odd parts") {}
};

struct BetaNotDistinctEven : Error {
    BetaNotDistinctEven() : Error("beta must be a partition into distinct even parts") {}
};

struct MuNotOdd : Error {
    MuNotOdd() : Error("mu must have all parts odd") {}
};

struct DependencyViolated : Error {
    explicit DependencyViolated(const std::string& detail)
        : Error("mu/beta dependency constraint violated: " + detail) {}
};

/* Row lengths of a two-row cylindric partition can differ by at most one;
 * anything else cannot have passed validation. */
struct RowLengthGap : Error {
    RowLengthGap() : Error("row lengths differ by more than one") {}
};

} // namespace cylq

#endif
