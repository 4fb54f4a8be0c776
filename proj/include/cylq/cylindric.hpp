#ifndef CYLQ_CYLINDRIC_HPP
#define CYLQ_CYLINDRIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "cylq/partition.hpp"

namespace cylq {

/* A cylindric partition: k rows, one per profile entry, satisfying
 *
 *     row_i[j] >= row_{i+1}[j + c_{i+1}]   for i = 1..k-1,
 *     row_k[j] >= row_1[j + c_1]           (wrap-around),
 *
 * with out-of-range indices reading as 0.  Rows are stored zero-stripped;
 * equality is equality of profile and of all canonical rows.
 */
struct CylindricPartition {
    Profile profile;
    std::vector<Partition> rows;

    long long weight() const {
        long long w = 0;
        for (const auto& r : rows) w += r.weight();
        return w;
    }

    long long max_part() const {
        long long m = 0;  // 0 for the empty cylindric partition
        for (const auto& r : rows) m = std::max(m, r.max_part());
        return m;
    }

    bool empty() const {
        for (const auto& r : rows)
            if (!r.empty()) return false;
        return true;
    }

    friend bool operator==(const CylindricPartition&, const CylindricPartition&) = default;
};

enum class ValidationError {
    WrongRowCount,
    NegativePart,
    RowNotWeaklyDecreasing,
    CyclicInequalityViolated,
};

struct ValidationFailure {
    ValidationError kind;
    int row = 0;    // 1-based row i of the violated condition
    int index = 0;  // 1-based part index j
    std::string message;
};

struct ValidationResult {
    std::optional<CylindricPartition> value;
    std::optional<ValidationFailure> failure;

    bool ok() const { return value.has_value(); }
};

/* Checks Definition-style validity of raw rows (trailing zeros permitted on
 * input) and returns the canonical CylindricPartition, or a report naming
 * the first violated condition.  Rows are scanned in order; cyclic
 * inequalities are scanned i = 1..k, then j ascending.
 */
ValidationResult validate_cylindric(const std::vector<std::vector<long long>>& rows,
                                    const Profile& profile);

/* Same checks against already-canonical rows; used by enumeration and the
 * bijections when auditing intermediate states. */
bool is_valid_cylindric(const std::vector<std::vector<long long>>& rows,
                        const Profile& profile);

} // namespace cylq

#endif
