#include "cylq/cylindric.hpp"

namespace cylq {

namespace {

long long entry(const std::vector<long long>& row, std::size_t j) {
    return (j >= 1 && j <= row.size()) ? row[j - 1] : 0;
}

} // namespace

ValidationResult validate_cylindric(const std::vector<std::vector<long long>>& rows,
                                    const Profile& profile) {
    ValidationResult res;
    const int k = profile.rank();

    if (static_cast<int>(rows.size()) != k) {
        res.failure = ValidationFailure{
            ValidationError::WrongRowCount, 0, 0,
            "expected " + std::to_string(k) + " rows, got " + std::to_string(rows.size())};
        return res;
    }

    for (int i = 1; i <= k; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        for (std::size_t j = 1; j <= row.size(); ++j) {
            if (row[j - 1] < 0) {
                res.failure = ValidationFailure{
                    ValidationError::NegativePart, i, static_cast<int>(j),
                    "row " + std::to_string(i) + " entry " + std::to_string(j) +
                        " is negative"};
                return res;
            }
            if (j > 1 && row[j - 2] < row[j - 1]) {
                res.failure = ValidationFailure{
                    ValidationError::RowNotWeaklyDecreasing, i, static_cast<int>(j),
                    "row " + std::to_string(i) + " increases at entry " + std::to_string(j)};
                return res;
            }
        }
    }

    // Cyclic inequalities: row i against row i+1 shifted by c_{i+1}; the last
    // row wraps to the first shifted by c_1.
    for (int i = 1; i <= k; ++i) {
        const int nxt = (i < k) ? i + 1 : 1;
        const int c = profile.shift(nxt);
        const auto& hi = rows[static_cast<std::size_t>(i - 1)];
        const auto& lo = rows[static_cast<std::size_t>(nxt - 1)];
        const std::size_t span = lo.size() > static_cast<std::size_t>(c)
                                     ? lo.size() - static_cast<std::size_t>(c)
                                     : 0;
        for (std::size_t j = 1; j <= span; ++j) {
            if (entry(hi, j) < entry(lo, j + static_cast<std::size_t>(c))) {
                res.failure = ValidationFailure{
                    ValidationError::CyclicInequalityViolated, i, static_cast<int>(j),
                    "row " + std::to_string(i) + " entry " + std::to_string(j) + " = " +
                        std::to_string(entry(hi, j)) + " < row " + std::to_string(nxt) +
                        " entry " + std::to_string(j + static_cast<std::size_t>(c)) +
                        " = " + std::to_string(entry(lo, j + static_cast<std::size_t>(c)))};
                return res;
            }
        }
    }

    std::vector<Partition> canon;
    canon.reserve(rows.size());
    for (const auto& r : rows) canon.emplace_back(r);
    res.value = CylindricPartition{profile, std::move(canon)};
    return res;
}

bool is_valid_cylindric(const std::vector<std::vector<long long>>& rows,
                        const Profile& profile) {
    return validate_cylindric(rows, profile).ok();
}

} // namespace cylq
