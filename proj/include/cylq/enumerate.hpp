#ifndef CYLQ_ENUMERATE_HPP
#define CYLQ_ENUMERATE_HPP

#include <vector>

#include "cylq/cylindric.hpp"
#include "cylq/partition.hpp"

namespace cylq {

enum class PartFilter {
    None,      // unrestricted parts
    Distinct,  // all entries pairwise distinct across all rows
    Odd,       // every entry odd
};

/* Complete, duplicate-free list of cylindric partitions with the given
 * profile and exact weight, in lexicographic order on the row lists.
 * Splits the search across threads when OpenMP is enabled; the result is
 * identical to the serial reference for any thread count.
 */
std::vector<CylindricPartition> enumerate_cylindric(const Profile& profile,
                                                    long long weight,
                                                    PartFilter filter = PartFilter::None);

/* Single-threaded reference enumerator the parallel version is tested
 * against. */
std::vector<CylindricPartition> enumerate_cylindric_serial(const Profile& profile,
                                                           long long weight,
                                                           PartFilter filter = PartFilter::None);

/* counts[n] = number of cylindric partitions of weight n, n = 0..order. */
std::vector<long long> count_sequence(const Profile& profile, int order,
                                      PartFilter filter = PartFilter::None);

/* Counts refined by the (largest part, weight) statistic pair up to a
 * weight bound.  count(0,0) = 1 is the empty cylindric partition.
 */
class RefinedCounts {
public:
    explicit RefinedCounts(int max_weight)
        : max_weight_(max_weight),
          table_(static_cast<std::size_t>(max_weight) + 1) {
        for (int n = 0; n <= max_weight; ++n)
            table_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
    }

    int max_weight() const { return max_weight_; }

    long long at(long long largest, long long weight) const {
        if (weight < 0 || weight > max_weight_) return 0;
        if (largest < 0 || largest > weight) return 0;  // statistic bound m <= n
        return table_[static_cast<std::size_t>(weight)][static_cast<std::size_t>(largest)];
    }

    void add(long long largest, long long weight) {
        ++table_.at(static_cast<std::size_t>(weight)).at(static_cast<std::size_t>(largest));
    }

    /* Sum over the largest-part statistic; must reproduce count_sequence. */
    std::vector<long long> weight_marginal() const {
        std::vector<long long> m(static_cast<std::size_t>(max_weight_) + 1, 0);
        for (int n = 0; n <= max_weight_; ++n)
            for (long long c : table_[static_cast<std::size_t>(n)])
                m[static_cast<std::size_t>(n)] += c;
        return m;
    }

private:
    int max_weight_;
    std::vector<std::vector<long long>> table_;  // [weight][largest]
};

RefinedCounts refined_counts(const Profile& profile, int order,
                             PartFilter filter = PartFilter::None);

/* All ordinary partitions of the given weight (filtered), in the
 * enumerator's deterministic order.  Weight 0 yields the empty partition. */
std::vector<Partition> partitions_of(long long weight,
                                     PartFilter filter = PartFilter::None);

} // namespace cylq

#endif
