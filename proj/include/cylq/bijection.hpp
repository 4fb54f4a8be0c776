#ifndef CYLQ_BIJECTION_HPP
#define CYLQ_BIJECTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cylq/cylindric.hpp"
#include "cylq/partition.hpp"

namespace cylq {

enum class PairFlavor {
    DistinctOdd,   // profile (1,1): beta has distinct odd parts
    DistinctEven,  // profile (2,0): beta has distinct even parts
    DoubledOdd,    // profile (1,1), all parts odd: beta distinct odd, counted twice
};

std::string flavor_name(PairFlavor f);
std::optional<PairFlavor> flavor_from_name(const std::string& name);

/* The image of a cylindric partition under the correspondence: an
 * unrestricted (or all-odd) partition mu plus the move record beta. */
struct PartitionPair {
    Partition mu;
    Partition beta;
    PairFlavor flavor = PairFlavor::DistinctOdd;

    /* |mu| + |beta|, with beta parts counted twice for the doubled flavor. */
    long long effective_weight() const {
        return mu.weight() +
               (flavor == PairFlavor::DoubledOdd ? 2 : 1) * beta.weight();
    }

    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

/* One switch-and-subtract (or add-and-switch) move. */
struct MoveStep {
    bool forward = true;   // true: subtract move, false: inverse add move
    int pair_index = 0;    // j, 1-based
    int amount = 1;        // 1, or 2 for the doubled flavor
    long long beta_part = 0;  // part emitted (forward) or consumed (backward)

    friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

struct MoveTrace {
    std::vector<MoveStep> steps;

    friend bool operator==(const MoveTrace&, const MoveTrace&) = default;
};

/* Two-row paired form for profile (1,1): top entries a_1..a_r over bottom
 * entries b_1..b_r, zero-padded to equal length. */
struct PairedForm11 {
    std::vector<long long> top;     // a_1..a_r
    std::vector<long long> bottom;  // b_1..b_r
    std::size_t pair_count() const { return top.size(); }
};

/* Paired form for profile (2,0): the unpaired largest part a_0, then pairs
 * [b_j, a_j]. */
struct PairedForm20 {
    long long unpaired = 0;         // a_0
    std::vector<long long> top;     // a_1..a_r
    std::vector<long long> bottom;  // b_1..b_r
    std::size_t pair_count() const { return top.size(); }
};

/* Equal-length padding per the identity s = r: append b_r = 0 when the
 * bottom row is short, or a zero to the top row when it is long.
 * Throws RowLengthGap if the rows differ by more than one (impossible for
 * validated input). */
PairedForm11 pad_11(const CylindricPartition& cp);
PairedForm20 pad_20(const CylindricPartition& cp);

/* Forward correspondences.  `audit` re-validates every intermediate state
 * and the weight ledger, throwing std::logic_error on violation. */
std::pair<PartitionPair, MoveTrace> forward_11(const CylindricPartition& cp,
                                               bool audit = false);
std::pair<PartitionPair, MoveTrace> forward_20(const CylindricPartition& cp,
                                               bool audit = false);

/* Inverse correspondences.  Throw BetaNotDistinctOdd / BetaNotDistinctEven
 * when beta violates its flavor.  The optional trace receives the backward
 * move log (parts consumed smallest-first). */
CylindricPartition inverse_11(const PartitionPair& pair, bool audit = false,
                              MoveTrace* trace = nullptr);
CylindricPartition inverse_20(const PartitionPair& pair, bool audit = false,
                              MoveTrace* trace = nullptr);

/* The doubled (all-odd) variant is partial: a doubled subtraction that
 * would drive an entry negative, or a result outside the dependency
 * constraint, means the input has no preimage. */
struct OddForwardResult {
    std::optional<PartitionPair> pair;
    MoveTrace trace;
    std::string not_in_image_reason;

    bool in_image() const { return pair.has_value(); }
};

OddForwardResult forward_odd_11(const CylindricPartition& cp, bool audit = false);

/* Dependency constraint between mu's length and beta's largest part:
 * mu with 2k parts allows beta parts up to 2k-1, mu with 2k+1 parts up to
 * 2k+1.  With strict_largest the bound must be attained (the prose reading);
 * default is the "at most" reading that matches the generating function.
 * Throws MuNotOdd, BetaNotDistinctOdd, DependencyViolated. */
CylindricPartition inverse_odd_11(const PartitionPair& pair, bool strict_largest = false,
                                  bool audit = false, MoveTrace* trace = nullptr);

bool doubled_odd_dependency_holds(const Partition& mu, const Partition& beta,
                                  bool strict_largest = false);

/* largest(mu) + length(beta); equals max_part(inverse_11(pair)). */
long long largest_part_statistic(const PartitionPair& pair);

/* Every (mu, beta) of the doubled-odd flavor with the given effective
 * weight |mu| + 2|beta|, satisfying the (non-strict) dependency constraint.
 * Deterministic order. */
std::vector<PartitionPair> all_doubled_odd_pairs(long long effective_weight);

/* All unrestricted-mu pairs of the given flavor and total weight
 * (DistinctOdd or DistinctEven); used by the round-trip suites. */
std::vector<PartitionPair> all_pairs(PairFlavor flavor, long long total_weight);

} // namespace cylq

#endif
