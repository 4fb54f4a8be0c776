#include "cylq/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include "cylq/enumerate.hpp"
#include "cylq/errors.hpp"

namespace cylq {

namespace {

using Row = std::vector<long long>;

void require_profile(const CylindricPartition& cp, std::initializer_list<int> want) {
    if (!std::equal(cp.profile.entries().begin(), cp.profile.entries().end(),
                    want.begin(), want.end()))
        throw std::invalid_argument("wrong profile for this correspondence, got " +
                                    cp.profile.to_string());
}

long long sum(const Row& r) {
    long long s = 0;
    for (long long x : r) s += x;
    return s;
}

Partition strip(const Row& r) {
    Row v = r;
    while (!v.empty() && v.back() == 0) v.pop_back();
    return Partition(std::move(v));
}

bool weakly_decreasing(const Row& r) {
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i - 1] < r[i]) return false;
    return true;
}

/* Paired-display validity for profile (1,1): rows weakly decreasing and
 * a_j >= b_{j+1}, b_j >= a_{j+1}.  Zeros are allowed anywhere here; this
 * is the algorithm-internal padded form. */
void audit_display_11(const Row& a, const Row& b) {
    if (a.size() != b.size()) throw std::logic_error("paired form lost its shape");
    if (!weakly_decreasing(a) || !weakly_decreasing(b))
        throw std::logic_error("intermediate row not weakly decreasing");
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] < b[i + 1] || b[i] < a[i + 1])
            throw std::logic_error("intermediate column inequality violated");
    for (long long x : a)
        if (x < 0) throw std::logic_error("negative intermediate entry");
    for (long long x : b)
        if (x < 0) throw std::logic_error("negative intermediate entry");
}

/* Same for profile (2,0) with the unpaired a_0 heading the top row:
 * a_{j-1} >= b_j and b_j >= a_{j+1}. */
void audit_display_20(long long a0, const Row& a, const Row& b) {
    if (a.size() != b.size()) throw std::logic_error("paired form lost its shape");
    Row top;
    top.push_back(a0);
    top.insert(top.end(), a.begin(), a.end());
    if (!weakly_decreasing(top) || !weakly_decreasing(b))
        throw std::logic_error("intermediate row not weakly decreasing");
    for (std::size_t j = 1; j <= b.size(); ++j) {
        if (top[j - 1] < b[j - 1]) throw std::logic_error("intermediate column inequality violated");
        if (j < b.size() && b[j - 1] < a[j]) // b_j >= a_{j+1}
            throw std::logic_error("intermediate wrap inequality violated");
    }
    for (long long x : top)
        if (x < 0) throw std::logic_error("negative intermediate entry");
    for (long long x : b)
        if (x < 0) throw std::logic_error("negative intermediate entry");
}

void check_beta(const Partition& beta, bool odd_parts) {
    long long prev = -1;
    const auto& parts = beta.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        const bool parity_ok = odd_parts ? (*it % 2 != 0) : (*it % 2 == 0 && *it > 0);
        if (!parity_ok || *it == prev) {
            if (odd_parts) throw BetaNotDistinctOdd();
            throw BetaNotDistinctEven();
        }
        prev = *it;
    }
}

/* Shared forward scan for profile (1,1); amount is 1 (unrestricted) or 2
 * (all-odd doubled).  Returns false when a doubled subtraction would go
 * negative, recording the reason. */
bool scan_11(Row& a, Row& b, int amount, long long original_weight, bool audit,
             Partition* beta_out, MoveTrace* trace, std::string* reason) {
    const std::size_t r = a.size();
    std::vector<long long> beta;
    for (std::size_t j = r; j >= 1; --j) {
        if (a[j - 1] <= b[j - 1]) continue;  // pair already ordered, only relabeling
        std::swap(a[j - 1], b[j - 1]);
        // subtract from the original a_1..a_j (a_j now sits in the bottom row)
        // and b_1..b_{j-1}: 2j-1 parts in total
        for (std::size_t i = 0; i + 1 < j; ++i) a[i] -= amount;
        for (std::size_t i = 0; i < j; ++i) b[i] -= amount;
        for (std::size_t i = 0; i < j; ++i) {
            if ((i + 1 < j && a[i] < 0) || b[i] < 0) {
                if (reason)
                    *reason = "pair " + std::to_string(j) + ": subtracting " +
                              std::to_string(amount) + " drives an entry negative";
                return false;
            }
        }
        beta.push_back(2 * static_cast<long long>(j) - 1);
        if (trace)
            trace->steps.push_back(MoveStep{true, static_cast<int>(j), amount, beta.back()});
        if (audit) {
            audit_display_11(a, b);
            if (sum(a) + sum(b) + amount * sum(beta) != original_weight)
                throw std::logic_error("weight ledger broken");
        }
    }
    if (beta_out) *beta_out = Partition(beta);
    return true;
}

} // namespace

std::string flavor_name(PairFlavor f) {
    switch (f) {
        case PairFlavor::DistinctOdd: return "distinct-odd";
        case PairFlavor::DistinctEven: return "distinct-even";
        case PairFlavor::DoubledOdd: return "doubled-odd";
    }
    return "?";
}

std::optional<PairFlavor> flavor_from_name(const std::string& name) {
    if (name == "distinct-odd") return PairFlavor::DistinctOdd;
    if (name == "distinct-even") return PairFlavor::DistinctEven;
    if (name == "doubled-odd") return PairFlavor::DoubledOdd;
    return std::nullopt;
}

PairedForm11 pad_11(const CylindricPartition& cp) {
    require_profile(cp, {1, 1});
    Row a = cp.rows[0].parts();
    Row b = cp.rows[1].parts();
    const auto r = a.size(), s = b.size();
    if (r + 1 < s || s + 1 < r) throw RowLengthGap();
    if (s + 1 == r) b.push_back(0);       // s = r-1: append b_r = 0
    else if (s == r + 1) a.push_back(0);  // s = r+1: append a_{r+1} = 0, rename
    return PairedForm11{std::move(a), std::move(b)};
}

PairedForm20 pad_20(const CylindricPartition& cp) {
    require_profile(cp, {2, 0});
    const Row& top = cp.rows[0].parts();
    Row b = cp.rows[1].parts();
    const long long a0 = top.empty() ? 0 : top[0];
    Row a(top.begin() + (top.empty() ? 0 : 1), top.end());
    if (a.size() > b.size() + 1 || b.size() > a.size() + 1) throw RowLengthGap();
    const std::size_t r = std::max(a.size(), b.size());
    a.resize(r, 0);
    b.resize(r, 0);
    return PairedForm20{a0, std::move(a), std::move(b)};
}

std::pair<PartitionPair, MoveTrace> forward_11(const CylindricPartition& cp, bool audit) {
    PairedForm11 pf = pad_11(cp);
    const long long w = cp.weight();
    PartitionPair pair;
    pair.flavor = PairFlavor::DistinctOdd;
    MoveTrace trace;
    if (!scan_11(pf.top, pf.bottom, 1, w, audit, &pair.beta, &trace, nullptr))
        throw std::logic_error("unit subtraction went negative on valid input");

    // mu interleaves the settled pairs: b~_1, a~_1, ..., b~_r, a~_r
    Row mu;
    for (std::size_t j = 0; j < pf.pair_count(); ++j) {
        mu.push_back(pf.bottom[j]);
        mu.push_back(pf.top[j]);
    }
    pair.mu = strip(mu);
    if (pair.mu.weight() + pair.beta.weight() != w)
        throw std::logic_error("weight additivity broken in forward_11");
    return {std::move(pair), std::move(trace)};
}

CylindricPartition inverse_11(const PartitionPair& pair, bool audit, MoveTrace* trace) {
    check_beta(pair.beta, /*odd=*/true);
    Row mu = pair.mu.parts();
    if (mu.size() % 2 != 0) mu.push_back(0);  // relabeling needs an even count
    Row b, a;
    for (std::size_t i = 0; i < mu.size(); i += 2) {
        b.push_back(mu[i]);
        a.push_back(mu[i + 1]);
    }
    const long long target = pair.mu.weight() + pair.beta.weight();
    long long beta_left = pair.beta.weight();

    // consume beta smallest-part-first; each part 2j-1 undoes a move at pair j
    const auto& parts = pair.beta.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        const std::size_t j = static_cast<std::size_t>((*it + 1) / 2);
        while (a.size() < j) {  // beta may reach past mu; append zero pairs
            a.push_back(0);
            b.push_back(0);
        }
        for (std::size_t i = 0; i + 1 < j; ++i) a[i] += 1;
        for (std::size_t i = 0; i < j; ++i) b[i] += 1;
        std::swap(a[j - 1], b[j - 1]);
        beta_left -= *it;
        if (trace) trace->steps.push_back(MoveStep{false, static_cast<int>(j), 1, *it});
        if (audit) {
            audit_display_11(a, b);
            if (sum(a) + sum(b) + beta_left != target)
                throw std::logic_error("weight ledger broken");
        }
    }

    CylindricPartition cp{Profile({1, 1}), {strip(a), strip(b)}};
    if (cp.weight() != target) throw std::logic_error("weight additivity broken in inverse_11");
    if (audit && !is_valid_cylindric({a, b}, cp.profile))
        throw std::logic_error("inverse_11 produced an invalid cylindric partition");
    return cp;
}

std::pair<PartitionPair, MoveTrace> forward_20(const CylindricPartition& cp, bool audit) {
    PairedForm20 pf = pad_20(cp);
    const long long w = cp.weight();
    const std::size_t r = pf.pair_count();
    Row& a = pf.top;
    Row& b = pf.bottom;
    std::vector<long long> beta;
    MoveTrace trace;

    for (std::size_t j = r; j >= 1; --j) {
        if (a[j - 1] <= b[j - 1]) continue;
        std::swap(a[j - 1], b[j - 1]);
        // subtract from a_0..a_j (a_j now in the bottom row) and b_1..b_{j-1}:
        // 2j parts in total, so the move emits the even part 2j
        pf.unpaired -= 1;
        for (std::size_t i = 0; i + 1 < j; ++i) a[i] -= 1;
        for (std::size_t i = 0; i < j; ++i) b[i] -= 1;
        beta.push_back(2 * static_cast<long long>(j));
        trace.steps.push_back(MoveStep{true, static_cast<int>(j), 1, beta.back()});
        if (audit) {
            audit_display_20(pf.unpaired, a, b);
            if (pf.unpaired + sum(a) + sum(b) + sum(beta) != w)
                throw std::logic_error("weight ledger broken");
        }
    }

    Row mu;
    mu.push_back(pf.unpaired);  // a~_0 leads the listing
    for (std::size_t j = 0; j < r; ++j) {
        mu.push_back(b[j]);
        mu.push_back(a[j]);
    }
    PartitionPair pair{strip(mu), Partition(beta), PairFlavor::DistinctEven};
    if (pair.mu.weight() + pair.beta.weight() != w)
        throw std::logic_error("weight additivity broken in forward_20");
    return {std::move(pair), std::move(trace)};
}

CylindricPartition inverse_20(const PartitionPair& pair, bool audit, MoveTrace* trace) {
    check_beta(pair.beta, /*odd=*/false);
    Row mu = pair.mu.parts();
    if (mu.size() % 2 == 0) mu.push_back(0);  // a~_0 plus pairs needs an odd count
    long long a0 = mu[0];
    Row b, a;
    for (std::size_t i = 1; i < mu.size(); i += 2) {
        b.push_back(mu[i]);
        a.push_back(mu[i + 1]);
    }
    const long long target = pair.mu.weight() + pair.beta.weight();
    long long beta_left = pair.beta.weight();

    const auto& parts = pair.beta.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        const std::size_t j = static_cast<std::size_t>(*it / 2);
        while (a.size() < j) {
            a.push_back(0);
            b.push_back(0);
        }
        // add to a_0..a_{j-1} and b_1..b_j, then switch the j-th pair
        a0 += 1;
        for (std::size_t i = 0; i + 1 < j; ++i) a[i] += 1;
        for (std::size_t i = 0; i < j; ++i) b[i] += 1;
        std::swap(a[j - 1], b[j - 1]);
        beta_left -= *it;
        if (trace) trace->steps.push_back(MoveStep{false, static_cast<int>(j), 1, *it});
        if (audit) {
            audit_display_20(a0, a, b);
            if (a0 + sum(a) + sum(b) + beta_left != target)
                throw std::logic_error("weight ledger broken");
        }
    }

    Row top;
    top.push_back(a0);
    top.insert(top.end(), a.begin(), a.end());
    CylindricPartition cp{Profile({2, 0}), {strip(top), strip(b)}};
    if (cp.weight() != target) throw std::logic_error("weight additivity broken in inverse_20");
    if (audit && !is_valid_cylindric({top, b}, cp.profile))
        throw std::logic_error("inverse_20 produced an invalid cylindric partition");
    return cp;
}

bool doubled_odd_dependency_holds(const Partition& mu, const Partition& beta,
                                  bool strict_largest) {
    const long long l = static_cast<long long>(mu.length());
    const long long cap = (l % 2 == 1) ? l : l - 1;  // 2k+1 -> 2k+1, 2k -> 2k-1
    if (beta.empty()) return strict_largest ? cap < 1 : true;
    return strict_largest ? beta.max_part() == cap : beta.max_part() <= cap;
}

OddForwardResult forward_odd_11(const CylindricPartition& cp, bool audit) {
    require_profile(cp, {1, 1});
    for (const auto& row : cp.rows)
        if (!row.all_odd())
            throw std::invalid_argument("forward_odd_11 requires all parts odd");

    PairedForm11 pf = pad_11(cp);
    const long long w = cp.weight();
    OddForwardResult res;
    Partition beta;
    std::string reason;
    if (!scan_11(pf.top, pf.bottom, 2, w, audit, &beta, &res.trace, &reason)) {
        res.not_in_image_reason = reason;
        return res;
    }

    Row mu;
    for (std::size_t j = 0; j < pf.pair_count(); ++j) {
        mu.push_back(pf.bottom[j]);
        mu.push_back(pf.top[j]);
    }
    PartitionPair pair{strip(mu), std::move(beta), PairFlavor::DoubledOdd};
    if (!pair.mu.all_odd()) {
        res.not_in_image_reason = "result mu has an even part";
        return res;
    }
    if (!doubled_odd_dependency_holds(pair.mu, pair.beta)) {
        res.not_in_image_reason = "result violates the mu/beta dependency";
        return res;
    }
    if (pair.effective_weight() != w)
        throw std::logic_error("weight additivity broken in forward_odd_11");
    res.pair = std::move(pair);
    return res;
}

CylindricPartition inverse_odd_11(const PartitionPair& pair, bool strict_largest, bool audit,
                                  MoveTrace* trace) {
    if (!pair.mu.all_odd()) throw MuNotOdd();
    check_beta(pair.beta, /*odd=*/true);
    if (!doubled_odd_dependency_holds(pair.mu, pair.beta, strict_largest)) {
        const long long l = static_cast<long long>(pair.mu.length());
        throw DependencyViolated("mu has " + std::to_string(l) +
                                 " parts, largest beta part is " +
                                 std::to_string(pair.beta.max_part()));
    }

    Row mu = pair.mu.parts();
    if (mu.size() % 2 != 0) mu.push_back(0);
    Row b, a;
    for (std::size_t i = 0; i < mu.size(); i += 2) {
        b.push_back(mu[i]);
        a.push_back(mu[i + 1]);
    }
    const long long target = pair.mu.weight() + 2 * pair.beta.weight();
    long long beta_left = 2 * pair.beta.weight();

    const auto& parts = pair.beta.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        const std::size_t j = static_cast<std::size_t>((*it + 1) / 2);
        while (a.size() < j) {
            a.push_back(0);
            b.push_back(0);
        }
        for (std::size_t i = 0; i + 1 < j; ++i) a[i] += 2;
        for (std::size_t i = 0; i < j; ++i) b[i] += 2;
        std::swap(a[j - 1], b[j - 1]);
        beta_left -= 2 * *it;
        if (trace) trace->steps.push_back(MoveStep{false, static_cast<int>(j), 2, *it});
        if (audit) {
            audit_display_11(a, b);
            if (sum(a) + sum(b) + beta_left != target)
                throw std::logic_error("weight ledger broken");
        }
    }

    CylindricPartition cp{Profile({1, 1}), {strip(a), strip(b)}};
    if (cp.weight() != target)
        throw std::logic_error("weight additivity broken in inverse_odd_11");
    for (const auto& row : cp.rows)
        if (!row.all_odd()) throw std::logic_error("inverse_odd_11 produced an even part");
    if (audit && !is_valid_cylindric({a, b}, cp.profile))
        throw std::logic_error("inverse_odd_11 produced an invalid cylindric partition");
    return cp;
}

long long largest_part_statistic(const PartitionPair& pair) {
    return pair.mu.max_part() + static_cast<long long>(pair.beta.length());
}

namespace {

/* Distinct partitions of `weight` with the given parity, parts <= cap
 * (cap < smallest legal part means only the empty partition qualifies).
 * Emits in decreasing lexicographic order. */
void gen_distinct(long long weight, long long cap, bool odd, Row& acc,
                  std::vector<Partition>& out) {
    if (weight == 0) {
        out.emplace_back(acc);
        return;
    }
    long long first = std::min(weight, cap);
    if (odd && first % 2 == 0) --first;
    if (!odd && first % 2 != 0) --first;
    for (long long p = first; p >= 1; p -= 2) {
        acc.push_back(p);
        gen_distinct(weight - p, p - 2, odd, acc, out);
        acc.pop_back();
    }
}

/* All-odd partitions of `weight` with exactly `count` parts, each <= cap. */
void gen_odd_fixed_length(long long weight, long long count, long long cap, Row& acc,
                          std::vector<Partition>& out) {
    if (count == 0) {
        if (weight == 0) out.emplace_back(acc);
        return;
    }
    if (weight < count) return;  // every part is at least 1
    long long first = std::min(weight - (count - 1), cap);
    if (first % 2 == 0) --first;
    for (long long p = first; p >= 1; p -= 2) {
        acc.push_back(p);
        gen_odd_fixed_length(weight - p, count - 1, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<PartitionPair> all_pairs(PairFlavor flavor, long long total_weight) {
    if (flavor == PairFlavor::DoubledOdd)
        throw std::invalid_argument("use all_doubled_odd_pairs for the doubled flavor");
    const bool odd = flavor == PairFlavor::DistinctOdd;
    std::vector<PartitionPair> out;
    for (long long wb = 0; wb <= total_weight; ++wb) {
        std::vector<Partition> betas;
        Row acc;
        gen_distinct(wb, wb, odd, acc, betas);
        if (betas.empty()) continue;
        const auto mus = partitions_of(total_weight - wb);
        for (const auto& beta : betas)
            for (const auto& mu : mus) out.push_back(PartitionPair{mu, beta, flavor});
    }
    return out;
}

std::vector<PartitionPair> all_doubled_odd_pairs(long long effective_weight) {
    std::vector<PartitionPair> out;
    for (long long l = 0; l <= effective_weight; ++l) {
        const long long cap = (l % 2 == 1) ? l : l - 1;
        for (long long wb = 0; 2 * wb + l <= effective_weight; ++wb) {
            std::vector<Partition> betas;
            Row acc;
            gen_distinct(wb, cap, /*odd=*/true, acc, betas);
            if (betas.empty()) continue;
            std::vector<Partition> mus;
            Row acc2;
            gen_odd_fixed_length(effective_weight - 2 * wb, l, effective_weight, acc2, mus);
            for (const auto& beta : betas)
                for (const auto& mu : mus)
                    out.push_back(PartitionPair{mu, beta, PairFlavor::DoubledOdd});
        }
    }
    return out;
}

} // namespace cylq
