#include "cylq/enumerate.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cylq {

namespace {

using Row = std::vector<long long>;

/* Emit every partition of w (parts <= max_part), optionally odd-only or
 * strictly decreasing, in decreasing lexicographic order. */
template <class Fn>
void for_each_row(long long w, long long max_part, PartFilter filter, Row& acc, Fn&& emit) {
    if (w == 0) {
        emit(acc);
        return;
    }
    long long first = std::min(w, max_part);
    if (filter == PartFilter::Odd && first % 2 == 0) --first;
    for (long long p = first; p >= 1; filter == PartFilter::Odd ? p -= 2 : --p) {
        long long next_max = (filter == PartFilter::Distinct) ? p - 1 : p;
        if (filter == PartFilter::Distinct) {
            // smallest reachable tail: p-1, p-2, ...; prune when even that overshoots
            if (w - p > next_max * (next_max + 1) / 2) continue;
        }
        acc.push_back(p);
        for_each_row(w - p, next_max, filter, acc, emit);
        acc.pop_back();
    }
}

long long entry(const Row& row, std::size_t j) {
    return (j >= 1 && j <= row.size()) ? row[j - 1] : 0;
}

/* row_hi[j] >= row_lo[j + shift] for all j. */
bool dominates(const Row& hi, const Row& lo, int shift) {
    if (lo.size() <= static_cast<std::size_t>(shift)) return true;
    const std::size_t span = lo.size() - static_cast<std::size_t>(shift);
    for (std::size_t j = 1; j <= span; ++j)
        if (entry(hi, j) < lo[j - 1 + static_cast<std::size_t>(shift)]) return false;
    return true;
}

bool rows_all_distinct(const std::vector<Row>& rows) {
    std::set<long long> seen;
    for (const auto& r : rows)
        for (long long p : r)
            if (!seen.insert(p).second) return false;
    return true;
}

struct Searcher {
    const Profile& profile;
    long long total;
    PartFilter filter;
    std::vector<CylindricPartition>* out;

    void complete(std::vector<Row>& rows) {
        const int k = profile.rank();
        // wrap-around check: last row dominates the first, shifted by c_1
        if (!dominates(rows[static_cast<std::size_t>(k - 1)], rows[0], profile.shift(1)))
            return;
        if (filter == PartFilter::Distinct && !rows_all_distinct(rows)) return;
        std::vector<Partition> canon;
        canon.reserve(rows.size());
        for (auto& r : rows) canon.emplace_back(r);
        out->push_back(CylindricPartition{profile, std::move(canon)});
    }

    void descend(std::vector<Row>& rows, long long remaining) {
        const int k = profile.rank();
        const int i = static_cast<int>(rows.size());  // 0-based index of row being chosen
        if (i == k) {
            if (remaining == 0) complete(rows);
            return;
        }
        const long long lo = (i == k - 1) ? remaining : 0;
        for (long long w = lo; w <= remaining; ++w) {
            Row acc;
            for_each_row(w, w, filter, acc, [&](const Row& row) {
                if (i > 0 &&
                    !dominates(rows[static_cast<std::size_t>(i - 1)], row, profile.shift(i + 1)))
                    return;
                rows.push_back(row);
                descend(rows, remaining - w);
                rows.pop_back();
            });
        }
    }
};

std::vector<CylindricPartition> sort_canonical(std::vector<CylindricPartition> v) {
    std::sort(v.begin(), v.end(), [](const CylindricPartition& x, const CylindricPartition& y) {
        return x.rows < y.rows;
    });
    return v;
}

} // namespace

std::vector<CylindricPartition> enumerate_cylindric_serial(const Profile& profile,
                                                           long long weight,
                                                           PartFilter filter) {
    std::vector<CylindricPartition> out;
    if (weight < 0) return out;
    Searcher s{profile, weight, filter, &out};
    std::vector<Row> rows;
    s.descend(rows, weight);
    return sort_canonical(std::move(out));
}

std::vector<CylindricPartition> enumerate_cylindric(const Profile& profile,
                                                    long long weight,
                                                    PartFilter filter) {
    if (weight < 0) return {};
    if (weight < 14) return enumerate_cylindric_serial(profile, weight, filter);

    // Split the search over first-row candidates.  Thread-local results are
    // merged and sorted, so the output matches the serial enumerator exactly
    // for any thread count.
    std::vector<Row> firsts;
    for (long long w = 0; w <= weight; ++w) {
        Row acc;
        for_each_row(w, w, filter, acc, [&](const Row& row) { firsts.push_back(row); });
    }

    std::vector<CylindricPartition> out;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<CylindricPartition> local;
        Searcher s{profile, weight, filter, &local};
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1) nowait
#endif
        for (std::size_t f = 0; f < firsts.size(); ++f) {
            std::vector<Row> rows{firsts[f]};
            long long w0 = 0;
            for (long long p : firsts[f]) w0 += p;
            s.descend(rows, weight - w0);
        }
#ifdef _OPENMP
#pragma omp critical(cylq_enumerate_merge)
#endif
        out.insert(out.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    }
    return sort_canonical(std::move(out));
}

std::vector<long long> count_sequence(const Profile& profile, int order, PartFilter filter) {
    std::vector<long long> counts(static_cast<std::size_t>(order) + 1, 0);
    for (int n = 0; n <= order; ++n)
        counts[static_cast<std::size_t>(n)] =
            static_cast<long long>(enumerate_cylindric(profile, n, filter).size());
    return counts;
}

RefinedCounts refined_counts(const Profile& profile, int order, PartFilter filter) {
    RefinedCounts table(order);
    for (int n = 0; n <= order; ++n)
        for (const auto& cp : enumerate_cylindric(profile, n, filter))
            table.add(cp.max_part(), n);
    return table;
}

std::vector<Partition> partitions_of(long long weight, PartFilter filter) {
    std::vector<Partition> out;
    if (weight < 0) return out;
    Row acc;
    for_each_row(weight, weight, filter, acc, [&](const Row& row) { out.emplace_back(row); });
    return out;
}

} // namespace cylq
