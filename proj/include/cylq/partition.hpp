#ifndef CYLQ_PARTITION_HPP
#define CYLQ_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cylq {

/* An ordinary integer partition: a weakly decreasing list of positive
 * integers.  Zeros are never stored; padding with zeros is a device local
 * to the bijection algorithms and stays out of this type.
 */
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<long long> parts)
        : Partition(std::vector<long long>(parts)) {}

    /* Accepts a weakly decreasing list that may end in zeros (they are
     * stripped).  Throws std::invalid_argument on negative entries or an
     * increase. */
    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw std::invalid_argument("partition entries must be nonnegative");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("partition entries must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
    }

    const std::vector<long long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    long long weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    /* 1-based access; indices past the end read as 0. */
    long long part_at(std::size_t j) const {
        return (j >= 1 && j <= parts_.size()) ? parts_[j - 1] : 0;
    }

    long long max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    bool all_odd() const {
        return std::all_of(parts_.begin(), parts_.end(),
                           [](long long p) { return p % 2 != 0; });
    }

    bool all_even() const {
        return std::all_of(parts_.begin(), parts_.end(),
                           [](long long p) { return p % 2 == 0; });
    }

    /* Strictly decreasing, i.e. pairwise distinct parts. */
    bool all_distinct() const {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] == parts_[i]) return false;
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& x, const Partition& y) {
        return x.parts_ <=> y.parts_;  // lexicographic
    }

private:
    std::vector<long long> parts_;
};

/* A profile c = (c_1, ..., c_k): the composition that fixes the cyclic
 * shifts of a cylindric partition.  rank() is k, level() the sum of the
 * entries, modulus() their total t = k + level.
 */
class Profile {
public:
    explicit Profile(std::vector<int> entries) : c_(std::move(entries)) {
        if (c_.empty())
            throw std::invalid_argument("profile needs at least one entry");
        for (int e : c_)
            if (e < 0) throw std::invalid_argument("profile entries must be nonnegative");
    }

    int rank() const { return static_cast<int>(c_.size()); }
    int level() const { return std::accumulate(c_.begin(), c_.end(), 0); }
    int modulus() const { return rank() + level(); }

    /* 1-based, matching the usual c_i notation. */
    int shift(int i) const { return c_.at(static_cast<std::size_t>(i) - 1); }

    const std::vector<int>& entries() const { return c_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Profile&, const Profile&) = default;

private:
    std::vector<int> c_;
};

} // namespace cylq

#endif
