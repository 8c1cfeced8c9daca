#pragma once

// Exhaustive ground truth: every partition of n, and the brute-force
// minimizer of f(lambda) + f*(lambda*) under the solver's tie rule.

#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "error.hpp"
#include "solve_result.hpp"

namespace youngopt {

/// Default largest n the oracle accepts (p(45) = 89134).
inline constexpr int default_oracle_limit = 45;

/// All partitions of n in decreasing lexicographic order, (n) first and
/// (1^n) last. Iterating yields Partition values.
class PartitionRange {
public:
    explicit PartitionRange(int n, int limit = default_oracle_limit) : n_(n)
    {
        if (n < 1)
            throw input_error("n must be at least 1");
        if (n > limit)
            throw input_error("n = " + std::to_string(n) + " exceeds the oracle limit " +
                              std::to_string(limit));
    }

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        explicit iterator(int n) : parts_{n} {}

        Partition operator*() const { return Partition(parts_); }

        iterator &operator++()
        {
            // rightmost part > 1; everything after it is 1s
            std::size_t ones = 0;
            while (!parts_.empty() && parts_.back() == 1) {
                parts_.pop_back();
                ++ones;
            }
            if (parts_.empty()) {
                done_ = true;
                return *this;
            }
            const int v = --parts_.back();
            int rem = static_cast<int>(ones) + 1;
            while (rem >= v) {
                parts_.push_back(v);
                rem -= v;
            }
            if (rem > 0)
                parts_.push_back(rem);
            return *this;
        }

        void operator++(int) { ++*this; }

        bool operator==(std::default_sentinel_t) const noexcept { return done_; }

    private:
        std::vector<int> parts_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(n_); }
    std::default_sentinel_t end() const noexcept { return {}; }

private:
    int n_;
};

inline PartitionRange enumerate_partitions(int n, int limit = default_oracle_limit)
{
    return PartitionRange(n, limit);
}

/// Brute-force optimum, optionally restricted to partitions of type
/// type_filter. Absent only when no partition has that type.
inline std::optional<SolveResult> brute_force_solve(int n, const FuncTable &f, const FuncTable &fstar,
                                                    std::optional<int> type_filter = std::nullopt,
                                                    int limit = default_oracle_limit)
{
    if (n < 1)
        throw input_error("n must be at least 1");
    if (f.n() != n || fstar.n() != n)
        throw input_error("function tables must have length n = " + std::to_string(n));
    if (type_filter && *type_filter < 1)
        throw input_error("type k must be at least 1");

    std::optional<SolveResult> best;
    for (Partition p : enumerate_partitions(n, limit)) {
        if (type_filter && type_of(p) != *type_filter)
            continue;
        SolveResult candidate = make_result(std::move(p), f, fstar);
        if (!best || precedes(candidate, *best))
            best = std::move(candidate);
    }
    return best;
}

} // namespace youngopt
