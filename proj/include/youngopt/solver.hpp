#pragma once

// Polynomial-time optimization over Young diagrams of size n.
//
// For a fixed type k, a diagram is a path through k layers of states
// (i, c_i, r_{i+1}, n_i): c_i rows used so far, the next distinct row
// length r_{i+1}, and n_i cells used so far. Entering layer i from
// (i-1, c_{i-1}, r_i, n_{i-1}) costs
//     (c_i - c_{i-1}) f(r_i) + (r_i - r_{i+1}) f*(c_i)
// and the costs along a path add up to f(lambda) + f*(lambda*). Layer 0
// holds (0, 0, r_1, 0) at cost zero; a path is complete at a layer-k
// state (k, c_k, 0, n).
//
// The layers are relaxed in order. Each transition is split at the
// intermediate point (c_i, r_i, n_i) where the row block is fixed but
// r_{i+1} is not; both halves are linear in the free coordinate, so
// running minima replace the inner loops and a layer costs O(n^2 log n).
//
// Ties: among equal-cost predecessors a state keeps the one whose
// partition prefix is lexicographically smallest. Prefixes reaching the
// same state have equal length, and ordering them matches ordering the
// block sequences (r_1, c_1, r_2, c_2, ...) lexicographically, so each
// layer carries a dense rank of its states' block sequences.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "core.hpp"
#include "error.hpp"
#include "solve_result.hpp"

namespace youngopt {

/// Default upper limit on n accepted by solve / solve_for_type.
inline constexpr int default_max_n = 2000;

/// A vertex of the layered graph, with the cost of the best path reaching it.
struct DpState {
    int layer = 0;
    int c = 0;       // rows used, c_i
    int r_next = 0;  // next distinct row length, r_{i+1}
    int cells = 0;   // n_i
    std::int64_t cost = 0;

    bool operator==(const DpState &) const = default;
};

/// Cost of the transition that appends c - c_prev rows of length r and
/// closes r - r_next columns of height c.
inline std::int64_t transition_cost(int c_prev, int c, int r, int r_next,
                                    const FuncTable &f, const FuncTable &fstar)
{
    detail::ensure(c_prev >= 0 && c > c_prev && c <= fstar.n(), "transition_cost: bad row counts");
    detail::ensure(r_next >= 0 && r > r_next && r <= f.n(), "transition_cost: bad row lengths");
    return checked_add(checked_mul(c - c_prev, f(r)), checked_mul(r - r_next, fstar(c)));
}

namespace detail {

constexpr std::int64_t triangular(std::int64_t j) { return j * (j + 1) / 2; }

// Flat index over (c, r, m) with c, r >= 1 and c * r <= m <= n.
class StateIndex {
public:
    explicit StateIndex(int n) : n_(n), pair_start_(static_cast<std::size_t>(n) + 2, 0)
    {
        for (int c = 1; c <= n; ++c)
            pair_start_[static_cast<std::size_t>(c) + 1] =
                pair_start_[static_cast<std::size_t>(c)] + static_cast<std::size_t>(n / c);
        pair_base_.reserve(pair_start_.back());
        std::size_t total = 0;
        for (int c = 1; c <= n; ++c) {
            for (int r = 1; r <= n / c; ++r) {
                pair_base_.push_back(total);
                total += static_cast<std::size_t>(n - c * r + 1);
            }
        }
        size_ = total;
    }

    std::size_t size() const noexcept { return size_; }

    std::size_t operator()(int c, int r, int m) const
    {
        return pair_base_[pair_start_[static_cast<std::size_t>(c)] + static_cast<std::size_t>(r - 1)] +
               static_cast<std::size_t>(m - c * r);
    }

    bool contains(int c, int r, int m) const noexcept
    {
        return c >= 1 && r >= 1 && c <= n_ && r <= n_ / c && m >= c * r && m <= n_;
    }

private:
    int n_;
    std::vector<std::size_t> pair_start_;
    std::vector<std::size_t> pair_base_;
    std::size_t size_ = 0;
};

} // namespace detail

/// The per-type dynamic program. Construction runs the whole relaxation;
/// afterwards the reached states and their best predecessors can be queried.
class LayeredDp {
public:
    static constexpr std::int64_t unreached = std::numeric_limits<std::int64_t>::max();

    LayeredDp(int k, const FuncTable &f, const FuncTable &fstar)
        : n_(f.n()), k_(k), f_(f), fstar_(fstar), index_(f.n())
    {
        if (fstar.n() != f.n())
            throw input_error("f and f* must have the same length");
        if (k < 1)
            throw input_error("type k must be at least 1");
        if (n_ > std::numeric_limits<std::uint16_t>::max())
            throw input_error("n too large for the layered solver");
        if (detail::triangular(k) > n_)
            return;
        run();
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }

    /// Reached layer-k states (k, c, 0, n), by increasing c.
    std::vector<DpState> final_states() const
    {
        std::vector<DpState> out;
        for (int c = 1; c < static_cast<int>(final_cost_.size()); ++c)
            if (final_cost_[static_cast<std::size_t>(c)] != unreached)
                out.push_back({k_, c, 0, n_, final_cost_[static_cast<std::size_t>(c)]});
        return out;
    }

    /// Cheapest final state under the tie rule; absent if type k is infeasible.
    std::optional<DpState> best_final() const
    {
        if (best_final_c_ == 0)
            return std::nullopt;
        return DpState{k_, best_final_c_, 0, n_, final_cost_[static_cast<std::size_t>(best_final_c_)]};
    }

    /// The reached state with these labels, if any.
    std::optional<DpState> state(int layer, int c, int r_next, int cells) const
    {
        if (layer < 0 || layer > k_ || (layer > 0 && layers_.empty()))
            return std::nullopt;
        if (layer == 0) {
            if (c == 0 && cells == 0 && r_next >= 1 && r_next <= n_ && !layers_.empty())
                return DpState{0, 0, r_next, 0, 0};
            return std::nullopt;
        }
        if (layer == k_) {
            if (r_next != 0 || cells != n_ || c < 1 || c > n_ ||
                final_cost_[static_cast<std::size_t>(c)] == unreached)
                return std::nullopt;
            return DpState{layer, c, 0, n_, final_cost_[static_cast<std::size_t>(c)]};
        }
        if (!index_.contains(c, r_next, cells))
            return std::nullopt;
        const std::int64_t cost = layers_[static_cast<std::size_t>(layer - 1)].cost[index_(c, r_next, cells)];
        if (cost == unreached)
            return std::nullopt;
        return DpState{layer, c, r_next, cells, cost};
    }

    /// The state preceding s on its best path; absent at layer 0.
    std::optional<DpState> predecessor(const DpState &s) const
    {
        if (s.layer == 0)
            return std::nullopt;
        if (!state(s.layer, s.c, s.r_next, s.cells))
            throw input_error("predecessor: state was not reached");
        const Layer &layer = layers_[static_cast<std::size_t>(s.layer - 1)];
        const int r = s.layer == k_ ? final_chosen_r_[static_cast<std::size_t>(s.c)]
                                    : layer.chosen_r[index_(s.c, s.r_next, s.cells)];
        const int c_prev = layer.chosen_c[index_(s.c, r, s.cells)];
        const int cells_prev = s.cells - (s.c - c_prev) * r;
        auto prev = state(s.layer - 1, c_prev, r, cells_prev);
        detail::ensure(prev.has_value(), "predecessor chain is broken");
        return prev;
    }

    /// Recovers (r_1..r_k, c_1..c_k) from a complete state.
    TypedDiagram reconstruct(const DpState &final_state) const
    {
        if (final_state.layer != k_ || final_state.r_next != 0 || final_state.cells != n_ ||
            !state(final_state.layer, final_state.c, 0, n_))
            throw input_error("reconstruct needs a reached layer-k state with all cells used");
        std::vector<int> r(static_cast<std::size_t>(k_)), c(static_cast<std::size_t>(k_));
        DpState cur = final_state;
        while (cur.layer > 0) {
            const DpState prev = *predecessor(cur);
            c[static_cast<std::size_t>(cur.layer - 1)] = cur.c;
            r[static_cast<std::size_t>(cur.layer - 1)] = prev.r_next;
            cur = prev;
        }
        return TypedDiagram(std::move(r), std::move(c));
    }

private:
    struct Layer {
        std::vector<std::int64_t> cost;       // full states (c_i, r_{i+1}, n_i)
        std::vector<std::uint16_t> chosen_r;  // r_i on the best path into a full state
        std::vector<std::uint16_t> chosen_c;  // c_{i-1} on the best path into (c_i, r_i, n_i)
    };

    void run()
    {
        using detail::triangular;
        const int n = n_;
        const std::size_t size = index_.size();

        layers_.resize(static_cast<std::size_t>(k_));
        final_cost_.assign(static_cast<std::size_t>(n) + 1, unreached);
        final_chosen_r_.assign(static_cast<std::size_t>(n) + 1, 0);
        final_rank_.assign(static_cast<std::size_t>(n) + 1, 0);

        std::vector<std::int64_t> half_cost(size);
        std::vector<std::uint32_t> half_rank(size);  // rank of the predecessor's block sequence
        std::vector<std::uint32_t> prev_rank;
        std::vector<std::uint32_t> cur_rank(size);

        for (int i = 1; i <= k_; ++i) {
            Layer &layer = layers_[static_cast<std::size_t>(i - 1)];
            const int left = k_ - i;  // blocks still to come
            half_cost.assign(size, unreached);
            layer.chosen_c.assign(size, 0);

            // a row block (c_i, r_i, n_i) must leave room for `left` more blocks
            auto half_ok = [&](int r, int m) {
                return left == 0 ? m == n : r >= left + 1 && m + triangular(left) <= n;
            };

            // rows: (c', r, m - (c - c') r) -> (c, r, m)
            for (int r = 1; r <= n; ++r) {
                const std::int64_t fr = f_(r);
                if (i == 1) {
                    for (int c = 1; c * r <= n; ++c) {
                        if (!half_ok(r, c * r))
                            continue;
                        const std::size_t idx = index_(c, r, c * r);
                        half_cost[idx] = checked_mul(c, fr);
                        half_rank[idx] = 0;
                    }
                    continue;
                }
                const std::vector<std::int64_t> &prev_cost = layers_[static_cast<std::size_t>(i - 2)].cost;
                // m - c r is invariant along a row transition
                for (int d = 0; d + r <= n; ++d) {
                    std::int64_t best = unreached;
                    std::uint32_t best_rank = 0;
                    int best_c = 0;
                    for (int c = 1; d + c * r <= n; ++c) {
                        const int m = d + c * r;
                        const std::size_t idx = index_(c, r, m);
                        if (best != unreached && half_ok(r, m)) {
                            half_cost[idx] = checked_add(best, checked_mul(c, fr));
                            half_rank[idx] = best_rank;
                            layer.chosen_c[idx] = static_cast<std::uint16_t>(best_c);
                        }
                        if (prev_cost[idx] == unreached)
                            continue;
                        const std::int64_t v = checked_sub(prev_cost[idx], checked_mul(c, fr));
                        if (best == unreached || v < best || (v == best && prev_rank[idx] < best_rank)) {
                            best = v;
                            best_rank = prev_rank[idx];
                            best_c = c;
                        }
                    }
                }
            }

            // columns: (c, r, m) -> (c, r_next, m) for r_next < r
            if (left == 0) {
                for (int c = 1; c <= n; ++c) {
                    const std::int64_t fc = fstar_(c);
                    for (int r = n / c; r >= 1; --r) {
                        const std::size_t idx = index_(c, r, n);
                        if (half_cost[idx] == unreached)
                            continue;
                        const std::int64_t v = checked_add(half_cost[idx], checked_mul(r, fc));
                        const std::size_t cs = static_cast<std::size_t>(c);
                        // r descends, so on equal (cost, rank) the later r is smaller
                        if (final_cost_[cs] == unreached || v < final_cost_[cs] ||
                            (v == final_cost_[cs] && half_rank[idx] <= final_rank_[cs])) {
                            final_cost_[cs] = v;
                            final_chosen_r_[cs] = static_cast<std::uint16_t>(r);
                            final_rank_[cs] = half_rank[idx];
                        }
                    }
                    // order (cost, rank, r_k, c_k); c ascends so it never decides
                    if (final_cost_[static_cast<std::size_t>(c)] != unreached &&
                        (best_final_c_ == 0 || final_key(c) < final_key(best_final_c_)))
                        best_final_c_ = c;
                }
                break;
            }

            layer.cost.assign(size, unreached);
            layer.chosen_r.assign(size, 0);
            auto full_ok = [&](int c, int r_next, int m) {
                return r_next >= left && m + r_next + triangular(left - 1) <= n &&
                       std::int64_t(n - c) * r_next >= n - m;
            };
            for (int c = 1; c <= n; ++c) {
                const std::int64_t fc = fstar_(c);
                for (int m = c; m <= n; ++m) {
                    std::int64_t best = unreached;
                    std::uint32_t best_rank = 0;
                    int best_r = 0;
                    for (int r = m / c; r >= 1; --r) {
                        const std::size_t idx = index_(c, r, m);
                        if (best != unreached && full_ok(c, r, m)) {
                            layer.cost[idx] = checked_sub(best, checked_mul(r, fc));
                            layer.chosen_r[idx] = static_cast<std::uint16_t>(best_r);
                        }
                        if (half_cost[idx] == unreached)
                            continue;
                        const std::int64_t v = checked_add(half_cost[idx], checked_mul(r, fc));
                        if (best == unreached || v < best || (v == best && half_rank[idx] <= best_rank)) {
                            best = v;
                            best_rank = half_rank[idx];
                            best_r = r;
                        }
                    }
                }
            }

            // dense rank of the block sequences (..., r_i, c_i) of this layer's states
            std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed;
            for (int c = 1; c <= n; ++c) {
                for (int r_next = 1; r_next <= n / c; ++r_next) {
                    for (int m = c * r_next; m <= n; ++m) {
                        const std::size_t idx = index_(c, r_next, m);
                        if (layer.cost[idx] == unreached)
                            continue;
                        const int r = layer.chosen_r[idx];
                        const std::uint64_t key = (std::uint64_t{half_rank[index_(c, r, m)]} << 32) |
                                                  (std::uint64_t(r) << 16) | std::uint64_t(c);
                        keyed.emplace_back(key, static_cast<std::uint32_t>(idx));
                    }
                }
            }
            std::sort(keyed.begin(), keyed.end());
            std::uint32_t rank = 0;
            for (std::size_t j = 0; j < keyed.size(); ++j) {
                if (j > 0 && keyed[j].first != keyed[j - 1].first)
                    ++rank;
                cur_rank[keyed[j].second] = rank;
            }
            std::swap(prev_rank, cur_rank);
            cur_rank.resize(size);
        }
    }

    std::tuple<std::int64_t, std::uint32_t, int> final_key(int c) const
    {
        const auto cs = static_cast<std::size_t>(c);
        return {final_cost_[cs], final_rank_[cs], final_chosen_r_[cs]};
    }

    int n_;
    int k_;
    FuncTable f_;
    FuncTable fstar_;
    detail::StateIndex index_;
    std::vector<Layer> layers_;  // layers 1..k
    std::vector<std::int64_t> final_cost_;
    std::vector<std::uint16_t> final_chosen_r_;
    std::vector<std::uint32_t> final_rank_;
    int best_final_c_ = 0;
};

namespace detail {

inline void check_problem(int n, const FuncTable &f, const FuncTable &fstar, int max_n)
{
    if (n < 1)
        throw input_error("n must be at least 1");
    if (n > max_n)
        throw input_error("n = " + std::to_string(n) + " exceeds the solver limit " + std::to_string(max_n));
    if (f.n() != n || fstar.n() != n)
        throw input_error("function tables must have length n = " + std::to_string(n) + " (got " +
                          std::to_string(f.n()) + " and " + std::to_string(fstar.n()) + ")");
}

inline SolveResult result_from_dp(const LayeredDp &dp, const DpState &final_state, const FuncTable &f,
                                  const FuncTable &fstar)
{
    auto [lambda, conj] = from_typed(dp.reconstruct(final_state));
    SolveResult out{std::move(lambda), std::move(conj), dp.k(), final_state.cost};
    ensure(out.value == objective(out.partition, f, fstar), "path cost differs from the objective");
    ensure(type_of(out.partition) == dp.k(), "reconstructed diagram has the wrong type");
    return out;
}

} // namespace detail

/// Best diagram of size n and type exactly k; absent when no partition of
/// n has k distinct parts.
inline std::optional<SolveResult> solve_for_type(int n, int k, const FuncTable &f, const FuncTable &fstar,
                                                 int max_n = default_max_n)
{
    detail::check_problem(n, f, fstar, max_n);
    if (k < 1)
        throw input_error("type k must be at least 1");
    if (detail::triangular(k) > n)
        return std::nullopt;
    const LayeredDp dp(k, f, fstar);
    const auto best = dp.best_final();
    if (!best)
        return std::nullopt;
    return detail::result_from_dp(dp, *best, f, fstar);
}

/// Global minimizer of f(lambda) + f*(lambda*) over all partitions of n.
inline SolveResult solve(int n, const FuncTable &f, const FuncTable &fstar, int max_n = default_max_n)
{
    detail::check_problem(n, f, fstar, max_n);
    std::optional<SolveResult> best;
    for (int k = 1; k <= max_type(n); ++k) {
        auto candidate = solve_for_type(n, k, f, fstar, max_n);
        detail::ensure(candidate.has_value(), "a feasible type produced no diagram");
        if (!best || precedes(*candidate, *best))
            best = std::move(candidate);
    }
    return std::move(*best);
}

} // namespace youngopt
