#pragma once

// Partitions, their conjugates and the run-length ("typed") view of a
// Young diagram, plus evaluation of f(lambda) + f*(lambda*).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace youngopt {

/// A partition of n: non-increasing positive parts, stored one entry per
/// part. Immutable once constructed.
class Partition {
public:
    explicit Partition(std::vector<int> parts)
        : parts_(std::move(parts))
    {
        if (parts_.empty())
            throw input_error("partition must have at least one part");
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw input_error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw input_error("partition parts must be non-increasing");
            sum += parts_[i];
            if (sum > std::numeric_limits<int>::max())
                throw input_error("partition too large");
        }
        n_ = static_cast<int>(sum);
    }

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int largest() const noexcept { return parts_.front(); }
    std::span<const int> parts() const noexcept { return parts_; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    bool operator==(const Partition &) const = default;
    // Lexicographic on the part sequence.
    std::strong_ordering operator<=>(const Partition &o) const
    {
        return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                      o.parts_.begin(), o.parts_.end());
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Run-length form of a diagram of type k: distinct row lengths
/// r_1 > ... > r_k >= 1 and cumulative row counts 1 <= c_1 < ... < c_k.
/// Block i has c_i - c_{i-1} rows of length r_i (c_0 = 0) and
/// r_i - r_{i+1} columns of height c_i (r_{k+1} = 0).
class TypedDiagram {
public:
    TypedDiagram(std::vector<int> r, std::vector<int> c)
        : r_(std::move(r)), c_(std::move(c))
    {
        if (r_.empty() || r_.size() != c_.size())
            throw input_error("typed diagram needs k >= 1 matching row and count sequences");
        for (std::size_t i = 0; i < r_.size(); ++i) {
            if (r_[i] < 1 || c_[i] < 1)
                throw input_error("typed diagram entries must be positive");
            if (i > 0 && (r_[i] >= r_[i - 1] || c_[i] <= c_[i - 1]))
                throw input_error("typed diagram needs r strictly decreasing and c strictly increasing");
        }
    }

    int k() const noexcept { return static_cast<int>(r_.size()); }
    std::span<const int> r() const noexcept { return r_; }
    std::span<const int> c() const noexcept { return c_; }

    /// Cell count summed over row blocks.
    std::int64_t cells_by_rows() const noexcept
    {
        std::int64_t total = 0;
        int c_prev = 0;
        for (std::size_t i = 0; i < r_.size(); ++i) {
            total += std::int64_t(c_[i] - c_prev) * r_[i];
            c_prev = c_[i];
        }
        return total;
    }

    /// Cell count summed over column blocks.
    std::int64_t cells_by_columns() const noexcept
    {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < r_.size(); ++i) {
            const int r_next = i + 1 < r_.size() ? r_[i + 1] : 0;
            total += std::int64_t(r_[i] - r_next) * c_[i];
        }
        return total;
    }

    bool operator==(const TypedDiagram &) const = default;

private:
    std::vector<int> r_;
    std::vector<int> c_;
};

/// Largest accepted |f(j)|.
inline constexpr std::int64_t func_value_bound = std::int64_t{1} << 31;

/// Values f(1), ..., f(n) of an integer function on [n].
class FuncTable {
public:
    explicit FuncTable(std::vector<std::int64_t> values)
        : values_(std::move(values))
    {
        if (values_.empty())
            throw input_error("function table must have at least one value");
        for (std::size_t j = 0; j < values_.size(); ++j) {
            if (values_[j] > func_value_bound || values_[j] < -func_value_bound)
                throw input_error("function value at " + std::to_string(j + 1) +
                                  " exceeds magnitude bound 2^31");
        }
    }

    int n() const noexcept { return static_cast<int>(values_.size()); }
    /// f(j) for 1 <= j <= n.
    std::int64_t operator()(int j) const { return values_[static_cast<std::size_t>(j - 1)]; }
    std::span<const std::int64_t> values() const noexcept { return values_; }

    bool operator==(const FuncTable &) const = default;

private:
    std::vector<std::int64_t> values_;
};

inline Partition conjugate(const Partition &p)
{
    std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
    // out[j-1] = #{i : p_i >= j}
    for (int part : p)
        for (int j = 0; j < part; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

/// Number of distinct part values.
inline int type_of(const Partition &p)
{
    int k = 1;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] != p[i - 1])
            ++k;
    return k;
}

/// Largest k with k(k+1)/2 <= n, i.e. the largest type of any partition of n.
inline int max_type(int n)
{
    if (n < 1)
        throw input_error("n must be at least 1");
    int k = static_cast<int>(std::sqrt(2.0 * n));
    while (std::int64_t(k) * (k + 1) / 2 > n)
        --k;
    while (std::int64_t(k + 1) * (k + 2) / 2 <= n)
        ++k;
    return k;
}

inline TypedDiagram to_typed(const Partition &p)
{
    std::vector<int> r, c;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i + 1 == p.size() || p[i + 1] != p[i]) {
            r.push_back(p[i]);
            c.push_back(static_cast<int>(i + 1));
        }
    }
    return TypedDiagram(std::move(r), std::move(c));
}

/// Expands the run-length form into (lambda, lambda*).
inline std::pair<Partition, Partition> from_typed(const TypedDiagram &t)
{
    const auto r = t.r();
    const auto c = t.c();
    const std::size_t k = r.size();

    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(c[k - 1]));
    int c_prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
        rows.insert(rows.end(), static_cast<std::size_t>(c[i] - c_prev), r[i]);
        c_prev = c[i];
    }

    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(r[0]));
    for (std::size_t i = k; i-- > 0;) {
        const int r_next = i + 1 < k ? r[i + 1] : 0;
        cols.insert(cols.end(), static_cast<std::size_t>(r[i] - r_next), c[i]);
    }
    return {Partition(std::move(rows)), Partition(std::move(cols))};
}

/// sum_j f(p_j) over the parts of p.
inline std::int64_t sum_over_parts(const Partition &p, const FuncTable &f)
{
    std::int64_t total = 0;
    for (int part : p)
        total = checked_add<input_error>(total, f(part), "objective overflows 64-bit range");
    return total;
}

inline std::int64_t objective(const Partition &p, const FuncTable &f, const FuncTable &fstar)
{
    if (f.n() != p.n() || fstar.n() != p.n())
        throw input_error("function tables must have length n = " + std::to_string(p.n()) +
                          " (got " + std::to_string(f.n()) + " and " +
                          std::to_string(fstar.n()) + ")");
    return checked_add<input_error>(sum_over_parts(p, f), sum_over_parts(conjugate(p), fstar),
                                    "objective overflows 64-bit range");
}

inline std::string render(const Partition &p, char glyph = '#')
{
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0)
            out += '\n';
        out.append(static_cast<std::size_t>(p[i]), glyph);
    }
    return out;
}

/// "3,2,1"
inline std::string to_string(const Partition &p)
{
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

/// Parses the comma-separated text form. Spaces around parts are ignored.
inline Partition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int value = 0;
        const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size())
            throw input_error("malformed partition \"" + std::string(text) + "\"");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

} // namespace youngopt
