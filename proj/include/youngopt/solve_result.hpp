#pragma once

#include <cstdint>
#include <tuple>

#include "core.hpp"

namespace youngopt {

struct SolveResult {
    Partition partition;
    Partition conjugate;
    int k;
    std::int64_t value;

    bool operator==(const SolveResult &) const = default;
};

inline SolveResult make_result(Partition p, const FuncTable &f, const FuncTable &fstar)
{
    const std::int64_t value = objective(p, f, fstar);
    const int k = type_of(p);
    Partition conj = conjugate(p);
    return SolveResult{std::move(p), std::move(conj), k, value};
}

/// The tie rule shared by the solver and the oracle: lower value first,
/// then smaller type, then the lexicographically smaller partition.
inline bool precedes(const SolveResult &a, const SolveResult &b)
{
    return std::tie(a.value, a.k, a.partition) < std::tie(b.value, b.k, b.partition);
}

} // namespace youngopt
