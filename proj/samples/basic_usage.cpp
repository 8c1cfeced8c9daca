// Minimal library usage: solve the n = 6 squares instance, then list the
// best diagram of every feasible type.

#include <iostream>

#include "youngopt/youngopt.hpp"

int main()
{
    using namespace youngopt;

    const int n = 6;
    const FuncTable f = tabulate(parse_expr("k^2"), n);
    const FuncTable fstar = f;

    const SolveResult best = solve(n, f, fstar);
    std::cout << "best: " << to_string(best.partition) << " (conjugate " << to_string(best.conjugate)
              << ", type " << best.k << ") value " << best.value << '\n'
              << render(best.partition) << "\n\n";

    for (int k = 1; k <= max_type(n); ++k) {
        if (const auto res = solve_for_type(n, k, f, fstar))
            std::cout << "type " << k << ": " << to_string(res->partition) << " value " << res->value << '\n';
    }
}
