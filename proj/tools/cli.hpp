#pragma once

// Command-line front end. run_cli() takes explicit streams so the test
// suite can drive every subcommand in-process.
//
// Exit codes: 0 success, 1 infeasible request, 2 malformed input,
// 3 internal invariant violation or solver/oracle disagreement.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "youngopt/core.hpp"
#include "youngopt/funcspec.hpp"
#include "youngopt/oracle.hpp"
#include "youngopt/solver.hpp"

namespace youngopt::cli {

enum exit_code : int { ok = 0, infeasible = 1, bad_input = 2, internal = 3 };

struct Options {
    int n = 0;
    std::string f_spec;
    std::string fstar_spec;
    std::optional<int> type;
    std::string format = "text";
    bool verify = false;
    bool count = false;
    std::string partition;
    int oracle_limit = default_oracle_limit;
};

inline std::vector<int> parts_of(const Partition &p)
{
    return {p.begin(), p.end()};
}

/// Fixed key order: n, k, partition, conjugate, value, solver.
inline nlohmann::ordered_json to_json(int n, const SolveResult &res, const std::string &solver)
{
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = res.k;
    j["partition"] = parts_of(res.partition);
    j["conjugate"] = parts_of(res.conjugate);
    j["value"] = res.value;
    j["solver"] = solver;
    return j;
}

inline void print_record(std::ostream &out, const Options &opt, const SolveResult &res, const std::string &solver)
{
    if (opt.format == "json") {
        out << to_json(opt.n, res, solver).dump() << '\n';
        return;
    }
    out << "n: " << opt.n << '\n'
        << "type: " << res.k << '\n'
        << "partition: " << to_string(res.partition) << '\n'
        << "conjugate: " << to_string(res.conjugate) << '\n'
        << "value: " << res.value << '\n'
        << "solver: " << solver << '\n'
        << render(res.partition) << '\n';
}

inline int report_infeasible(std::ostream &err, const Options &opt)
{
    err << "no diagram of size " << opt.n << " has type " << *opt.type << '\n';
    return infeasible;
}

inline int cmd_solve(const Options &opt, std::ostream &out, std::ostream &err)
{
    const FuncTable f = resolve_func_spec(opt.f_spec, opt.n);
    const FuncTable fstar = resolve_func_spec(opt.fstar_spec, opt.n);
    std::optional<SolveResult> res;
    if (opt.type)
        res = solve_for_type(opt.n, *opt.type, f, fstar);
    else
        res = solve(opt.n, f, fstar);
    if (!res)
        return report_infeasible(err, opt);
    print_record(out, opt, *res, "dp");
    return ok;
}

inline int cmd_oracle(const Options &opt, std::ostream &out, std::ostream &err)
{
    const FuncTable f = resolve_func_spec(opt.f_spec, opt.n);
    const FuncTable fstar = resolve_func_spec(opt.fstar_spec, opt.n);
    const auto res = brute_force_solve(opt.n, f, fstar, opt.type, opt.oracle_limit);
    if (opt.verify) {
        std::optional<SolveResult> dp;
        if (opt.type)
            dp = solve_for_type(opt.n, *opt.type, f, fstar);
        else
            dp = solve(opt.n, f, fstar);
        if (dp.has_value() != res.has_value() ||
            (dp && (dp->value != res->value || dp->partition != res->partition))) {
            err << "solver/oracle mismatch: dp "
                << (dp ? to_string(dp->partition) + " value " + std::to_string(dp->value) : "absent")
                << ", oracle "
                << (res ? to_string(res->partition) + " value " + std::to_string(res->value) : "absent")
                << '\n';
            return internal;
        }
    }
    if (!res)
        return report_infeasible(err, opt);
    print_record(out, opt, *res, "oracle");
    return ok;
}

inline int cmd_enumerate(const Options &opt, std::ostream &out)
{
    std::size_t count = 0;
    for (const Partition &p : enumerate_partitions(opt.n, opt.oracle_limit)) {
        if (opt.type && type_of(p) != *opt.type)
            continue;
        ++count;
        if (!opt.count)
            out << to_string(p) << '\n';
    }
    if (opt.count)
        out << count << '\n';
    return ok;
}

inline int cmd_eval(const Options &opt, std::ostream &out)
{
    if (opt.n < 1)
        throw input_error("n must be at least 1");
    const Partition p = parse_partition(opt.partition);
    if (p.n() != opt.n)
        throw input_error("partition " + to_string(p) + " sums to " + std::to_string(p.n()) +
                          ", not n = " + std::to_string(opt.n));
    const FuncTable f = resolve_func_spec(opt.f_spec, opt.n);
    const FuncTable fstar = resolve_func_spec(opt.fstar_spec, opt.n);
    out << objective(p, f, fstar) << '\n';
    return ok;
}

inline int cmd_render(const Options &opt, std::ostream &out)
{
    out << render(parse_partition(opt.partition)) << '\n';
    return ok;
}

inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    Options opt;
    CLI::App app{"Optimization over Young diagrams: minimize f(lambda) + f*(lambda*) over partitions of n"};
    app.require_subcommand(1);

    auto add_problem = [&](CLI::App *sub, bool with_funcs) {
        sub->add_option("--n", opt.n, "Number of cells")->required();
        if (with_funcs) {
            sub->add_option("--f", opt.f_spec, "Row function: square | identity | zero | expr:<e> | table:<path>")
                ->required();
            sub->add_option("--fstar", opt.fstar_spec, "Column function, same syntax as --f")->required();
        }
    };
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto *solve_cmd = app.add_subcommand("solve", "Solve with the layered dynamic program");
    add_problem(solve_cmd, true);
    solve_cmd->add_option("--type", opt.type, "Restrict to diagrams with exactly this many distinct parts");
    add_format(solve_cmd);

    auto *oracle_cmd = app.add_subcommand("oracle", "Solve by exhaustive enumeration");
    add_problem(oracle_cmd, true);
    oracle_cmd->add_option("--type", opt.type, "Restrict to diagrams with exactly this many distinct parts");
    add_format(oracle_cmd);
    oracle_cmd->add_flag("--verify", opt.verify, "Also run the solver and fail on any disagreement");
    oracle_cmd->add_option("--oracle-limit", opt.oracle_limit, "Largest n the oracle accepts");

    auto *enum_cmd = app.add_subcommand("enumerate", "List partitions of n in decreasing lexicographic order");
    add_problem(enum_cmd, false);
    enum_cmd->add_option("--type", opt.type, "Only partitions with exactly this many distinct parts");
    enum_cmd->add_flag("--count", opt.count, "Print only the number of partitions");
    enum_cmd->add_option("--oracle-limit", opt.oracle_limit, "Largest n accepted");

    auto *eval_cmd = app.add_subcommand("eval", "Evaluate f(lambda) + f*(lambda*) for one partition");
    add_problem(eval_cmd, true);
    eval_cmd->add_option("--partition", opt.partition, "Comma-separated parts, e.g. 3,2,1")->required();

    auto *render_cmd = app.add_subcommand("render", "Draw the Young diagram of a partition");
    render_cmd->add_option("--partition", opt.partition, "Comma-separated parts, e.g. 3,2,1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (opt.type && *opt.type < 1)
            throw input_error("--type must be at least 1");
        if (*solve_cmd)
            return cmd_solve(opt, out, err);
        if (*oracle_cmd)
            return cmd_oracle(opt, out, err);
        if (*enum_cmd)
            return cmd_enumerate(opt, out);
        if (*eval_cmd)
            return cmd_eval(opt, out);
        return cmd_render(opt, out);
    } catch (const input_error &e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const internal_error &e) {
        err << "internal error: " << e.what() << '\n';
        return internal;
    }
}

} // namespace youngopt::cli
