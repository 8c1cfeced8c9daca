#pragma once

// Building FuncTable values from user input: a one-variable integer
// expression in k evaluated at k = 1..n, or a whitespace-separated table file.
//
// Grammar (whitespace insignificant):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' integer)?
//   atom   := integer | 'k' | '(' expr ')'
// so "-k^2" reads as -(k^2).

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "error.hpp"

namespace youngopt {

class syntax_error : public input_error {
public:
    syntax_error(const std::string &msg, std::size_t position)
        : input_error(msg + " at position " + std::to_string(position)), position_(position)
    {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

struct FuncExpr {
    enum class Kind { literal, variable, negate, add, sub, mul, pow };

    Kind kind = Kind::literal;
    std::int64_t value = 0;          // literal value, or exponent for pow
    std::vector<FuncExpr> operands;  // 1 for negate/pow, 2 for add/sub/mul

    static FuncExpr literal(std::int64_t v) { return {Kind::literal, v, {}}; }
    static FuncExpr variable() { return {Kind::variable, 0, {}}; }
    static FuncExpr negate(FuncExpr a) { return {Kind::negate, 0, {std::move(a)}}; }
    static FuncExpr power(FuncExpr base, std::int64_t exp) { return {Kind::pow, exp, {std::move(base)}}; }
    static FuncExpr binary(Kind op, FuncExpr a, FuncExpr b)
    {
        FuncExpr e{op, 0, {}};
        e.operands.push_back(std::move(a));
        e.operands.push_back(std::move(b));
        return e;
    }

    bool operator==(const FuncExpr &) const = default;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view src) : src_(src) {}

    FuncExpr parse()
    {
        skip_ws();
        if (pos_ == src_.size())
            throw syntax_error("empty expression", pos_);
        FuncExpr e = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw syntax_error(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool accept(char ch)
    {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    FuncExpr expr()
    {
        FuncExpr lhs = term();
        while (true) {
            if (accept('+'))
                lhs = FuncExpr::binary(FuncExpr::Kind::add, std::move(lhs), term());
            else if (accept('-'))
                lhs = FuncExpr::binary(FuncExpr::Kind::sub, std::move(lhs), term());
            else
                return lhs;
        }
    }

    FuncExpr term()
    {
        FuncExpr lhs = factor();
        while (accept('*'))
            lhs = FuncExpr::binary(FuncExpr::Kind::mul, std::move(lhs), factor());
        return lhs;
    }

    FuncExpr factor()
    {
        if (accept('-'))
            return FuncExpr::negate(factor());
        FuncExpr base = atom();
        if (accept('^')) {
            skip_ws();
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw syntax_error("exponent must be a non-negative integer literal", pos_);
            return FuncExpr::power(std::move(base), integer());
        }
        return base;
    }

    FuncExpr atom()
    {
        skip_ws();
        if (pos_ >= src_.size())
            throw syntax_error("unexpected end of expression", pos_);
        const char ch = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch)))
            return FuncExpr::literal(integer());
        if (ch == 'k') {
            ++pos_;
            return FuncExpr::variable();
        }
        if (ch == '(') {
            ++pos_;
            FuncExpr inner = expr();
            if (!accept(')'))
                throw syntax_error("expected ')'", pos_);
            return inner;
        }
        throw syntax_error(std::string("unexpected '") + ch + "'", pos_);
    }

    std::int64_t integer()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        std::int64_t v = 0;
        const auto [end, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (ec != std::errc{})
            throw syntax_error("integer literal out of range", start);
        return v;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

inline bool is_atomic(const FuncExpr &e)
{
    return e.kind == FuncExpr::Kind::literal || e.kind == FuncExpr::Kind::variable;
}

} // namespace detail

inline FuncExpr parse_expr(std::string_view src)
{
    return detail::ExprParser(src).parse();
}

/// Canonical printed form; parse_expr(to_string(e)) == e.
inline std::string to_string(const FuncExpr &e)
{
    using K = FuncExpr::Kind;
    auto wrapped = [](const FuncExpr &x) {
        return detail::is_atomic(x) ? to_string(x) : "(" + to_string(x) + ")";
    };
    switch (e.kind) {
    case K::literal: return std::to_string(e.value);
    case K::variable: return "k";
    case K::negate: return "-" + wrapped(e.operands[0]);
    case K::pow: return wrapped(e.operands[0]) + "^" + std::to_string(e.value);
    case K::add: return "(" + to_string(e.operands[0]) + " + " + to_string(e.operands[1]) + ")";
    case K::sub: return "(" + to_string(e.operands[0]) + " - " + to_string(e.operands[1]) + ")";
    case K::mul: return "(" + to_string(e.operands[0]) + " * " + to_string(e.operands[1]) + ")";
    }
    throw internal_error("unknown expression node");
}

/// Exact evaluation at k; throws input_error on 64-bit overflow.
inline std::int64_t evaluate(const FuncExpr &e, std::int64_t k)
{
    using K = FuncExpr::Kind;
    const char *ovf = "expression overflows 64-bit range";
    switch (e.kind) {
    case K::literal: return e.value;
    case K::variable: return k;
    case K::negate: return checked_sub<input_error>(0, evaluate(e.operands[0], k), ovf);
    case K::add: return checked_add<input_error>(evaluate(e.operands[0], k), evaluate(e.operands[1], k), ovf);
    case K::sub: return checked_sub<input_error>(evaluate(e.operands[0], k), evaluate(e.operands[1], k), ovf);
    case K::mul: return checked_mul<input_error>(evaluate(e.operands[0], k), evaluate(e.operands[1], k), ovf);
    case K::pow: {
        const std::int64_t base = evaluate(e.operands[0], k);
        if (e.value == 0)
            return 1;
        if (base == 0 || base == 1)
            return base;
        if (base == -1)
            return e.value % 2 == 0 ? 1 : -1;
        // |base| >= 2, so the loop overflows within 63 steps
        std::int64_t acc = 1;
        for (std::int64_t i = 0; i < e.value; ++i)
            acc = checked_mul<input_error>(acc, base, ovf);
        return acc;
    }
    }
    throw internal_error("unknown expression node");
}

/// [e(1), ..., e(n)].
inline FuncTable tabulate(const FuncExpr &e, int n)
{
    if (n < 1)
        throw input_error("n must be at least 1");
    std::vector<std::int64_t> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        std::int64_t v;
        try {
            v = evaluate(e, k);
        } catch (const input_error &) {
            throw input_error("expression overflows at k = " + std::to_string(k));
        }
        if (v > func_value_bound || v < -func_value_bound)
            throw input_error("expression value " + std::to_string(v) + " at k = " +
                              std::to_string(k) + " exceeds magnitude bound 2^31");
        values.push_back(v);
    }
    return FuncTable(std::move(values));
}

/// Parses exactly n whitespace-separated signed decimal integers.
inline FuncTable parse_table(std::string_view text, int n)
{
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (true) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == text.size())
            break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        const std::string_view tok = text.substr(pos, end - pos);
        std::int64_t v = 0;
        const char *first = tok.data();
        if (tok.size() > 1 && tok.front() == '+')
            ++first;
        const auto [stop, ec] = std::from_chars(first, tok.data() + tok.size(), v);
        if (ec == std::errc::result_out_of_range)
            throw input_error("table value \"" + std::string(tok) + "\" exceeds magnitude bound 2^31");
        if (ec != std::errc{} || stop != tok.data() + tok.size())
            throw input_error("non-integer token \"" + std::string(tok) + "\" in table");
        if (v > func_value_bound || v < -func_value_bound)
            throw input_error("table value " + std::string(tok) + " at position " +
                              std::to_string(values.size() + 1) + " exceeds magnitude bound 2^31");
        values.push_back(v);
        pos = end;
    }
    if (values.size() != static_cast<std::size_t>(n))
        throw input_error("expected " + std::to_string(n) + " values, found " +
                          std::to_string(values.size()));
    return FuncTable(std::move(values));
}

inline FuncTable load_table(const std::string &path, int n)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot read table file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str(), n);
}

/// Resolves a function specifier: "square", "identity", "zero",
/// "expr:<expression>" or "table:<path>".
inline FuncTable resolve_func_spec(std::string_view spec, int n)
{
    if (spec == "square")
        return tabulate(parse_expr("k^2"), n);
    if (spec == "identity")
        return tabulate(parse_expr("k"), n);
    if (spec == "zero")
        return tabulate(parse_expr("0"), n);
    if (spec.starts_with("expr:"))
        return tabulate(parse_expr(spec.substr(5)), n);
    if (spec.starts_with("table:"))
        return load_table(std::string(spec.substr(6)), n);
    throw input_error("unknown function specifier \"" + std::string(spec) +
                      "\" (expected square, identity, zero, expr:<...> or table:<path>)");
}

} // namespace youngopt
