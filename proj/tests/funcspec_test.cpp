#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "test_support.hpp"
#include "youngopt/funcspec.hpp"

using namespace youngopt;

TEST(ParseExpr, Examples)
{
    EXPECT_EQ(evaluate(parse_expr("k^2"), 3), 9);
    EXPECT_EQ(evaluate(parse_expr("2*k+1"), 5), 11);
    EXPECT_EQ(evaluate(parse_expr("(k-3)^2 - k"), 2), -1);
}

TEST(ParseExpr, Precedence)
{
    EXPECT_EQ(evaluate(parse_expr("2*k^2"), 3), 18);
    EXPECT_EQ(evaluate(parse_expr("(2*k)^2"), 3), 36);
    EXPECT_EQ(evaluate(parse_expr("-k^2"), 3), -9);
    EXPECT_EQ(evaluate(parse_expr("(-k)^2"), 3), 9);
    EXPECT_EQ(evaluate(parse_expr("10 - 3 - 2"), 1), 5);
    EXPECT_EQ(evaluate(parse_expr("1 + 2 * 3"), 1), 7);
    EXPECT_EQ(evaluate(parse_expr("--k"), 4), 4);
    EXPECT_EQ(evaluate(parse_expr("k^0"), 0), 1);
    EXPECT_EQ(parse_expr("-k^2"), FuncExpr::negate(FuncExpr::power(FuncExpr::variable(), 2)));
}

TEST(ParseExpr, Errors)
{
    EXPECT_THROW(parse_expr(""), syntax_error);
    EXPECT_THROW(parse_expr("   "), syntax_error);
    EXPECT_THROW(parse_expr("k^-1"), syntax_error);
    EXPECT_THROW(parse_expr("k^k"), syntax_error);
    EXPECT_THROW(parse_expr("k^(2)"), syntax_error);
    EXPECT_THROW(parse_expr("k^2^3"), syntax_error);
    EXPECT_THROW(parse_expr("(k"), syntax_error);
    EXPECT_THROW(parse_expr("k/2"), syntax_error);
    EXPECT_THROW(parse_expr("x"), syntax_error);
    EXPECT_THROW(parse_expr("2 k"), syntax_error);
    EXPECT_THROW(parse_expr("99999999999999999999"), syntax_error);
    try {
        parse_expr("k + ?");
        FAIL();
    } catch (const syntax_error &e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(ParseExpr, OverflowIsInputError)
{
    EXPECT_THROW(evaluate(parse_expr("k^64"), 2), input_error);
    EXPECT_EQ(evaluate(parse_expr("k^63"), -2), std::numeric_limits<std::int64_t>::min());
    EXPECT_EQ(evaluate(parse_expr("k^1000"), -1), 1);
}

namespace {

// Random well-formed expression trees over a small vocabulary.
FuncExpr random_expr(std::mt19937_64 &rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 6 : 1);
    switch (pick(rng)) {
    case 0: return FuncExpr::literal(std::uniform_int_distribution<int>(0, 20)(rng));
    case 1: return FuncExpr::variable();
    case 2: return FuncExpr::negate(random_expr(rng, depth - 1));
    case 3: return FuncExpr::power(random_expr(rng, depth - 1), std::uniform_int_distribution<int>(0, 3)(rng));
    case 4: return FuncExpr::binary(FuncExpr::Kind::add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 5: return FuncExpr::binary(FuncExpr::Kind::sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return FuncExpr::binary(FuncExpr::Kind::mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    }
}

} // namespace

TEST(ParseExpr, PrintParseRoundTrip)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const FuncExpr e = random_expr(rng, 4);
        const std::string text = to_string(e);
        ASSERT_EQ(parse_expr(text), e) << text;
    }
    for (const char *src : {"k^2", "2*k+1", "(k-3)^2 - k", "-k^2", "-(k^2)", "(-k)^3", "1-(2-3)"})
        ASSERT_EQ(parse_expr(to_string(parse_expr(src))), parse_expr(src)) << src;
}

TEST(Tabulate, Examples)
{
    EXPECT_EQ(tabulate(parse_expr("k^2"), 6).values().size(), 6u);
    EXPECT_EQ(tabulate(parse_expr("k^2"), 6), FuncTable({1, 4, 9, 16, 25, 36}));
    EXPECT_EQ(tabulate(parse_expr("0"), 4), FuncTable({0, 0, 0, 0}));
    EXPECT_EQ(tabulate(parse_expr("k"), 3), FuncTable({1, 2, 3}));
    EXPECT_THROW(tabulate(parse_expr("k"), 0), input_error);
}

TEST(Tabulate, SquaresAgreeWithDirectTable)
{
    for (int n = 1; n <= 100; ++n)
        ASSERT_EQ(tabulate(parse_expr("k^2"), n), youngopt::testing::squares(n));
}

TEST(Tabulate, MagnitudeBoundNamesK)
{
    // 2^31 at k = 2 is allowed, 3^31 at k = 3 is not
    EXPECT_NO_THROW(tabulate(parse_expr("k^31"), 2));
    try {
        tabulate(parse_expr("k^31"), 5);
        FAIL();
    } catch (const input_error &e) {
        EXPECT_NE(std::string(e.what()).find("k = 3"), std::string::npos) << e.what();
    }
    try {
        tabulate(parse_expr("k^40"), 5);
        FAIL();
    } catch (const input_error &e) {
        EXPECT_NE(std::string(e.what()).find("k = 2"), std::string::npos) << e.what();
    }
}

class TableFile : public ::testing::Test {
protected:
    std::string write(const std::string &content)
    {
        path_ = std::filesystem::temp_directory_path() /
                ("youngopt_table_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++) + ".txt");
        std::ofstream(path_) << content;
        return path_.string();
    }
    void TearDown() override { std::filesystem::remove(path_); }

    std::filesystem::path path_;
    static inline int counter_ = 0;
};

TEST_F(TableFile, LoadsExactlyN)
{
    EXPECT_EQ(load_table(write("1 4 9 16 25 36"), 6), youngopt::testing::squares(6));
    EXPECT_EQ(load_table(write("-1\n-4\t-9\n"), 3), FuncTable({-1, -4, -9}));
}

TEST_F(TableFile, CountMismatch)
{
    try {
        load_table(write("1 2"), 3);
        FAIL();
    } catch (const input_error &e) {
        EXPECT_STREQ(e.what(), "expected 3 values, found 2");
    }
    EXPECT_THROW(load_table(write("1 2 3 4"), 3), input_error);
}

TEST_F(TableFile, BadTokens)
{
    EXPECT_THROW(load_table(write("1 2.5 3"), 3), input_error);
    EXPECT_THROW(load_table(write("1 x 3"), 3), input_error);
    EXPECT_THROW(load_table(write("1 2 2147483649"), 3), input_error);
    EXPECT_THROW(load_table(write("1 2 99999999999999999999999"), 3), input_error);
    EXPECT_NO_THROW(load_table(write("1 2 2147483648"), 3));
    EXPECT_THROW(load_table("/nonexistent/youngopt/table.txt", 3), input_error);
}

TEST_F(TableFile, FuncSpecs)
{
    EXPECT_EQ(resolve_func_spec("square", 4), youngopt::testing::squares(4));
    EXPECT_EQ(resolve_func_spec("identity", 4), youngopt::testing::identity(4));
    EXPECT_EQ(resolve_func_spec("zero", 4), youngopt::testing::zeros(4));
    EXPECT_EQ(resolve_func_spec("expr:2*k+1", 3), FuncTable({3, 5, 7}));
    EXPECT_EQ(resolve_func_spec("table:" + write("5 6 7"), 3), FuncTable({5, 6, 7}));
    EXPECT_THROW(resolve_func_spec("cube", 3), input_error);
    EXPECT_THROW(resolve_func_spec("expr:k+", 3), syntax_error);
}
