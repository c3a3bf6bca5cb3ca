#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "packlab/cnf.hpp"
#include "packlab/errors.hpp"

namespace packlab {
namespace {

constexpr Literal pos(unsigned v) { return {v, true}; }
constexpr Literal neg(unsigned v) { return {v, false}; }

TEST(Dimacs, Examples) {
    const auto a = parse_dimacs("p cnf 1 1\n1 1 1 0\n");
    EXPECT_EQ(a.variable_count, 1u);
    EXPECT_EQ(a.clauses, (std::vector<Clause>{{pos(1), pos(1), pos(1)}}));
    const auto b = parse_dimacs("p cnf 2 1\n1 -2 -2 0\n");
    EXPECT_EQ(b.clauses, (std::vector<Clause>{{pos(1), neg(2), neg(2)}}));
}

TEST(Dimacs, CommentsAndMultiLineClauses) {
    const auto f = parse_dimacs("c hello\np cnf 3 2\n1 2\n3 0 -1 -2 -3 0\n%\n");
    ASSERT_EQ(f.clauses.size(), 2u);
    EXPECT_EQ(f.clauses[1], (Clause{neg(1), neg(2), neg(3)}));
}

TEST(Dimacs, Errors) {
    EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 -2 0\n"), InputError);
    EXPECT_THROW(parse_dimacs("1 2 3 0\n"), ParseError);
    EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 3 0\n"), ParseError);
    EXPECT_THROW(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), ParseError);
    EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 3\n"), ParseError);
    try {
        parse_dimacs("p cnf 3 1\n1 x 3 0\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.offset(), 2u);
    }
}

TEST(Dimacs, RoundTrip) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto f = gen::random_cnf(1 + i % 6, i % 5, rng);
        EXPECT_EQ(parse_dimacs(format_dimacs(f)), f);
    }
}

TEST(BruteForceSat, Examples) {
    EXPECT_EQ(brute_force_sat(parse_dimacs("p cnf 1 1\n1 1 1 0\n")), (Assignment{true}));
    EXPECT_EQ(brute_force_sat(parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")), std::nullopt);
    EXPECT_EQ(brute_force_sat(CnfFormula{3, {{pos(1), pos(2), neg(3)}}}), (Assignment{false, false, false}));
    EXPECT_EQ(brute_force_sat(CnfFormula{2, {}}), (Assignment{false, false}));
    EXPECT_THROW(brute_force_sat(CnfFormula{21, {}}), BudgetError);
}

// The result is the first satisfying assignment in lexicographic order.
TEST(BruteForceSat, LexicographicallyFirst) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        const unsigned n = 1 + i % 5;
        const auto f = gen::random_cnf(n, 1 + i % 9, rng);
        std::optional<Assignment> first;
        for (std::uint32_t bits = 0; bits < (1u << n) && !first; ++bits) {
            Assignment a(n);
            for (unsigned v = 0; v < n; ++v) a[v] = (bits >> (n - 1 - v)) & 1U;
            if (satisfies(f, a)) first = a;
        }
        EXPECT_EQ(brute_force_sat(f), first);
    }
}

}  // namespace
}  // namespace packlab
