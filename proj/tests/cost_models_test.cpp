#include "listaccess/cost_models.hpp"

#include <gtest/gtest.h>

using namespace listaccess;

TEST(cost_models, access_cost_examples)
{
    EXPECT_EQ(9u, access_cost(CostModel::full(), 9, 9));
    EXPECT_EQ(0u, access_cost(CostModel::partial(), 1, 5));
    // |9 - ceil(10 / 2)|
    EXPECT_EQ(4u, access_cost(CostModel::centralized(), 9, 9));
    EXPECT_EQ(7u, access_cost(CostModel::pd(3), 7, 9));
}

TEST(cost_models, access_cost_out_of_range)
{
    EXPECT_THROW(access_cost(CostModel::full(), 0, 3), OutOfRange);
    EXPECT_THROW(access_cost(CostModel::partial(), 4, 3), OutOfRange);
}

TEST(cost_models, center_convention)
{
    EXPECT_EQ(1u, center_position(1));
    EXPECT_EQ(2u, center_position(2));
    EXPECT_EQ(2u, center_position(3));
    EXPECT_EQ(3u, center_position(4));
    EXPECT_EQ(5u, center_position(9));
    EXPECT_EQ(6u, center_position(10));
}

TEST(cost_models, exchange_cost_examples)
{
    EXPECT_EQ(0u, exchange_cost(CostModel::full(), ExchangeKind::FreeEligible, 8));
    EXPECT_EQ(3u, exchange_cost(CostModel::full(), ExchangeKind::Paid, 3));
    EXPECT_EQ(4u, exchange_cost(CostModel::pd(2), ExchangeKind::FreeEligible, 2));
    EXPECT_EQ(6u, exchange_cost(CostModel::pd(2), ExchangeKind::Paid, 3));
    EXPECT_EQ(0u, exchange_cost(CostModel::partial(), ExchangeKind::FreeEligible, 5));
    EXPECT_EQ(0u, exchange_cost(CostModel::centralized(), ExchangeKind::FreeEligible, 5));
    EXPECT_THROW(exchange_cost(CostModel::centralized(), ExchangeKind::Paid, 1), Unsupported);
}

TEST(cost_models, full_minus_partial_is_one)
{
    for (std::size_t l = 1; l <= 30; ++l)
        for (std::size_t i = 1; i <= l; ++i)
            ASSERT_EQ(1u, access_cost(CostModel::full(), i, l) - access_cost(CostModel::partial(), i, l));
}

TEST(cost_models, monotone_and_unimodal)
{
    for (std::size_t l = 1; l <= 30; ++l) {
        auto c = center_position(l);
        EXPECT_EQ(0u, access_cost(CostModel::centralized(), c, l));
        for (std::size_t i = 2; i <= l; ++i) {
            for (auto m : {CostModel::full(), CostModel::partial(), CostModel::pd(4)})
                ASSERT_LE(access_cost(m, i - 1, l), access_cost(m, i, l));
            auto prev = access_cost(CostModel::centralized(), i - 1, l);
            auto cur = access_cost(CostModel::centralized(), i, l);
            if (i <= c)
                ASSERT_GT(prev, cur);
            else
                ASSERT_LT(prev, cur);
        }
    }
}

TEST(cost_models, zero_transpositions_cost_nothing)
{
    for (auto m : {CostModel::full(), CostModel::partial(), CostModel::pd(5), CostModel::centralized()})
        for (auto k : {ExchangeKind::FreeEligible, ExchangeKind::Paid})
            EXPECT_EQ(0u, exchange_cost(m, k, 0)) << m.token();
}

TEST(cost_models, tokens)
{
    EXPECT_EQ(CostModel::full(), CostModel::parse("full"));
    EXPECT_EQ(CostModel::partial(), CostModel::parse("partial"));
    EXPECT_EQ(CostModel::pd(3), CostModel::parse("pd:3"));
    EXPECT_EQ(CostModel::centralized(), CostModel::parse("centralized"));
    EXPECT_EQ("pd:12", CostModel::pd(12).token());
    EXPECT_THROW(CostModel::parse("pd:0"), std::invalid_argument);
    EXPECT_THROW(CostModel::parse("pd:"), std::invalid_argument);
    EXPECT_THROW(CostModel::parse("pd:2x"), std::invalid_argument);
    EXPECT_THROW(CostModel::parse("Full"), std::invalid_argument);
    EXPECT_THROW(CostModel::pd(0), std::invalid_argument);
}
