#include "listaccess/generator.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace listaccess;
using D = GeneratorSpec::Distribution;

namespace
{

std::string joined(RequestSequence const & r)
{
    std::string out;
    for (auto const & e : r) {
        if (!out.empty())
            out += ' ';
        out += e.token();
    }
    return out;
}

GeneratorSpec spec_of(std::string_view dist, std::size_t l, std::size_t n, std::uint64_t seed)
{
    GeneratorSpec s;
    s.set_distribution(dist);
    s.list_size = l;
    s.length = n;
    s.seed = seed;
    return s;
}

} // namespace

TEST(splitmix64, reference_stream)
{
    // reference values from an independent implementation of the recurrence
    SplitMix64 rng(0);
    EXPECT_EQ(0xe220a8397b1dcdafULL, rng.next());
    EXPECT_EQ(0x6e789e6aa1b965f4ULL, rng.next());
    EXPECT_EQ(0x06c45d188009454fULL, rng.next());
}

TEST(splitmix64, unit_interval)
{
    SplitMix64 rng(1);
    for (int k = 0; k < 10000; ++k) {
        auto u = rng.unit();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(generator, element_names)
{
    EXPECT_EQ("A", element_name(1).token());
    EXPECT_EQ("Z", element_name(26).token());
    EXPECT_EQ("E27", element_name(27).token());
    EXPECT_EQ("E100", element_name(100).token());
}

TEST(generator, reverse_table1_row1)
{
    auto w = generate(spec_of("reverse", 11, 11, 0));
    EXPECT_EQ("K J I H G F E D C B A", joined(w.requests));
    EXPECT_EQ("A B C D E F G H I J K", joined(w.list.elements()));
    EXPECT_EQ(3u, w.buffer_capacity);
}

TEST(generator, reverse_small)
{
    EXPECT_EQ("C B A", joined(generate(spec_of("reverse", 3, 3, 0)).requests));
}

TEST(generator, uniform_golden_sequence)
{
    EXPECT_EQ("C E B D E A D C A A D B A E A A C B C A",
              joined(generate(spec_of("uniform", 5, 20, 7)).requests));
}

TEST(generator, burst_golden_sequence)
{
    EXPECT_EQ("B B B D D D C C C A", joined(generate(spec_of("burst:3", 4, 10, 42)).requests));
}

TEST(generator, zipf_favours_low_ranks)
{
    auto w = generate(spec_of("zipf:1.2", 10, 10000, 99));
    std::map<std::string, int> freq;
    for (auto const & e : w.requests)
        ++freq[e.token()];
    EXPECT_GT(freq["A"], freq["J"]);
}

TEST(generator, deterministic_per_seed)
{
    for (auto dist : {"uniform", "zipf:0.8", "burst:4"}) {
        auto a = generate(spec_of(dist, 12, 200, 5));
        EXPECT_EQ(a, generate(spec_of(dist, 12, 200, 5))) << dist;
        EXPECT_NE(a.requests, generate(spec_of(dist, 12, 200, 6)).requests) << dist;
    }
}

TEST(generator, requests_are_list_members)
{
    for (auto dist : {"uniform", "zipf:2", "burst:2"}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto w = generate(spec_of(dist, 30, 100, seed));
            for (auto const & e : w.requests)
                ASSERT_TRUE(w.list.contains(e));
        }
    }
}

TEST(generator, burst_runs_have_fixed_length)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::size_t run = 1 + seed % 5;
        auto w = generate(spec_of("burst:" + std::to_string(run), 6, 37, seed));
        ASSERT_EQ(37u, w.requests.size());
        for (std::size_t t = 0; t < w.requests.size(); ++t)
            ASSERT_EQ(w.requests[t - t % run], w.requests[t]);
    }
}

TEST(generator, invalid_specs)
{
    GeneratorSpec s;
    EXPECT_THROW(s.set_distribution("zipf:0"), InvalidSpec);
    EXPECT_THROW(s.set_distribution("zipf:-1"), InvalidSpec);
    EXPECT_THROW(s.set_distribution("zipf:"), InvalidSpec);
    EXPECT_THROW(s.set_distribution("burst:0"), InvalidSpec);
    EXPECT_THROW(s.set_distribution("uniform:3"), InvalidSpec);
    EXPECT_THROW(s.set_distribution("normal"), InvalidSpec);

    EXPECT_THROW(generate(spec_of("reverse", 4, 5, 0)), InvalidSpec);
    EXPECT_THROW(generate(spec_of("uniform", 0, 5, 0)), InvalidSpec);
}

TEST(generator, distribution_tokens)
{
    EXPECT_EQ("zipf:1.2", spec_of("zipf:1.2", 3, 0, 0).distribution_token());
    EXPECT_EQ("burst:4", spec_of("burst:4", 3, 0, 0).distribution_token());
    EXPECT_EQ("uniform", spec_of("uniform", 3, 0, 0).distribution_token());
}
