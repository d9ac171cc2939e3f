#include "oracles.hpp"

#include <bookramsey/constructions.hpp>
#include <bookramsey/enumerate.hpp>
#include <bookramsey/patterns.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace bookramsey;

namespace {

std::vector<std::vector<int>> patterns_up_to(int total)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int min_part, int left) -> void {
        if (!cur.empty())
            out.push_back(cur);
        for (int a = min_part; a <= left; ++a) {
            cur.push_back(a);
            self(self, a, left - a);
            cur.pop_back();
        }
    };
    rec(rec, 1, total);
    return out;
}

} // namespace

TEST(FindMultipartite, Examples)
{
    const auto e = find_multipartite(Graph::complete(4), {1, 1, 1});
    ASSERT_TRUE(e);
    EXPECT_EQ(e->parts, (std::vector<std::vector<int>>{{0}, {1}, {2}}));
    EXPECT_FALSE(find_multipartite(make_cycle(5), {2, 2}));

    const Graph w = make_section2_witness(3, 2, 2, 9);
    const MultipartitePattern m{1, 2, 2};
    const auto hit = find_multipartite(w, m);
    EXPECT_FALSE(hit);
    EXPECT_EQ(hit.has_value(), oracle::contains_multipartite(w, m.parts()));
}

TEST(FindMultipartite, ContainsAndC4)
{
    EXPECT_TRUE(is_c4_free(make_er_polarity(2)));
    EXPECT_FALSE(is_c4_free(make_multipartite({2, 3})));
    EXPECT_TRUE(contains_multipartite(Graph::complete(5), {1, 1, 1, 1, 1}));
    EXPECT_FALSE(contains_multipartite(Graph::complete(4), {1, 1, 1, 1, 1}));
}

TEST(FindMultipartite, AgreesWithBruteForceOnAllSmallGraphs)
{
    const auto pats = patterns_up_to(5);
    for (int order = 0; order <= 7; ++order)
        for (const Graph& g : enumerate_graphs(order))
            for (const auto& parts : pats) {
                const MultipartitePattern m(parts);
                const auto e = find_multipartite(g, m);
                ASSERT_EQ(e.has_value(), oracle::contains_multipartite(g, parts))
                    << "order " << order << " pattern " << m.to_string();
                if (e) {
                    ASSERT_TRUE(verify_embedding(g, m, *e));
                }
            }
}

TEST(FindMultipartite, AgreesWithBruteForceOnRandomGraphs)
{
    std::mt19937_64 rng(21);
    const auto pats = patterns_up_to(6);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(6 + static_cast<int>(rng() % 5), 0.5 + 0.1 * (trial % 4), rng);
        for (const auto& parts : pats) {
            const MultipartitePattern m(parts);
            EXPECT_EQ(contains_multipartite(g, m), oracle::contains_multipartite(g, parts));
        }
    }
}

TEST(FindMultipartite, MonotoneInPartSizes)
{
    std::mt19937_64 rng(4);
    const auto pats = patterns_up_to(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_graph(12, 0.7, rng);
        for (const auto& a : pats) {
            if (!contains_multipartite(g, MultipartitePattern(a)))
                continue;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 1)
                    continue;
                auto b = a;
                --b[i];
                EXPECT_TRUE(contains_multipartite(g, MultipartitePattern(b)));
            }
        }
    }
}

TEST(FindBook, Examples)
{
    EXPECT_TRUE(find_book(Graph::complete(5), {2, 5}));
    EXPECT_FALSE(find_book(make_cycle(6), {2, 4}));
    EXPECT_FALSE(find_book(complement(make_section2_witness(3, 2, 2, 9)), {2, 9}));
    const auto e = find_book(make_book({3, 7}), {3, 7});
    ASSERT_TRUE(e);
    EXPECT_TRUE(verify_embedding(make_book({3, 7}), BookPattern(3, 7), *e));
}

TEST(BookSize, Examples)
{
    EXPECT_EQ(book_size(Graph::complete(6), 2), 6);
    EXPECT_EQ(book_size(Graph::empty(5), 1), 1);
    EXPECT_EQ(book_size(make_book({3, 10}), 3), 10);
    EXPECT_EQ(book_size(make_cycle(5), 3), 0);
}

TEST(FindBook, ConsistentWithBookSizeAndOracle)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const Graph g = oracle::random_graph(n, 0.2 + 0.15 * (trial % 5), rng);
        for (int k = 1; k <= 3; ++k) {
            const int size = book_size(g, k);
            if (n <= 14) {
                EXPECT_EQ(size, oracle::book_size(g, k));
            }
            for (int total = k + 1; total <= n; ++total) {
                const auto e = find_book(g, {k, total});
                EXPECT_EQ(e.has_value(), size >= total);
                if (e) {
                    EXPECT_TRUE(verify_embedding(g, BookPattern(k, total), *e));
                }
            }
        }
    }
}

TEST(ChromaticInfo, Examples)
{
    const auto a = chromatic_info(make_multipartite({1, 2, 2}));
    EXPECT_EQ(a.chi, 3);
    EXPECT_EQ(a.surplus, 1);
    const auto b = chromatic_info(make_cycle(5));
    EXPECT_EQ(b.chi, 3);
    EXPECT_EQ(b.surplus, 1);
    const auto c = chromatic_info(Graph::complete(4));
    EXPECT_EQ(c.chi, 4);
    EXPECT_EQ(c.surplus, 1);
    EXPECT_THROW(chromatic_info(Graph::empty(17)), CapacityError);
}

TEST(ChromaticInfo, SurplusOfMultipartiteIsSmallestPart)
{
    for (const auto& parts : patterns_up_to(12)) {
        if (parts.size() < 2)
            continue;
        const auto info = chromatic_info(make_multipartite(MultipartitePattern(parts)));
        EXPECT_EQ(info.chi, static_cast<int>(parts.size()));
        EXPECT_EQ(info.surplus, parts.front());
    }
}

TEST(ChromaticInfo, AgreesWithBruteForce)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 7), 0.5, rng);
        const auto got = chromatic_info(g);
        const auto want = oracle::brute_colourings(g);
        EXPECT_EQ(got.chi, want.chi);
        EXPECT_EQ(got.surplus, want.surplus);
    }
}
