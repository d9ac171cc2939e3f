#include "oracles.hpp"

#include <bookramsey/canonical.hpp>
#include <bookramsey/enumerate.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace bookramsey;

namespace {

canon::Rows rows_of(const Graph& g)
{
    canon::Rows rows(g.order());
    for (int v = 0; v < g.order(); ++v)
        rows[v] = g.neighbors(v).words()[0];
    return rows;
}

Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges())
        b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

std::uint64_t automorphism_count(const Graph& g)
{
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!g.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

} // namespace

TEST(CanonicalForm, InvariantUnderRelabelling)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 40);
        const Graph g = oracle::random_graph(n, 0.1 + 0.2 * (trial % 5), rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto a = canon::canonical_form(rows_of(g));
        const auto b = canon::canonical_form(rows_of(relabel(g, perm)));
        EXPECT_EQ(a.rows, b.rows);
        ASSERT_EQ(a.labeling.size(), static_cast<std::size_t>(n));
        for (const auto& gen : a.generators)
            for (auto [u, v] : g.edges())
                EXPECT_TRUE(g.adjacent(gen[u], gen[v]));
    }
}

TEST(CanonicalForm, SeparatesNonIsomorphicGraphs)
{
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::map<std::uint64_t, canon::Rows> by_code;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
            const Graph g = oracle::graph_from_code(n, code);
            const auto rows = canon::canonical_form(rows_of(g)).rows;
            const auto [it, fresh] = by_code.emplace(oracle::permutation_canonical_code(g), rows);
            if (!fresh) {
                ASSERT_EQ(it->second, rows) << "n=" << n << " code=" << code;
            }
        }
        std::set<canon::Rows> distinct;
        for (const auto& [code, rows] : by_code)
            distinct.insert(rows);
        EXPECT_EQ(distinct.size(), by_code.size());
        EXPECT_EQ(static_cast<std::int64_t>(by_code.size()), known_graph_counts[n]);
    }
}

TEST(CanonicalForm, OrbitsOfCycleAndStar)
{
    const auto c = canon::canonical_form(rows_of(oracle::graph_from_code(5, 0)));
    const auto orb = canon::orbits(5, c.generators);
    for (int v = 0; v < 5; ++v)
        EXPECT_EQ(orb[v], 0);

    GraphBuilder b(6);
    for (int v = 1; v < 6; ++v)
        b.add_edge(0, v);
    const auto s = canon::canonical_form(rows_of(std::move(b).build()));
    const auto so = canon::orbits(6, s.generators);
    EXPECT_EQ(so[0], 0);
    for (int v = 1; v < 6; ++v)
        EXPECT_EQ(so[v], 1);
}

TEST(EnumerateGraphs, KnownCounts)
{
    for (int n = 0; n <= 8; ++n)
        EXPECT_EQ(count_graphs(n), known_graph_counts[n]) << n;
    EXPECT_EQ(enumerate_graphs(4).size(), 11u);
    EXPECT_EQ(enumerate_graphs(0).size(), 1u);
    EXPECT_THROW(count_graphs(11), CapacityError);
    EXPECT_THROW(count_graphs(-1), InputError);
}

// Pairwise non-isomorphic by brute-force codes, and complete because the
// orbit sizes n!/|Aut| add up to every labelled graph.
TEST(EnumerateGraphs, CompleteAndIsomorphFreeByOrbitCounting)
{
    for (int n = 1; n <= 7; ++n) {
        std::set<std::uint64_t> codes;
        std::uint64_t labelled = 0;
        std::uint64_t factorial = 1;
        for (int i = 2; i <= n; ++i)
            factorial *= i;
        const auto graphs = enumerate_graphs(n);
        for (const Graph& g : graphs) {
            EXPECT_TRUE(codes.insert(oracle::permutation_canonical_code(g)).second);
            labelled += factorial / automorphism_count(g);
        }
        EXPECT_EQ(labelled, std::uint64_t{1} << (n * (n - 1) / 2)) << n;
    }
}

TEST(EnumerateGraphs, KeepPredicatePrunesHereditarily)
{
    // Triangle-free graphs on n vertices: 1, 1, 2, 3, 7, 14, 38, 107, 410.
    const std::vector<std::int64_t> want{1, 1, 2, 3, 7, 14, 38, 107, 410};
    const auto triangle_free = [](const Graph& g) {
        for (auto [u, v] : g.edges()) {
            VertexSet c = g.neighbors(u);
            c &= g.neighbors(v);
            if (!c.empty())
                return false;
        }
        return true;
    };
    for (int n = 0; n <= 8; ++n)
        EXPECT_EQ(count_graphs(n, triangle_free), want[n]) << n;
}

TEST(FindFirstGraph, ThreadCountDoesNotChangeResult)
{
    const auto match = [](const Graph& g) { return g.min_degree() >= 3 && g.edge_count() % 2 == 1; };
    const auto one = find_first_graph(8, match, {}, 1);
    const auto four = find_first_graph(8, match, {}, 4);
    ASSERT_TRUE(one);
    ASSERT_TRUE(four);
    EXPECT_EQ(*one, *four);
    EXPECT_FALSE(find_first_graph(6, [](const Graph& g) { return g.min_degree() >= 6; }, {}, 3));
}

TEST(EnumerateGraphs, EarlyStopFromVisitor)
{
    int seen = 0;
    const bool finished = enumerate_graphs(6, [&](const Graph&) { return ++seen < 10; });
    EXPECT_FALSE(finished);
    EXPECT_EQ(seen, 10);
}
