#include "oracles.hpp"

#include <bookramsey/constructions.hpp>
#include <bookramsey/structure.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace bookramsey;

namespace {

std::vector<int> degrees_into_parts(const Graph& g, const std::vector<int>& assignment, int classes, int v)
{
    std::vector<int> deg(classes, 0);
    for (int u = 0; u < g.order(); ++u)
        if (g.adjacent(u, v))
            ++deg[assignment[u]];
    return deg;
}

} // namespace

TEST(RefinePartition, Examples)
{
    EXPECT_EQ(refine_partition(make_turan(12, 3), 3).internal_edges, 0);
    const auto k5 = refine_partition(Graph::complete(5), 2);
    EXPECT_EQ(k5.internal_edges, 4);
    EXPECT_EQ(k5.internal_edges, oracle::min_internal_edges(Graph::complete(5), 2));
    EXPECT_EQ(refine_partition(Graph::empty(6), 3).internal_edges, 0);
    EXPECT_EQ(refine_partition(Graph::empty(6), 3, 99).internal_edges, 0);
    EXPECT_THROW(refine_partition(Graph::empty(3), 0), InputError);
}

TEST(RefinePartition, FixpointSatisfiesConditionIv)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const int classes = 2 + trial % 3;
        const Graph g = oracle::random_graph(n, 0.05 + 0.9 * ((rng() % 100) / 100.0), rng);
        const auto st = refine_partition(g, classes, trial % 2 ? std::optional<std::uint64_t>(rng()) : std::nullopt);
        ASSERT_EQ(static_cast<int>(st.assignment.size()), n);
        std::int64_t internal = 0;
        for (auto [u, v] : g.edges())
            internal += st.assignment[u] == st.assignment[v];
        EXPECT_EQ(st.internal_edges, internal);
        EXPECT_LE(st.internal_edges, st.initial_internal_edges);
        EXPECT_LE(st.moves, st.initial_internal_edges);
        std::vector<int> sizes(classes, 0);
        for (int v = 0; v < n; ++v) {
            ++sizes[st.assignment[v]];
            const auto deg = degrees_into_parts(g, st.assignment, classes, v);
            for (int j = 0; j < classes; ++j)
                EXPECT_LE(deg[st.assignment[v]], deg[j]);
        }
        EXPECT_EQ(sizes, st.part_sizes);
        EXPECT_EQ(condition_iv_violations(g, st), 0);
    }
}

TEST(RefinePartition, DeterministicForEqualInputs)
{
    std::mt19937_64 rng(5);
    const Graph g = oracle::random_graph(40, 0.4, rng);
    EXPECT_EQ(refine_partition(g, 3).assignment, refine_partition(g, 3).assignment);
    EXPECT_EQ(refine_partition(g, 3, 7).assignment, refine_partition(g, 3, 7).assignment);
}

TEST(PartitionDiagnostics, TuranNaturalPartition)
{
    const Graph t = make_turan(12, 3);
    const auto st = refine_partition(t, 3);
    const auto d = partition_diagnostics(t, st, 0.1);
    EXPECT_EQ(d.internal_edge_ratio, 0.0);
    for (double c : d.cross_densities)
        EXPECT_EQ(c, 1.0);
    EXPECT_EQ(d.condition_iv_violations, 0);
    EXPECT_TRUE(d.internal_ok);
    EXPECT_TRUE(d.sizes_ok);
    EXPECT_TRUE(d.cross_ok);
}

TEST(PartitionDiagnostics, CompleteGraphSplit)
{
    const Graph k5 = Graph::complete(5);
    const auto d = partition_diagnostics(k5, refine_partition(k5, 2), 0.1);
    EXPECT_DOUBLE_EQ(d.internal_edge_ratio, 0.4);
    EXPECT_FALSE(d.internal_ok);
    EXPECT_THROW(partition_diagnostics(k5, refine_partition(k5, 2), 0.0), InputError);
    EXPECT_THROW(partition_diagnostics(k5, refine_partition(k5, 2), 1.0), InputError);
}

TEST(PartitionDiagnostics, MatchesDirectRecount)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 10 + static_cast<int>(rng() % 30);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((u % 2 != v % 2 && rng() % 10 < 8) || rng() % 10 == 0)
                    b.add_edge(u, v);
        const Graph g = std::move(b).build();
        const auto st = refine_partition(g, 2, rng());
        const auto d = partition_diagnostics(g, st, 0.2);
        std::int64_t internal = 0, cross = 0;
        std::int64_t sizes[2] = {0, 0};
        for (int v = 0; v < n; ++v)
            ++sizes[st.assignment[v]];
        for (auto [u, v] : g.edges())
            (st.assignment[u] == st.assignment[v] ? internal : cross) += 1;
        EXPECT_DOUBLE_EQ(d.internal_edge_ratio, internal / (n * (n - 1) / 2.0));
        ASSERT_EQ(d.cross_densities.size(), 1u);
        const double full = static_cast<double>(sizes[0] * sizes[1]);
        EXPECT_DOUBLE_EQ(d.cross_densities[0], full > 0 ? cross / full : 0.0);
        EXPECT_DOUBLE_EQ(d.size_deviations[0], std::abs(sizes[0] - n / 2.0));
        EXPECT_EQ(d.internal_ok, internal <= 0.2 * (n * (n - 1) / 2.0));
        for (double x : d.cross_densities) {
            EXPECT_GE(x, 0.0);
            EXPECT_LE(x, 1.0);
        }
    }
}

TEST(TuranIndependentSet, Examples)
{
    EXPECT_GE(turan_independent_set(make_cycle(5)).size(), 2);
    EXPECT_EQ(turan_independent_set(Graph::empty(7)), VertexSet::range(7));
    EXPECT_EQ(turan_independent_set(Graph::complete(7)).size(), 1);
    EXPECT_EQ(turan_bound(Graph::complete(7)), 1);
    EXPECT_EQ(turan_bound(make_cycle(5)), 2);
}

TEST(TuranIndependentSet, IndependentAndMeetsBound)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const Graph g = oracle::random_graph(n, (rng() % 100) / 100.0, rng);
        const VertexSet s = turan_independent_set(g);
        s.for_each([&](int u) { s.for_each([&](int v) { EXPECT_FALSE(g.adjacent(u, v)); }); });
        const std::int64_t bound = (std::int64_t{n} * n + n + 2 * g.edge_count() - 1) / (n + 2 * g.edge_count());
        EXPECT_EQ(turan_bound(g), bound);
        EXPECT_GE(s.size(), bound);
    }
}

TEST(CountCliques, Examples)
{
    EXPECT_EQ(count_cliques(Graph::complete(6), 3), 20);
    EXPECT_EQ(count_cliques(make_cycle(5), 3), 0);
    EXPECT_EQ(count_cliques(make_turan(9, 3), 3), 27);
    EXPECT_EQ(count_cliques(Graph::complete(6), 1), 6);
    EXPECT_EQ(count_cliques(Graph::complete(40), 5), 658008);
}

TEST(CountCliques, AgreesWithSubsetEnumeration)
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(static_cast<int>(rng() % 13), (rng() % 100) / 100.0, rng);
        for (int p = 1; p <= 4; ++p)
            EXPECT_EQ(count_cliques(g, p), oracle::count_cliques(g, p));
    }
}

TEST(DegreePeel, Examples)
{
    const auto a = degree_peel(Graph::complete(5), 3);
    EXPECT_EQ(a.high, VertexSet::range(5));
    EXPECT_TRUE(a.low.empty());
    const auto b = degree_peel(make_book({1, 6}), 1);
    EXPECT_EQ(b.high, (VertexSet{0}));
    EXPECT_EQ(b.low, (VertexSet{1, 2, 3, 4, 5}));
    EXPECT_TRUE(degree_peel(make_cycle(6), 2).high.empty());
}

TEST(FindInducedBlowup, Examples)
{
    const Graph t = make_turan(12, 3);
    const auto a = find_induced_blowup(t, 3, 4, 1'000'000);
    ASSERT_EQ(a.outcome, BlowupOutcome::found);
    EXPECT_TRUE(verify_induced_blowup(t, 3, 4, *a.embedding));
    EXPECT_EQ(find_induced_blowup(Graph::complete(6), 2, 2, 1'000'000).outcome, BlowupOutcome::absent);
    EXPECT_EQ(find_induced_blowup(make_cycle(5), 2, 2, 1'000'000).outcome, BlowupOutcome::absent);
    EXPECT_THROW(find_induced_blowup(make_cycle(5), 3, 2, 10), InputError);
}

TEST(FindInducedBlowup, TinyBudgetIsInconclusive)
{
    std::mt19937_64 rng(3);
    const Graph g = oracle::random_graph(40, 0.5, rng);
    EXPECT_EQ(find_induced_blowup(g, 3, 4, 5).outcome, BlowupOutcome::inconclusive);
}

TEST(FindInducedBlowup, FoundEmbeddingsVerify)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(16, 0.6, rng);
        const auto r = find_induced_blowup(g, 2, 2, 1'000'000);
        ASSERT_NE(r.outcome, BlowupOutcome::inconclusive);
        if (r.outcome == BlowupOutcome::found) {
            EXPECT_TRUE(verify_induced_blowup(g, 2, 2, *r.embedding));
        }
        // Induced C4 by brute force over 4-sets.
        bool brute = false;
        for (int a = 0; a < 16 && !brute; ++a)
            for (int b = a + 1; b < 16 && !brute; ++b)
                for (int c = 0; c < 16 && !brute; ++c)
                    for (int d = c + 1; d < 16 && !brute; ++d) {
                        if (c == a || c == b || d == a || d == b || g.adjacent(a, b) || g.adjacent(c, d))
                            continue;
                        brute = g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(b, c) && g.adjacent(b, d);
                    }
        EXPECT_EQ(r.outcome == BlowupOutcome::found, brute);
    }
}
