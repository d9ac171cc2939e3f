#ifndef BOOKRAMSEY_ENUMERATE_HPP
#define BOOKRAMSEY_ENUMERATE_HPP

#include "canonical.hpp"
#include "graph.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace bookramsey {

inline constexpr int enumeration_cap = 10;

/// Sequence A000088: graphs on n unlabelled vertices, n = 0..10.
inline constexpr std::array<std::int64_t, 11> known_graph_counts{1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};

namespace detail {

struct SmallGraph {
    int n = 0;
    std::array<std::uint64_t, 16> rows{};

    std::span<const std::uint64_t> adj() const { return {rows.data(), static_cast<std::size_t>(n)}; }
    Graph to_graph() const { return Graph::from_rows(n, adj()); }
};

/**
 * Isomorph-free generation by vertex-addition canonical augmentation.
 *
 * A child G' = G + v is accepted iff v lies in the automorphism orbit of the
 * canonical deletion vertex of G': the maximum-degree vertex with the
 * largest canonical position. Every unlabelled graph then has exactly one
 * accepted parent class; isomorphic siblings are removed by certificate.
 *
 * `keep(g)` must be hereditary (closed under vertex deletion): nodes failing
 * it are neither visited nor extended, which leaves exactly the graphs
 * satisfying it.
 */
class Augmenter {
public:
    using Keep = std::function<bool(const Graph&)>;
    /// Returns false to stop the enumeration.
    using Visit = std::function<bool(const Graph&)>;

    Augmenter(int target, Keep keep) : target_(target), keep_(std::move(keep)) {}

    /// Depth-first from `start`; returns false if the visitor stopped early.
    bool run(const SmallGraph& start, const Visit& visit) { return descend(start, visit); }

    /// All kept nodes at order `level` (<= target), in generation order.
    std::vector<SmallGraph> frontier(int level)
    {
        std::vector<SmallGraph> out;
        collect(SmallGraph{}, level, out);
        return out;
    }

    /// On acceptance, *certificate receives the child's canonical rows.
    static bool accepts(const SmallGraph& child, canon::Rows* certificate = nullptr)
    {
        const int n = child.n;
        const int v = n - 1;
        const int deg_v = std::popcount(child.rows[v]);
        int max_deg = 0;
        for (int u = 0; u < n; ++u)
            max_deg = std::max(max_deg, std::popcount(child.rows[u]));
        if (deg_v != max_deg)
            return false;
        canon::Form form = canon::canonical_form(child.adj());
        if (certificate)
            *certificate = form.rows;
        int w = -1;
        for (int i = n - 1; i >= 0; --i)
            if (std::popcount(child.rows[form.labeling[i]]) == max_deg) {
                w = form.labeling[i];
                break;
            }
        if (w == v)
            return true;
        const auto orbit = canon::orbits(n, form.generators);
        if (orbit[w] == orbit[v])
            return true;
        std::vector<int> mark_v(n, 0), mark_w(n, 0);
        mark_v[v] = 1;
        mark_w[w] = 1;
        return canon::canonical_form(child.adj(), mark_v).rows == canon::canonical_form(child.adj(), mark_w).rows;
    }

    template <typename F>
    bool for_each_child(const SmallGraph& g, F&& f) const
    {
        const int n = g.n;
        std::set<canon::Rows> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            SmallGraph child = g;
            child.n = n + 1;
            child.rows[n] = mask;
            for (std::uint64_t r = mask; r; r &= r - 1)
                child.rows[std::countr_zero(r)] |= std::uint64_t{1} << n;
            canon::Rows certificate;
            if (!accepts(child, &certificate))
                continue;
            if (!seen.insert(std::move(certificate)).second)
                continue;
            if (!f(child))
                return false;
        }
        return true;
    }

private:
    bool kept(const SmallGraph& g, Graph* out) const
    {
        if (!keep_ && !out)
            return true;
        Graph graph = g.to_graph();
        const bool ok = !keep_ || keep_(graph);
        if (out)
            *out = std::move(graph);
        return ok;
    }

    bool descend(const SmallGraph& g, const Visit& visit)
    {
        if (g.n == target_) {
            Graph graph;
            if (!kept(g, &graph))
                return true;
            return visit(graph);
        }
        if (!kept(g, nullptr))
            return true;
        return for_each_child(g, [&](const SmallGraph& child) { return descend(child, visit); });
    }

    void collect(const SmallGraph& g, int level, std::vector<SmallGraph>& out)
    {
        if (!kept(g, nullptr))
            return;
        if (g.n == level) {
            out.push_back(g);
            return;
        }
        for_each_child(g, [&](const SmallGraph& child) {
            collect(child, level, out);
            return true;
        });
    }

    int target_;
    Keep keep_;
};

inline void check_enumeration_order(int order)
{
    if (order < 0)
        throw InputError("negative order");
    if (order > enumeration_cap)
        throw CapacityError("enumeration supports order <= " + std::to_string(enumeration_cap) + ", got "
                            + std::to_string(order));
}

} // namespace detail

/**
 * Visits one representative of every isomorphism class of graphs on `order`
 * vertices satisfying the hereditary predicate `keep` (all graphs when
 * empty), in deterministic generation order. The visitor returns false to
 * stop; the function returns false in that case.
 */
inline bool enumerate_graphs(int order, const std::function<bool(const Graph&)>& visit,
                             const std::function<bool(const Graph&)>& keep = {})
{
    detail::check_enumeration_order(order);
    detail::Augmenter aug(order, keep);
    return aug.run(detail::SmallGraph{}, visit);
}

inline std::vector<Graph> enumerate_graphs(int order)
{
    std::vector<Graph> out;
    enumerate_graphs(order, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

inline std::int64_t count_graphs(int order, const std::function<bool(const Graph&)>& keep = {})
{
    std::int64_t count = 0;
    enumerate_graphs(
        order,
        [&](const Graph&) {
            ++count;
            return true;
        },
        keep);
    return count;
}

/**
 * First graph in generation order (among those satisfying hereditary `keep`)
 * for which `match` holds. With threads > 1 the search is sharded over the
 * generation tree at a fixed depth and the shard-order-first hit is returned,
 * so the answer does not depend on scheduling.
 */
inline std::optional<Graph> find_first_graph(int order, const std::function<bool(const Graph&)>& match,
                                             const std::function<bool(const Graph&)>& keep = {}, int threads = 1)
{
    detail::check_enumeration_order(order);
    if (threads <= 1 || order < 4) {
        std::optional<Graph> hit;
        enumerate_graphs(
            order,
            [&](const Graph& g) {
                if (!match(g))
                    return true;
                hit = g;
                return false;
            },
            keep);
        return hit;
    }
    detail::Augmenter splitter(order, keep);
    const auto shards = splitter.frontier(std::min(order - 2, 6));
    std::vector<std::optional<Graph>> hits(shards.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{shards.size()};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= shards.size() || i > best.load())
                return;
            detail::Augmenter aug(order, keep);
            aug.run(shards[i], [&](const Graph& g) {
                if (i > best.load())
                    return false;
                if (!match(g))
                    return true;
                hits[i] = g;
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                return false;
            });
        }
    };
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    pool.clear();
    for (auto& h : hits)
        if (h)
            return h;
    return std::nullopt;
}

} // namespace bookramsey

#endif
