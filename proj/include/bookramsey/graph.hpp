#ifndef BOOKRAMSEY_GRAPH_HPP
#define BOOKRAMSEY_GRAPH_HPP

#include "error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bookramsey {

inline constexpr int max_order = 512;

using Edge = std::pair<int, int>;

/**
 * Fixed-capacity bit set over vertex indices 0..max_order-1.
 *
 * The capacity never changes, so set algebra is a handful of word operations
 * with no branching on size. Membership bounds relative to a particular graph
 * are checked by the graph operations that accept a VertexSet.
 */
class VertexSet {
public:
    static constexpr int word_count = max_order / 64;

    constexpr VertexSet() = default;

    VertexSet(std::initializer_list<int> members)
    {
        for (int v : members)
            insert(v);
    }

    /// {0, 1, ..., n-1}
    static VertexSet range(int n)
    {
        VertexSet s;
        int w = 0;
        for (; n >= 64; n -= 64)
            s.words_[w++] = ~std::uint64_t{0};
        if (n > 0)
            s.words_[w] = (std::uint64_t{1} << n) - 1;
        return s;
    }

    static VertexSet from(std::span<const int> members)
    {
        VertexSet s;
        for (int v : members)
            s.insert(v);
        return s;
    }

    void insert(int v) { words_[v >> 6] |= bit(v); }
    void erase(int v) { words_[v >> 6] &= ~bit(v); }
    bool contains(int v) const { return (words_[v >> 6] & bit(v)) != 0; }

    int size() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Smallest member, or -1.
    int first() const { return next(-1); }

    /// Smallest member strictly greater than `after`, or -1.
    int next(int after) const
    {
        int v = after + 1;
        if (v >= max_order)
            return -1;
        int w = v >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (word)
                return (w << 6) + std::countr_zero(word);
            if (++w == word_count)
                return -1;
            word = words_[w];
        }
    }

    /// Largest member, or -1.
    int last() const
    {
        for (int w = word_count - 1; w >= 0; --w)
            if (words_[w])
                return (w << 6) + 63 - std::countl_zero(words_[w]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (int w = 0; w < word_count; ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                f((w << 6) + std::countr_zero(word));
                word &= word - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    /// The first `count` members in ascending order.
    VertexSet take_first(int count) const
    {
        VertexSet out;
        for (int v = first(); v >= 0 && count > 0; v = next(v), --count)
            out.insert(v);
        return out;
    }

    bool intersects(const VertexSet& o) const
    {
        for (int w = 0; w < word_count; ++w)
            if (words_[w] & o.words_[w])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const
    {
        for (int w = 0; w < word_count; ++w)
            if (words_[w] & ~o.words_[w])
                return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (int w = 0; w < word_count; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        for (int w = 0; w < word_count; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o)
    {
        for (int w = 0; w < word_count; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::span<const std::uint64_t, word_count> words() const { return words_; }

private:
    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

    std::array<std::uint64_t, word_count> words_{};
};

class GraphBuilder;

/**
 * Undirected simple graph with a fixed vertex count and one bit row per vertex.
 *
 * Graphs are immutable values. Use GraphBuilder (or build_graph) to create one;
 * every operation below returns a new graph.
 */
class Graph {
public:
    Graph() = default;

    static Graph empty(int order);
    static Graph complete(int order);

    /// Rows given as 64-bit masks; requires order <= 64 and a symmetric loopless matrix.
    static Graph from_rows(int order, std::span<const std::uint64_t> rows);

    int order() const { return order_; }
    VertexSet vertices() const { return VertexSet::range(order_); }

    bool adjacent(int u, int v) const { return rows_[u].contains(v); }
    const VertexSet& neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].size(); }

    int min_degree() const
    {
        int best = order_ == 0 ? 0 : order_;
        for (int v = 0; v < order_; ++v)
            best = std::min(best, degree(v));
        return best;
    }

    int max_degree() const
    {
        int best = 0;
        for (int v = 0; v < order_; ++v)
            best = std::max(best, degree(v));
        return best;
    }

    std::int64_t edge_count() const
    {
        std::int64_t twice = 0;
        for (const auto& r : rows_)
            twice += r.size();
        return twice / 2;
    }

    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int u = 0; u < order_; ++u)
            for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    int order_ = 0;
    std::vector<VertexSet> rows_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int order)
    {
        if (order < 0)
            throw InputError("negative order");
        if (order > max_order)
            throw CapacityError("order " + std::to_string(order) + " exceeds cap " + std::to_string(max_order));
        graph_.order_ = order;
        graph_.rows_.assign(order, VertexSet{});
    }

    int order() const { return graph_.order_; }

    GraphBuilder& add_edge(int u, int v)
    {
        if (u < 0 || v < 0 || u >= graph_.order_ || v >= graph_.order_)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for order "
                             + std::to_string(graph_.order_));
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        graph_.rows_[u].insert(v);
        graph_.rows_[v].insert(u);
        return *this;
    }

    /// Adds every edge between the two sets (which must be disjoint).
    GraphBuilder& connect(const VertexSet& a, const VertexSet& b)
    {
        a.for_each([&](int u) { b.for_each([&](int v) { add_edge(u, v); }); });
        return *this;
    }

    Graph build() && { return std::move(graph_); }

private:
    Graph graph_;
};

inline Graph Graph::empty(int order) { return GraphBuilder(order).build(); }

inline Graph Graph::complete(int order)
{
    GraphBuilder b(order);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph Graph::from_rows(int order, std::span<const std::uint64_t> rows)
{
    if (order > 64 || static_cast<int>(rows.size()) < order)
        throw InputError("from_rows needs order <= 64 and one row per vertex");
    Graph g;
    g.order_ = order;
    g.rows_.assign(order, VertexSet{});
    for (int v = 0; v < order; ++v) {
        std::uint64_t r = rows[v];
        while (r) {
            g.rows_[v].insert(std::countr_zero(r));
            r &= r - 1;
        }
    }
    return g;
}

/// Graph with exactly the given edges; duplicates collapse.
inline Graph build_graph(int order, std::span<const Edge> edges)
{
    GraphBuilder b(order);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph build_graph(int order, std::initializer_list<Edge> edges)
{
    return build_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph complement(const Graph& g)
{
    const int n = g.order();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

namespace detail {

inline Graph combine(std::span<const Graph> parts, bool cross_edges)
{
    long total = 0;
    for (const auto& g : parts)
        total += g.order();
    if (total > max_order)
        throw CapacityError("combined order " + std::to_string(total) + " exceeds cap " + std::to_string(max_order));
    GraphBuilder b(static_cast<int>(total));
    int offset = 0;
    std::vector<VertexSet> blocks;
    for (const auto& g : parts) {
        for (auto [u, v] : g.edges())
            b.add_edge(u + offset, v + offset);
        blocks.push_back(VertexSet::range(offset + g.order()) - VertexSet::range(offset));
        offset += g.order();
    }
    if (cross_edges)
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j)
                b.connect(blocks[i], blocks[j]);
    return std::move(b).build();
}

} // namespace detail

/// Disjoint copies with every cross pair adjacent.
inline Graph join(std::span<const Graph> parts) { return detail::combine(parts, true); }

inline Graph join(const Graph& a, const Graph& b)
{
    const Graph parts[] = {a, b};
    return join(parts);
}

inline Graph disjoint_union(std::span<const Graph> parts) { return detail::combine(parts, false); }

inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    const Graph parts[] = {a, b};
    return disjoint_union(parts);
}

inline void check_within(const Graph& g, const VertexSet& s)
{
    if (!s.is_subset_of(g.vertices()))
        throw InputError("vertex set has members outside 0.." + std::to_string(g.order() - 1));
}

/// Subgraph induced by s, relabelled by ascending original index.
inline Graph induced(const Graph& g, const VertexSet& s)
{
    check_within(g, s);
    const auto members = s.to_vector();
    GraphBuilder b(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j]))
                b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return std::move(b).build();
}

inline VertexSet common_neighbors(const Graph& g, const VertexSet& s)
{
    check_within(g, s);
    if (s.empty())
        throw InputError("common_neighbors of an empty set is undefined");
    VertexSet out = g.vertices();
    s.for_each([&](int v) { out &= g.neighbors(v); });
    return out;
}

/// e(A, B) for disjoint A, B.
inline std::int64_t count_edges_between(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    check_within(g, a);
    check_within(g, b);
    if (a.intersects(b))
        throw InputError("count_edges_between needs disjoint sets");
    std::int64_t total = 0;
    a.for_each([&](int v) { total += (g.neighbors(v) & b).size(); });
    return total;
}

/// e(A): edges with both ends in A.
inline std::int64_t count_edges_within(const Graph& g, const VertexSet& a)
{
    check_within(g, a);
    std::int64_t twice = 0;
    a.for_each([&](int v) { twice += (g.neighbors(v) & a).size(); });
    return twice / 2;
}

} // namespace bookramsey

#endif
