#ifndef BOOKRAMSEY_STRUCTURE_HPP
#define BOOKRAMSEY_STRUCTURE_HPP

#include "graph.hpp"
#include "patterns.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace bookramsey {

struct PartitionState {
    std::vector<int> assignment;
    std::int64_t internal_edges = 0;
    std::vector<int> part_sizes;
    /// Improving moves applied to reach this state.
    std::int64_t moves = 0;
    std::int64_t initial_internal_edges = 0;

    int classes() const { return static_cast<int>(part_sizes.size()); }

    VertexSet part(int i) const
    {
        VertexSet s;
        for (std::size_t v = 0; v < assignment.size(); ++v)
            if (assignment[v] == i)
                s.insert(static_cast<int>(v));
        return s;
    }
};

/// Neighbours of v in each part.
inline std::vector<int> part_degrees(const Graph& g, const std::vector<int>& assignment, int classes, int v)
{
    std::vector<int> deg(classes, 0);
    g.neighbors(v).for_each([&](int u) { ++deg[assignment[u]]; });
    return deg;
}

inline std::int64_t internal_edge_count(const Graph& g, const std::vector<int>& assignment)
{
    std::int64_t total = 0;
    for (auto [u, v] : g.edges())
        if (assignment[u] == assignment[v])
            ++total;
    return total;
}

/**
 * Local search for a partition in which every vertex has no more neighbours
 * in its own part than in any other part.
 *
 * Starts round-robin by vertex index (over a seeded shuffle of the vertices
 * when a seed is given), then repeatedly applies the first strictly improving
 * single-vertex move, scanning vertices then target parts in ascending order.
 * Each move lowers the internal edge count, so at most that many moves occur.
 */
inline PartitionState refine_partition(const Graph& g, int classes, std::optional<std::uint64_t> seed = std::nullopt)
{
    if (classes < 1)
        throw InputError("refine_partition needs classes >= 1");
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (seed) {
        std::mt19937_64 rng(*seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    PartitionState st;
    st.assignment.assign(n, 0);
    st.part_sizes.assign(classes, 0);
    for (int i = 0; i < n; ++i) {
        st.assignment[order[i]] = i % classes;
        ++st.part_sizes[i % classes];
    }
    st.internal_edges = st.initial_internal_edges = internal_edge_count(g, st.assignment);

    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < n; ++v) {
            const auto deg = part_degrees(g, st.assignment, classes, v);
            const int own = st.assignment[v];
            for (int j = 0; j < classes; ++j) {
                if (j == own || deg[j] >= deg[own])
                    continue;
                st.assignment[v] = j;
                --st.part_sizes[own];
                ++st.part_sizes[j];
                st.internal_edges -= deg[own] - deg[j];
                ++st.moves;
                moved = true;
                break;
            }
        }
    }
    return st;
}

/// Vertices v (in part i) with d_{V_i}(v) > d_{V_j}(v) for some j != i.
inline int condition_iv_violations(const Graph& g, const PartitionState& st)
{
    int bad = 0;
    for (int v = 0; v < g.order(); ++v) {
        const auto deg = part_degrees(g, st.assignment, st.classes(), v);
        const int own = deg[st.assignment[v]];
        if (std::any_of(deg.begin(), deg.end(), [&](int d) { return d < own; }))
            ++bad;
    }
    return bad;
}

struct PartitionDiagnostics {
    int classes = 0;
    double epsilon = 0;
    /// sum e(V_i) / C(n,2); 0 when n < 2.
    double internal_edge_ratio = 0;
    /// | |V_i| - n/classes | for each part.
    std::vector<double> size_deviations;
    /// e(V_i,V_j) / (|V_i||V_j|) for i < j in row-major pair order; 0 if a part is empty.
    std::vector<double> cross_densities;
    int condition_iv_violations = 0;
    bool internal_ok = false;   // sum e(V_i) <= eps C(n,2)
    bool sizes_ok = false;      // | |V_i| - n/classes | <= sqrt(2 eps) n
    bool cross_ok = false;      // e(V_i,V_j) >= (1 - p^2 eps)|V_i||V_j| with p = classes + 1
};

inline PartitionDiagnostics partition_diagnostics(const Graph& g, const PartitionState& st, double epsilon)
{
    if (!(epsilon > 0 && epsilon < 1))
        throw InputError("epsilon must lie in (0, 1)");
    if (static_cast<int>(st.assignment.size()) != g.order())
        throw InputError("partition does not match graph order");
    const int n = g.order();
    const int c = st.classes();
    PartitionDiagnostics d;
    d.classes = c;
    d.epsilon = epsilon;

    std::vector<VertexSet> parts(c);
    for (int i = 0; i < c; ++i)
        parts[i] = st.part(i);

    const double pairs = n * (n - 1) / 2.0;
    std::int64_t internal = 0;
    for (const auto& p : parts)
        internal += count_edges_within(g, p);
    d.internal_edge_ratio = pairs > 0 ? internal / pairs : 0.0;
    d.internal_ok = internal <= epsilon * pairs;

    d.sizes_ok = true;
    for (const auto& p : parts) {
        const double dev = std::abs(p.size() - static_cast<double>(n) / c);
        d.size_deviations.push_back(dev);
        if (dev > std::sqrt(2 * epsilon) * n)
            d.sizes_ok = false;
    }

    d.cross_ok = true;
    const double p_pattern = c + 1;
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) {
            const double full = static_cast<double>(parts[i].size()) * parts[j].size();
            const auto e = count_edges_between(g, parts[i], parts[j]);
            d.cross_densities.push_back(full > 0 ? e / full : 0.0);
            if (e < (1 - p_pattern * p_pattern * epsilon) * full)
                d.cross_ok = false;
        }
    d.condition_iv_violations = condition_iv_violations(g, st);
    return d;
}

/// Greedy: take a minimum-degree vertex of what remains (lowest index on ties), discard its neighbours.
inline VertexSet turan_independent_set(const Graph& g)
{
    VertexSet remaining = g.vertices();
    VertexSet chosen;
    while (!remaining.empty()) {
        int best = -1, best_deg = 0;
        remaining.for_each([&](int v) {
            const int d = (g.neighbors(v) & remaining).size();
            if (best < 0 || d < best_deg) {
                best = v;
                best_deg = d;
            }
        });
        chosen.insert(best);
        remaining -= g.neighbors(best);
        remaining.erase(best);
    }
    return chosen;
}

/// ceil(n / (1 + average degree)) = ceil(n^2 / (n + 2e)).
inline std::int64_t turan_bound(const Graph& g)
{
    const std::int64_t n = g.order();
    if (n == 0)
        return 0;
    const std::int64_t denom = n + 2 * g.edge_count();
    return (n * n + denom - 1) / denom;
}

namespace detail {

inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// Succinct clique tree walk: each clique is held vertices plus any subset of pivots.
inline void clique_tree(const Graph& g, VertexSet cands, int held, int pivots, int p, std::int64_t& total)
{
    if (held > p)
        return;
    if (cands.empty()) {
        total += binomial(pivots, p - held);
        return;
    }
    int pivot = -1, best = -1;
    cands.for_each([&](int u) {
        const int d = (g.neighbors(u) & cands).size();
        if (d > best) {
            best = d;
            pivot = u;
        }
    });
    clique_tree(g, cands & g.neighbors(pivot), held, pivots + 1, p, total);
    VertexSet rest = cands - g.neighbors(pivot);
    rest.erase(pivot);
    cands.erase(pivot);
    rest.for_each([&](int v) {
        clique_tree(g, cands & g.neighbors(v), held + 1, pivots, p, total);
        cands.erase(v);
    });
}

} // namespace detail

/// Number of p-cliques, by pivoting enumeration.
inline std::int64_t count_cliques(const Graph& g, int p)
{
    if (p < 1)
        throw InputError("count_cliques needs p >= 1");
    std::int64_t total = 0;
    detail::clique_tree(g, g.vertices(), 0, 0, p, total);
    return total;
}

struct DegreeSplit {
    VertexSet high;
    VertexSet low;
};

/// high = vertices of degree > threshold, low = the rest.
inline DegreeSplit degree_peel(const Graph& g, int threshold)
{
    DegreeSplit s;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) > threshold)
            s.high.insert(v);
        else
            s.low.insert(v);
    }
    return s;
}

enum class BlowupOutcome { found, absent, inconclusive };

struct BlowupSearch {
    BlowupOutcome outcome = BlowupOutcome::absent;
    std::optional<MultipartiteEmbedding> embedding;
    std::int64_t nodes = 0;
};

/// Induced K_r(t): r independent t-sets with every cross pair adjacent.
inline bool verify_induced_blowup(const Graph& g, int r, int t, const MultipartiteEmbedding& e)
{
    if (!verify_embedding(g, MultipartitePattern(std::vector<int>(r, t)), e))
        return false;
    for (const auto& part : e.parts)
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (g.adjacent(part[i], part[j]))
                    return false;
    return true;
}

namespace detail {

class BlowupSearcher {
public:
    BlowupSearcher(const Graph& g, int r, int t, std::int64_t budget) : g_(g), r_(r), t_(t), budget_(budget) {}

    BlowupSearch run()
    {
        BlowupSearch out;
        chosen_.resize(r_);
        const bool hit = place(0, g_.vertices(), -1);
        out.nodes = nodes_;
        if (hit) {
            out.outcome = BlowupOutcome::found;
            MultipartiteEmbedding e;
            for (const auto& part : chosen_)
                e.parts.push_back(part.to_vector());
            out.embedding = std::move(e);
        } else {
            out.outcome = exhausted_ ? BlowupOutcome::inconclusive : BlowupOutcome::absent;
        }
        return out;
    }

private:
    bool tick()
    {
        if (++nodes_ > budget_)
            exhausted_ = true;
        return !exhausted_;
    }

    /// Parts are produced with increasing minimum vertex, since they are interchangeable.
    bool place(int part, const VertexSet& cands, int min_floor)
    {
        if (part == r_)
            return true;
        if (cands.size() < (r_ - part) * t_)
            return false;
        VertexSet current;
        return extend(part, cands, current, cands, cands, min_floor, -1);
    }

    bool extend(int part, const VertexSet& cands, VertexSet& current, const VertexSet& common, const VertexSet& free,
                int min_floor, int last)
    {
        if (!tick())
            return false;
        if (current.size() == t_) {
            chosen_[part] = current;
            return place(part + 1, common, current.first());
        }
        const int rest = (r_ - part - 1) * t_;
        for (int v = free.next(last); v >= 0; v = free.next(v)) {
            if (current.empty() && v <= min_floor)
                continue;
            VertexSet next_common = common & g_.neighbors(v);
            if (next_common.size() < rest)
                continue;
            VertexSet next_free = free - g_.neighbors(v);
            current.insert(v);
            if (extend(part, cands, current, next_common, next_free, min_floor, v))
                return true;
            current.erase(v);
            if (exhausted_)
                return false;
        }
        return false;
    }

    const Graph& g_;
    int r_, t_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<VertexSet> chosen_;
};

} // namespace detail

/// Budgeted backtracking for an induced K_r(t). Running out of budget is reported as inconclusive.
inline BlowupSearch find_induced_blowup(const Graph& g, int r, int t, std::int64_t budget)
{
    if (r < 1 || t < 1)
        throw InputError("find_induced_blowup needs r >= 1, t >= 1");
    if (static_cast<std::int64_t>(r) * t > g.order())
        throw InputError("r * t exceeds the graph order");
    return detail::BlowupSearcher(g, r, t, budget).run();
}

} // namespace bookramsey

#endif
