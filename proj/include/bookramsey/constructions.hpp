#ifndef BOOKRAMSEY_CONSTRUCTIONS_HPP
#define BOOKRAMSEY_CONSTRUCTIONS_HPP

#include "graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

namespace bookramsey {

/// Part sizes of a complete multipartite graph K_p(a_1, ..., a_p), kept nondecreasing.
class MultipartitePattern {
public:
    MultipartitePattern() = default;

    /// Sizes may be given in any order; they are sorted. Every size must be >= 1.
    explicit MultipartitePattern(std::vector<int> parts) : parts_(std::move(parts))
    {
        if (parts_.empty())
            throw InputError("multipartite pattern needs at least one part");
        for (int a : parts_)
            if (a < 1)
                throw InputError("part sizes must be positive");
        std::sort(parts_.begin(), parts_.end());
    }

    MultipartitePattern(std::initializer_list<int> parts) : MultipartitePattern(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// "1,2,2"
    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const MultipartitePattern&, const MultipartitePattern&) = default;

private:
    std::vector<int> parts_;
};

/// B_{k,n}: n-k triangles-of-order-(k+1) sharing a common K_k spine.
struct BookPattern {
    int spine = 1;
    int total = 2;

    BookPattern() = default;
    BookPattern(int k, int n) : spine(k), total(n)
    {
        if (k < 1)
            throw InputError("book spine must be >= 1");
        if (n <= k)
            throw InputError("book B_{k,n} needs n > k");
    }

    int pages() const { return total - spine; }

    friend bool operator==(const BookPattern&, const BookPattern&) = default;
};

inline Graph make_book(const BookPattern& b)
{
    GraphBuilder g(b.total);
    for (int u = 0; u < b.spine; ++u)
        for (int v = u + 1; v < b.total; ++v)
            g.add_edge(u, v);
    return std::move(g).build();
}

inline Graph make_multipartite(const MultipartitePattern& m)
{
    if (m.total() > max_order)
        throw CapacityError("multipartite order " + std::to_string(m.total()) + " exceeds cap");
    std::vector<Graph> parts;
    for (int a : m.parts())
        parts.push_back(Graph::empty(a));
    return join(parts);
}

/// Balanced complete multipartite graph; the first order % classes parts are the smaller ones.
inline Graph make_turan(int order, int classes)
{
    if (classes < 1)
        throw InputError("turan graph needs at least one class");
    if (order < 0)
        throw InputError("negative order");
    if (order > max_order)
        throw CapacityError("turan order exceeds cap");
    std::vector<Graph> parts;
    for (int i = 0; i < classes; ++i) {
        const int size = order / classes + (i >= classes - order % classes ? 1 : 0);
        parts.push_back(Graph::empty(size));
    }
    return join(parts);
}

inline Graph make_cycle(int n)
{
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices");
    GraphBuilder g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return std::move(g).build();
}

inline Graph make_path(int n)
{
    GraphBuilder g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return std::move(g).build();
}

/// Number of cliques in F for the lower-bound witness: floor((n-k-1)/a2) + k.
inline int section2_clique_count(int a2, int k, int n) { return (n - k - 1) / a2 + k; }

/**
 * Lower-bound witness for K_p(1, a2, ..., a_p) versus B_{k,n}.
 *
 * F is section2_clique_count(a2, k, n) disjoint copies of K_{a2}; the witness
 * is the join of p-1 copies of F. It has no K_p(1, a2, ...) because each copy
 * of F has no K_{1,a2}, and in the complement every k-clique has at most
 * n-k-1 common neighbours.
 */
inline Graph make_section2_witness(int p, int a2, int k, int n)
{
    if (p < 2 || a2 < 1 || k < 1)
        throw InputError("section2 witness needs p >= 2, a2 >= 1, k >= 1");
    if (n < k + 2)
        throw InputError("section2 witness needs n >= k + 2");
    const long cliques = section2_clique_count(a2, k, n);
    const long order = static_cast<long>(p - 1) * cliques * a2;
    if (order > max_order)
        throw CapacityError("section2 witness order " + std::to_string(order) + " exceeds cap");
    const std::vector<Graph> copies(cliques, Graph::complete(a2));
    const Graph f = disjoint_union(copies);
    return join(std::vector<Graph>(p - 1, f));
}

/**
 * Join of `inner` (on n+d-1 vertices) with p-2 independent sets of size n-1.
 * When inner is K_{a1,a2}-free with at most k-1 vertices of degree below d,
 * the result is K_p(a_1, ..., a_p)-free with a B_{k,n}-free complement.
 */
inline Graph make_dk_witness_assembly(int p, int n, const Graph& inner, int d)
{
    if (p < 2)
        throw InputError("assembly needs p >= 2");
    if (n < 1 || d < 0)
        throw InputError("assembly needs n >= 1, d >= 0");
    if (inner.order() != n + d - 1)
        throw InputError("inner graph has order " + std::to_string(inner.order()) + ", expected n+d-1 = "
                         + std::to_string(n + d - 1));
    const long order = static_cast<long>(p - 1) * (n - 1) + d;
    if (order > max_order)
        throw CapacityError("assembly order " + std::to_string(order) + " exceeds cap");
    std::vector<Graph> parts{inner};
    for (int i = 0; i < p - 2; ++i)
        parts.push_back(Graph::empty(n - 1));
    return join(parts);
}

inline bool is_prime(int q)
{
    if (q < 2)
        return false;
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0)
            return false;
    return true;
}

/// Projective points over Z_q: nonzero triples scaled so the first nonzero coordinate is 1, lexicographic.
inline std::vector<std::array<int, 3>> projective_points(int q)
{
    std::vector<std::array<int, 3>> pts;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            for (int z = 0; z < q; ++z) {
                const std::array<int, 3> t{x, y, z};
                const auto lead = std::find_if(t.begin(), t.end(), [](int c) { return c != 0; });
                if (lead != t.end() && *lead == 1)
                    pts.push_back(t);
            }
    return pts;
}

/// Erdős–Rényi polarity graph ER_q for prime q: points adjacent when orthogonal.
inline Graph make_er_polarity(int q)
{
    if (!is_prime(q))
        throw UnsupportedParameter("ER_q is implemented for prime q only, got " + std::to_string(q));
    const long order = static_cast<long>(q) * q + q + 1;
    if (order > max_order)
        throw CapacityError("ER_q order " + std::to_string(order) + " exceeds cap");
    const auto pts = projective_points(q);
    GraphBuilder g(static_cast<int>(pts.size()));
    for (std::size_t u = 0; u < pts.size(); ++u)
        for (std::size_t v = u + 1; v < pts.size(); ++v) {
            const int dot = pts[u][0] * pts[v][0] + pts[u][1] * pts[v][1] + pts[u][2] * pts[v][2];
            if (dot % q == 0)
                g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    return std::move(g).build();
}

} // namespace bookramsey

#endif
