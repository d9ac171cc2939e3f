#ifndef BOOKRAMSEY_PATTERNS_HPP
#define BOOKRAMSEY_PATTERNS_HPP

#include "constructions.hpp"
#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

namespace bookramsey {

/// Images of the parts of K_p(a_1..a_p), listed in pattern order (ascending part size).
struct MultipartiteEmbedding {
    std::vector<std::vector<int>> parts;

    friend bool operator==(const MultipartiteEmbedding&, const MultipartiteEmbedding&) = default;
};

struct BookEmbedding {
    std::vector<int> spine;
    std::vector<int> pages;

    friend bool operator==(const BookEmbedding&, const BookEmbedding&) = default;
};

/// Subgraph check of an embedding by direct scan: sizes, disjointness, cross adjacency.
inline bool verify_embedding(const Graph& g, const MultipartitePattern& m, const MultipartiteEmbedding& e)
{
    if (static_cast<int>(e.parts.size()) != m.part_count())
        return false;
    VertexSet seen;
    for (std::size_t i = 0; i < e.parts.size(); ++i) {
        if (static_cast<int>(e.parts[i].size()) != m.parts()[i])
            return false;
        for (int v : e.parts[i]) {
            if (v < 0 || v >= g.order() || seen.contains(v))
                return false;
            seen.insert(v);
        }
    }
    for (std::size_t i = 0; i < e.parts.size(); ++i)
        for (std::size_t j = i + 1; j < e.parts.size(); ++j)
            for (int u : e.parts[i])
                for (int v : e.parts[j])
                    if (!g.adjacent(u, v))
                        return false;
    return true;
}

inline bool verify_embedding(const Graph& g, const BookPattern& b, const BookEmbedding& e)
{
    if (static_cast<int>(e.spine.size()) != b.spine || static_cast<int>(e.pages.size()) != b.pages())
        return false;
    VertexSet seen;
    for (const auto* list : {&e.spine, &e.pages})
        for (int v : *list) {
            if (v < 0 || v >= g.order() || seen.contains(v))
                return false;
            seen.insert(v);
        }
    for (std::size_t i = 0; i < e.spine.size(); ++i) {
        for (std::size_t j = i + 1; j < e.spine.size(); ++j)
            if (!g.adjacent(e.spine[i], e.spine[j]))
                return false;
        for (int p : e.pages)
            if (!g.adjacent(e.spine[i], p))
                return false;
    }
    return true;
}

namespace detail {

/// For each vertex, the previous member of its twin class (same open or same closed neighbourhood), or -1.
inline std::vector<int> twin_predecessors(const Graph& g)
{
    std::vector<int> pred(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
        VertexSet closed_v = g.neighbors(v);
        closed_v.insert(v);
        for (int u = v - 1; u >= 0; --u) {
            if (g.neighbors(u) == g.neighbors(v)) {
                pred[v] = u;
                break;
            }
            VertexSet closed_u = g.neighbors(u);
            closed_u.insert(u);
            if (closed_u == closed_v) {
                pred[v] = u;
                break;
            }
        }
    }
    return pred;
}

struct FailureKey {
    int part;
    VertexSet candidates;
    friend bool operator==(const FailureKey&, const FailureKey&) = default;
};

struct FailureKeyHash {
    std::size_t operator()(const FailureKey& k) const
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k.part + 1);
        for (auto w : k.candidates.words())
            h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return static_cast<std::size_t>(h);
    }
};

/**
 * Backtracking search for K_p(a_1..a_p) as a subgraph.
 *
 * Parts are placed in descending size order; each part is a combination of
 * the current candidates (common neighbours of everything placed so far) in
 * ascending index order. Twins are used in index order, and failed
 * (part, candidates) states are memoised since the remainder of the search
 * depends on nothing else.
 */
class MultipartiteSearch {
public:
    MultipartiteSearch(const Graph& g, const MultipartitePattern& m) : g_(g), twin_pred_(twin_predecessors(g))
    {
        order_.resize(m.part_count());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return m.parts()[a] > m.parts()[b]; });
        for (int idx : order_)
            sizes_.push_back(m.parts()[idx]);
        suffix_.assign(sizes_.size() + 1, 0);
        for (int i = static_cast<int>(sizes_.size()) - 1; i >= 0; --i)
            suffix_[i] = suffix_[i + 1] + sizes_[i];
        chosen_.resize(sizes_.size());
    }

    std::optional<MultipartiteEmbedding> run()
    {
        if (suffix_[0] > g_.order() || !place(0, g_.vertices()))
            return std::nullopt;
        MultipartiteEmbedding e;
        e.parts.resize(sizes_.size());
        for (std::size_t i = 0; i < sizes_.size(); ++i)
            e.parts[order_[i]] = chosen_[i].to_vector();
        return e;
    }

private:
    bool place(int part, const VertexSet& candidates)
    {
        if (part == static_cast<int>(sizes_.size()))
            return true;
        if (candidates.size() < suffix_[part])
            return false;
        if (part + 1 == static_cast<int>(sizes_.size())) {
            chosen_[part] = candidates.take_first(sizes_[part]);
            return true;
        }
        FailureKey key{part, candidates};
        if (failed_.contains(key))
            return false;
        VertexSet current;
        if (extend(part, candidates, current, candidates, -1))
            return true;
        failed_.insert(std::move(key));
        return false;
    }

    bool extend(int part, const VertexSet& candidates, VertexSet& current, const VertexSet& common, int last)
    {
        const int have = current.size();
        if (have == sizes_[part]) {
            chosen_[part] = current;
            return place(part + 1, common);
        }
        const int still = sizes_[part] - have;
        const int rest = suffix_[part + 1];
        for (int v = candidates.next(last); v >= 0; v = candidates.next(v)) {
            if ((candidates - VertexSet::range(v)).size() < still)
                break;
            if (!twin_ok(v, candidates, current))
                continue;
            VertexSet next_common = common & g_.neighbors(v);
            if (next_common.size() < rest)
                continue;
            current.insert(v);
            if (extend(part, candidates, current, next_common, v))
                return true;
            current.erase(v);
        }
        return false;
    }

    /// v may join the part only if its nearest twin among the candidates already has.
    bool twin_ok(int v, const VertexSet& candidates, const VertexSet& current) const
    {
        int u = twin_pred_[v];
        while (u >= 0 && !candidates.contains(u))
            u = twin_pred_[u];
        return u < 0 || current.contains(u);
    }

    const Graph& g_;
    std::vector<int> twin_pred_;
    std::vector<int> order_;
    std::vector<int> sizes_;
    std::vector<int> suffix_;
    std::vector<VertexSet> chosen_;
    std::unordered_set<FailureKey, FailureKeyHash> failed_;
};

/// Calls f(spine) for every k-clique in lexicographic order; stops when f returns true.
template <typename F>
bool for_each_clique(const Graph& g, int k, const VertexSet& allowed, std::vector<int>& spine, const VertexSet& cands,
                     int min_common, F&& f)
{
    if (static_cast<int>(spine.size()) == k)
        return f(spine, cands);
    const int need = k - static_cast<int>(spine.size());
    for (int v = cands.first(); v >= 0; v = cands.next(v)) {
        if (!allowed.contains(v))
            continue;
        VertexSet next = cands & g.neighbors(v);
        if (next.size() < min_common + need - 1)
            continue;
        spine.push_back(v);
        VertexSet next_allowed = allowed - VertexSet::range(v + 1);
        if (for_each_clique(g, k, next_allowed, spine, next, min_common, f))
            return true;
        spine.pop_back();
    }
    return false;
}

} // namespace detail

/// Lexicographically first copy of K_p(a_1..a_p) (subgraph, not induced) in search order, if any.
inline std::optional<MultipartiteEmbedding> find_multipartite(const Graph& g, const MultipartitePattern& m)
{
    return detail::MultipartiteSearch(g, m).run();
}

inline bool contains_multipartite(const Graph& g, const MultipartitePattern& m)
{
    return find_multipartite(g, m).has_value();
}

inline bool is_c4_free(const Graph& g) { return !contains_multipartite(g, MultipartitePattern{2, 2}); }

/// B_{k,n} is present iff some k-clique has at least n-k common neighbours.
inline std::optional<BookEmbedding> find_book(const Graph& g, const BookPattern& b)
{
    if (b.total > g.order())
        return std::nullopt;
    std::optional<BookEmbedding> found;
    std::vector<int> spine;
    detail::for_each_clique(g, b.spine, g.vertices(), spine, g.vertices(), b.pages(),
                            [&](const std::vector<int>& s, const VertexSet& common) {
                                if (common.size() < b.pages())
                                    return false;
                                found = BookEmbedding{s, common.take_first(b.pages()).to_vector()};
                                return true;
                            });
    return found;
}

inline bool contains_book(const Graph& g, const BookPattern& b) { return find_book(g, b).has_value(); }

/// Largest n with B_{k,n} in g: max over k-cliques S of k + |common neighbours of S|; 0 without a k-clique.
inline int book_size(const Graph& g, int k)
{
    if (k < 1)
        throw InputError("book_size needs k >= 1");
    int best = 0;
    std::vector<int> spine;
    detail::for_each_clique(g, k, g.vertices(), spine, g.vertices(), 0,
                            [&](const std::vector<int>&, const VertexSet& common) {
                                best = std::max(best, k + common.size());
                                return false;
                            });
    return best;
}

struct ChromaticInfo {
    int chi = 0;
    /// Minimum colour-class size over all proper chi-colourings.
    int surplus = 0;
};

inline constexpr int chromatic_order_cap = 16;

namespace detail {

class Colouring {
public:
    Colouring(const Graph& g, int colours) : g_(g), colours_(colours), colour_(g.order(), -1), sizes_(colours, 0) {}

    bool exists() { return search_any(0, 0); }

    /// Minimum smallest-class size over all colourings (canonical colour order).
    int min_class()
    {
        best_ = g_.order() + 1;
        search_min(0, 0);
        return best_;
    }

private:
    bool allowed(int v, int c) const
    {
        for (int u = 0; u < v; ++u)
            if (colour_[u] == c && g_.adjacent(u, v))
                return false;
        return true;
    }

    bool search_any(int v, int used)
    {
        if (v == g_.order())
            return true;
        for (int c = 0; c < std::min(used + 1, colours_); ++c) {
            if (!allowed(v, c))
                continue;
            colour_[v] = c;
            if (search_any(v + 1, std::max(used, c + 1)))
                return true;
        }
        colour_[v] = -1;
        return false;
    }

    void search_min(int v, int used)
    {
        if (best_ == 1)
            return;
        if (used == colours_) {
            // Classes only grow from here, so the current minimum is a lower bound.
            if (*std::min_element(sizes_.begin(), sizes_.end()) >= best_)
                return;
        }
        if (v == g_.order()) {
            if (used == colours_)
                best_ = std::min(best_, *std::min_element(sizes_.begin(), sizes_.end()));
            return;
        }
        if (colours_ - used > g_.order() - v)
            return;
        for (int c = 0; c < std::min(used + 1, colours_); ++c) {
            if (!allowed(v, c))
                continue;
            colour_[v] = c;
            ++sizes_[c];
            search_min(v + 1, std::max(used, c + 1));
            --sizes_[c];
        }
        colour_[v] = -1;
    }

    const Graph& g_;
    int colours_;
    std::vector<int> colour_;
    std::vector<int> sizes_;
    int best_ = 0;
};

} // namespace detail

/// Exact chromatic number and chromatic surplus s(H) for graphs of order <= 16.
inline ChromaticInfo chromatic_info(const Graph& h)
{
    if (h.order() > chromatic_order_cap)
        throw CapacityError("chromatic_info supports order <= 16, got " + std::to_string(h.order()));
    if (h.order() == 0)
        return {};
    int chi = 1;
    while (!detail::Colouring(h, chi).exists())
        ++chi;
    return {chi, detail::Colouring(h, chi).min_class()};
}

} // namespace bookramsey

#endif
