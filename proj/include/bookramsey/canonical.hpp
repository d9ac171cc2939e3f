#ifndef BOOKRAMSEY_CANONICAL_HPP
#define BOOKRAMSEY_CANONICAL_HPP

#include "error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace bookramsey::canon {

inline constexpr int order_cap = 64;

using Rows = std::vector<std::uint64_t>;

/**
 * Canonical labelling of a (vertex-coloured) graph on at most 64 vertices.
 *
 * `labeling[i]` is the vertex placed at canonical position i and `rows` is
 * the adjacency matrix in canonical order; two coloured graphs are
 * isomorphic iff their `rows` are equal. `generators` are the automorphisms
 * met during the search (each maps vertex v to generators[g][v]).
 */
struct Form {
    std::vector<int> labeling;
    Rows rows;
    std::vector<std::vector<int>> generators;
};

namespace detail {

struct Partition {
    std::array<std::uint64_t, order_cap> cells{};
    int count = 0;

    bool discrete(int n) const { return count == n; }
};

class Canonizer {
public:
    Canonizer(std::span<const std::uint64_t> adj, int n) : adj_(adj), n_(n) {}

    Form run(Partition start)
    {
        std::vector<int> path;
        search(start, path);
        return Form{best_labeling_, best_rows_, automorphisms_};
    }

private:
    /// Splits cells by neighbour counts into each splitter cell until the partition is equitable.
    void refine(Partition& p) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 0; s < p.count; ++s) {
                const std::uint64_t splitter = p.cells[s];
                for (int x = 0; x < p.count; ++x) {
                    const std::uint64_t cell = p.cells[x];
                    if (std::has_single_bit(cell))
                        continue;
                    std::array<std::uint64_t, order_cap + 1> by_count{};
                    int lo = order_cap, hi = -1;
                    for (std::uint64_t rest = cell; rest; rest &= rest - 1) {
                        const int v = std::countr_zero(rest);
                        const int c = std::popcount(adj_[v] & splitter);
                        by_count[c] |= std::uint64_t{1} << v;
                        lo = std::min(lo, c);
                        hi = std::max(hi, c);
                    }
                    if (lo == hi)
                        continue;
                    int fragments = 0;
                    std::array<std::uint64_t, order_cap> pieces{};
                    for (int c = lo; c <= hi; ++c)
                        if (by_count[c])
                            pieces[fragments++] = by_count[c];
                    for (int i = p.count - 1; i > x; --i)
                        p.cells[i + fragments - 1] = p.cells[i];
                    for (int i = 0; i < fragments; ++i)
                        p.cells[x + i] = pieces[i];
                    p.count += fragments - 1;
                    if (s > x)
                        s += fragments - 1;
                    changed = true;
                }
            }
        }
    }

    Rows rows_for(const Partition& p, std::vector<int>& labeling) const
    {
        labeling.resize(n_);
        std::array<int, order_cap> position{};
        for (int i = 0; i < n_; ++i) {
            labeling[i] = std::countr_zero(p.cells[i]);
            position[labeling[i]] = i;
        }
        Rows rows(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (std::uint64_t r = adj_[labeling[i]]; r; r &= r - 1)
                rows[i] |= std::uint64_t{1} << position[std::countr_zero(r)];
        return rows;
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b)
    {
        int i = 0;
        while (i < static_cast<int>(a.size()) && i < static_cast<int>(b.size()) && a[i] == b[i])
            ++i;
        return i;
    }

    void record_automorphism(const std::vector<int>& from, const std::vector<int>& to)
    {
        std::vector<int> gamma(n_);
        for (int i = 0; i < n_; ++i)
            gamma[from[i]] = to[i];
        automorphisms_.push_back(std::move(gamma));
    }

    /// Returns the depth the search should unwind to (its own depth when no jump is due).
    int leaf(const Partition& p, const std::vector<int>& path)
    {
        std::vector<int> labeling;
        Rows rows = rows_for(p, labeling);
        const int depth = static_cast<int>(path.size());
        if (first_labeling_.empty()) {
            first_labeling_ = best_labeling_ = labeling;
            first_rows_ = best_rows_ = rows;
            first_path_ = best_path_ = path;
            return depth;
        }
        if (rows == first_rows_) {
            record_automorphism(first_labeling_, labeling);
            return common_prefix(path, first_path_);
        }
        if (rows < best_rows_) {
            best_rows_ = std::move(rows);
            best_labeling_ = std::move(labeling);
            best_path_ = path;
            return depth;
        }
        if (rows == best_rows_) {
            record_automorphism(best_labeling_, labeling);
            return common_prefix(path, best_path_);
        }
        return depth;
    }

    /// True when some explored sibling lies in v's orbit under the automorphisms fixing `path` pointwise.
    bool equivalent_to_explored(int v, const std::vector<int>& explored, const std::vector<int>& path) const
    {
        if (explored.empty() || automorphisms_.empty())
            return false;
        std::array<int, order_cap> parent{};
        std::iota(parent.begin(), parent.begin() + n_, 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            if (!std::all_of(path.begin(), path.end(), [&](int f) { return gamma[f] == f; }))
                continue;
            for (int x = 0; x < n_; ++x)
                parent[find(x)] = find(gamma[x]);
        }
        const int root = find(v);
        return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
    }

    int search(Partition p, std::vector<int>& path)
    {
        refine(p);
        if (p.discrete(n_))
            return leaf(p, path);
        const int depth = static_cast<int>(path.size());
        int target = 0;
        while (std::has_single_bit(p.cells[target]))
            ++target;
        const std::uint64_t cell = p.cells[target];
        std::vector<int> explored;
        for (std::uint64_t rest = cell; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (equivalent_to_explored(v, explored, path))
                continue;
            explored.push_back(v);
            Partition child = p;
            for (int i = child.count - 1; i > target; --i)
                child.cells[i + 1] = child.cells[i];
            child.cells[target] = std::uint64_t{1} << v;
            child.cells[target + 1] = cell & ~(std::uint64_t{1} << v);
            ++child.count;
            path.push_back(v);
            const int jump = search(child, path);
            path.pop_back();
            if (jump < depth)
                return jump;
        }
        return depth;
    }

    std::span<const std::uint64_t> adj_;
    int n_;
    std::vector<int> first_labeling_, best_labeling_;
    Rows first_rows_, best_rows_;
    std::vector<int> first_path_, best_path_;
    std::vector<std::vector<int>> automorphisms_;
};

} // namespace detail

/// `colours` (optional, one per vertex) gives the initial ordered partition: ascending colour value.
inline Form canonical_form(std::span<const std::uint64_t> adj, std::span<const int> colours = {})
{
    const int n = static_cast<int>(adj.size());
    if (n > order_cap)
        throw CapacityError("canonical_form supports order <= 64");
    if (n == 0)
        return {};
    detail::Partition start;
    if (colours.empty()) {
        start.cells[0] = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        start.count = 1;
    } else {
        if (static_cast<int>(colours.size()) != n)
            throw InputError("one colour per vertex required");
        std::vector<int> values(colours.begin(), colours.end());
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (int c : values) {
            std::uint64_t cell = 0;
            for (int v = 0; v < n; ++v)
                if (colours[v] == c)
                    cell |= std::uint64_t{1} << v;
            start.cells[start.count++] = cell;
        }
    }
    return detail::Canonizer(adj, n).run(start);
}

/// Orbit representative (smallest member) of each vertex under the group generated by `generators`.
inline std::vector<int> orbits(int n, const std::vector<std::vector<int>>& generators)
{
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& gamma : generators)
        for (int x = 0; x < n; ++x) {
            int a = find(x), b = find(gamma[x]);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    for (int x = 0; x < n; ++x)
        parent[x] = find(x);
    return parent;
}

} // namespace bookramsey::canon

#endif
