#ifndef BOOKRAMSEY_CNF_HPP
#define BOOKRAMSEY_CNF_HPP

#include "ramsey.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace bookramsey {

inline constexpr int cnf_order_cap = 24;

/**
 * How an auxiliary variable is determined by earlier variables, so that an
 * assignment can be completed from the edge variables alone.
 */
struct AuxDefinition {
    enum class Kind {
        all_false,  // true iff every listed literal is false
        at_least,   // true iff at least `threshold` listed literals are true
        constant,   // fixed to `threshold != 0`
    };
    Kind kind = Kind::constant;
    std::vector<int> literals;
    int threshold = 0;
};

/**
 * CNF whose models are exactly the graphs on `order` vertices that avoid h1
 * and whose complement avoids B_{k,n} (together with their auxiliary
 * variables). Variables 1..edge_variable_count are the vertex pairs.
 */
struct CnfInstance {
    int order = 0;
    int variable_count = 0;
    int edge_variable_count = 0;
    std::vector<std::vector<int>> clauses;
    std::map<std::pair<int, int>, int> edge_var_map;
    /// Indexed by variable - edge_variable_count - 1.
    std::vector<AuxDefinition> aux;

    int edge_var(int u, int v) const { return edge_var_map.at({std::min(u, v), std::max(u, v)}); }
};

namespace detail {

class CnfBuilder {
public:
    explicit CnfBuilder(int order)
    {
        cnf_.order = order;
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v)
                cnf_.edge_var_map[{u, v}] = ++cnf_.variable_count;
        cnf_.edge_variable_count = cnf_.variable_count;
    }

    int edge(int u, int v) const { return cnf_.edge_var(u, v); }

    int fresh(AuxDefinition def)
    {
        cnf_.aux.push_back(std::move(def));
        return ++cnf_.variable_count;
    }

    void add(std::vector<int> clause) { cnf_.clauses.push_back(std::move(clause)); }

    /// Sequential counter for "at most `bound` of `lits`", each clause weakened by `guard`.
    void at_most(const std::vector<int>& lits, int bound, const std::vector<int>& guard)
    {
        const int m = static_cast<int>(lits.size());
        if (bound >= m)
            return;
        auto guarded = [&](std::vector<int> c) {
            c.insert(c.end(), guard.begin(), guard.end());
            add(std::move(c));
        };
        if (bound == 0) {
            for (int l : lits)
                guarded({-l});
            return;
        }
        // s[i][j] <-> at least j+1 of lits[0..i] are true
        std::vector<std::vector<int>> s(m - 1, std::vector<int>(bound));
        for (int i = 0; i < m - 1; ++i)
            for (int j = 0; j < bound; ++j)
                s[i][j] = fresh({AuxDefinition::Kind::at_least,
                                 std::vector<int>(lits.begin(), lits.begin() + i + 1), j + 1});
        guarded({-lits[0], s[0][0]});
        for (int j = 1; j < bound; ++j)
            guarded({-s[0][j]});
        for (int i = 1; i < m - 1; ++i) {
            guarded({-lits[i], s[i][0]});
            guarded({-s[i - 1][0], s[i][0]});
            for (int j = 1; j < bound; ++j) {
                guarded({-lits[i], -s[i - 1][j - 1], s[i][j]});
                guarded({-s[i - 1][j], s[i][j]});
            }
            guarded({-lits[i], -s[i - 1][bound - 1]});
        }
        guarded({-lits[m - 1], -s[m - 2][bound - 1]});
    }

    CnfInstance finish() && { return std::move(cnf_); }

private:
    CnfInstance cnf_;
};

template <typename F>
void for_each_subset(int n, int k, F&& f)
{
    std::vector<int> pick(k);
    auto rec = [&](auto&& self, int idx, int from) -> void {
        if (idx == k) {
            f(pick);
            return;
        }
        for (int v = from; v <= n - (k - idx); ++v) {
            pick[idx] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
}

/// Every way to place the parts of `m` on disjoint vertex sets, calling f(parts).
inline void for_each_placement(int n, const MultipartitePattern& m,
                               const std::function<void(const std::vector<std::vector<int>>&)>& f)
{
    std::vector<std::vector<int>> placed;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t part) -> void {
        if (part == m.parts().size()) {
            f(placed);
            return;
        }
        std::vector<int> free;
        for (int v = 0; v < n; ++v)
            if (!used[v])
                free.push_back(v);
        const int a = m.parts()[part];
        if (static_cast<int>(free.size()) < a)
            return;
        for_each_subset(static_cast<int>(free.size()), a, [&](const std::vector<int>& idx) {
            std::vector<int> set;
            for (int i : idx)
                set.push_back(free[i]);
            for (int v : set)
                used[v] = true;
            placed.push_back(set);
            self(self, part + 1);
            placed.pop_back();
            for (int v : set)
                used[v] = false;
        });
    };
    rec(rec, 0);
}

} // namespace detail

/**
 * One variable per vertex pair (true = edge). For each placement of h1 a
 * clause forbids all of its cross pairs at once. For each k-set S, a guard
 * (some pair inside S is an edge) or a sequential counter allowing at most
 * n-k-1 vertices outside S that are non-adjacent to all of S.
 */
inline CnfInstance encode_arrowing_cnf(int order, const RamseyQuery& q)
{
    if (order < 0)
        throw InputError("negative order");
    if (order > cnf_order_cap)
        throw CapacityError("CNF export supports order <= " + std::to_string(cnf_order_cap));
    detail::CnfBuilder b(order);

    if (q.h1.part_count() == 1) {
        if (q.h1.total() <= order) {
            // K_1(a) is edgeless: every graph with >= a vertices contains it.
            const int f = b.fresh({AuxDefinition::Kind::constant, {}, 0});
            b.add({f});
            b.add({-f});
        }
    } else {
        std::set<std::vector<int>> forbidden;
        detail::for_each_placement(order, q.h1, [&](const std::vector<std::vector<int>>& parts) {
            std::vector<int> clause;
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = i + 1; j < parts.size(); ++j)
                    for (int u : parts[i])
                        for (int v : parts[j])
                            clause.push_back(-b.edge(u, v));
            std::sort(clause.begin(), clause.end());
            forbidden.insert(std::move(clause));
        });
        for (const auto& c : forbidden)
            b.add(c);
    }

    const int k = q.h2.spine;
    const int bound = q.h2.total - k - 1;
    if (k <= order) {
        detail::for_each_subset(order, k, [&](const std::vector<int>& spine) {
            std::vector<int> guard;
            for (std::size_t i = 0; i < spine.size(); ++i)
                for (std::size_t j = i + 1; j < spine.size(); ++j)
                    guard.push_back(b.edge(spine[i], spine[j]));
            std::vector<int> common;
            for (int w = 0; w < order; ++w) {
                if (std::find(spine.begin(), spine.end(), w) != spine.end())
                    continue;
                if (k == 1) {
                    common.push_back(-b.edge(spine[0], w));
                    continue;
                }
                std::vector<int> pairs;
                for (int s : spine)
                    pairs.push_back(b.edge(s, w));
                const int y = b.fresh({AuxDefinition::Kind::all_false, pairs, 0});
                pairs.push_back(y);
                b.add(pairs);
                common.push_back(y);
            }
            b.at_most(common, bound, guard);
        });
    }
    return std::move(b).finish();
}

namespace detail {

inline bool literal_value(const std::vector<bool>& value, int lit) { return lit > 0 ? value[lit] : !value[-lit]; }

} // namespace detail

/// Completes the assignment from g's edges (auxiliaries by their definitions) and checks every clause.
inline bool check_assignment(const CnfInstance& c, const Graph& g)
{
    if (g.order() != c.order)
        throw InputError("graph order " + std::to_string(g.order()) + " does not match CNF order "
                         + std::to_string(c.order));
    std::vector<bool> value(c.variable_count + 1, false);
    for (const auto& [pair, var] : c.edge_var_map)
        value[var] = g.adjacent(pair.first, pair.second);
    for (std::size_t i = 0; i < c.aux.size(); ++i) {
        const auto& def = c.aux[i];
        bool v = false;
        switch (def.kind) {
        case AuxDefinition::Kind::all_false:
            v = std::none_of(def.literals.begin(), def.literals.end(),
                             [&](int l) { return detail::literal_value(value, l); });
            break;
        case AuxDefinition::Kind::at_least:
            v = std::count_if(def.literals.begin(), def.literals.end(),
                              [&](int l) { return detail::literal_value(value, l); })
                >= def.threshold;
            break;
        case AuxDefinition::Kind::constant:
            v = def.threshold != 0;
            break;
        }
        value[c.edge_variable_count + 1 + i] = v;
    }
    return std::all_of(c.clauses.begin(), c.clauses.end(), [&](const std::vector<int>& clause) {
        return std::any_of(clause.begin(), clause.end(), [&](int l) { return detail::literal_value(value, l); });
    });
}

/// DIMACS with "c edge <var> <u> <v>" comments recording the pair variables.
inline void write_dimacs(std::ostream& out, const CnfInstance& c, const std::string& title = {})
{
    if (!title.empty())
        out << "c " << title << '\n';
    out << "c order " << c.order << '\n';
    for (const auto& [pair, var] : c.edge_var_map)
        out << "c edge " << var << ' ' << pair.first << ' ' << pair.second << '\n';
    out << "p cnf " << c.variable_count << ' ' << c.clauses.size() << '\n';
    for (const auto& clause : c.clauses) {
        for (int l : clause)
            out << l << ' ';
        out << "0\n";
    }
}

} // namespace bookramsey

#endif
