#ifndef BOOKRAMSEY_EXTREMAL_HPP
#define BOOKRAMSEY_EXTREMAL_HPP

#include "constructions.hpp"
#include "enumerate.hpp"
#include "patterns.hpp"
#include "ramsey.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

namespace bookramsey {

/// d_k(n, H) for a forbidden complete multipartite H (typically K_{a1,a2}).
struct DkQuery {
    int n = 1;
    int k = 1;
    MultipartitePattern pattern;
};

struct DkResult {
    int value = 0;
    /// H-free, on n + value - 1 vertices, at most k-1 vertices of degree < value.
    Graph witness;
    int low_degree_count = 0;
};

inline int count_low_degree(const Graph& g, int d)
{
    int low = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < d)
            ++low;
    return low;
}

/// Direct re-check of a DkResult against its query.
inline bool verify_dk_result(const DkQuery& q, const DkResult& r)
{
    return r.value >= 0 && r.witness.order() == q.n + r.value - 1 && !contains_multipartite(r.witness, q.pattern)
           && count_low_degree(r.witness, r.value) == r.low_degree_count && r.low_degree_count <= q.k - 1;
}

/// d_k(n, K_{1,a2}) <= a2 - 1: at least n+d-k vertices have degree >= d in a K_{1,a2}-free graph.
inline int dk_star_cap(int k, int a2)
{
    if (k < 1 || a2 < 1)
        throw InputError("dk_star_cap needs k >= 1, a2 >= 1");
    return a2 - 1;
}

/// First H-free graph on n+d-1 vertices (generation order) with at most k-1 vertices of degree < d.
inline std::optional<Graph> dk_witness(const DkQuery& q, int d)
{
    const int order = q.n + d - 1;
    return find_first_graph(
        order, [&](const Graph& g) { return count_low_degree(g, d) <= q.k - 1; },
        [&](const Graph& g) { return !contains_multipartite(g, q.pattern); });
}

/**
 * Exhaustive d_k(n, H). Witness existence is monotone in d (deleting a vertex
 * from a witness for d+1 gives one for d), so the search climbs from d = 0
 * and stops at the first d without a witness. For stars K_{1,a2} it also
 * stops at max(a2 - 1, k - n): past k - n some vertex must have degree >= d,
 * and such a vertex is the centre of a K_{1,d}.
 */
inline DkResult dk_value(const DkQuery& q)
{
    if (q.n < 1 || q.k < 1)
        throw InputError("dk_value needs n >= 1, k >= 1");
    const auto& parts = q.pattern.parts();
    const bool star = parts.size() == 2 && parts[0] == 1;
    const int cap = star ? std::max(dk_star_cap(q.k, parts[1]), q.k - q.n) : std::numeric_limits<int>::max();
    DkResult best;
    for (int d = 0; d <= cap; ++d) {
        if (q.n + d - 1 > enumeration_cap)
            throw CapacityError("d_k search would need order " + std::to_string(q.n + d - 1) + " > "
                                + std::to_string(enumeration_cap));
        auto w = dk_witness(q, d);
        if (!w) {
            if (d == 0)
                throw InputError("no d = 0 witness: pattern " + q.pattern.to_string() + " is unavoidable on "
                                 + std::to_string(q.n - 1) + " vertices");
            break;
        }
        best.value = d;
        best.low_degree_count = count_low_degree(*w, d);
        best.witness = std::move(*w);
    }
    return best;
}

/// Lifts a d_k witness to the (p-1)(n-1)+d vertex lower-bound graph and verifies it against q.
inline WitnessCertificate assemble_eq2_bound(int p, int n, const DkResult& dk, const RamseyQuery& q)
{
    if (dk.witness.order() != n + dk.value - 1)
        throw InputError("d_k witness order does not match n + d - 1");
    return verify_witness(make_dk_witness_assembly(p, n, dk.witness, dk.value), q);
}

} // namespace bookramsey

#endif
