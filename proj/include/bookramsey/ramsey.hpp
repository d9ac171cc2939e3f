#ifndef BOOKRAMSEY_RAMSEY_HPP
#define BOOKRAMSEY_RAMSEY_HPP

#include "constructions.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "patterns.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace bookramsey {

/// r(K_p(a_1..a_p), B_{k,n})
struct RamseyQuery {
    MultipartitePattern h1;
    BookPattern h2;

    friend bool operator==(const RamseyQuery&, const RamseyQuery&) = default;
};

/**
 * Outcome of checking one graph against a query. When both freeness facts
 * hold the graph certifies r(h1, h2) >= order + 1; otherwise the violating
 * embedding (in g, or in its complement for the book) is recorded.
 */
struct WitnessCertificate {
    Graph graph;
    bool h1_free = false;
    bool complement_book_free = false;
    std::optional<std::int64_t> certified_lower;
    std::optional<MultipartiteEmbedding> h1_embedding;
    std::optional<BookEmbedding> book_embedding;

    bool certified() const { return certified_lower.has_value(); }
};

inline WitnessCertificate verify_witness(const Graph& g, const RamseyQuery& q)
{
    WitnessCertificate cert;
    cert.graph = g;
    cert.h1_embedding = find_multipartite(g, q.h1);
    cert.h1_free = !cert.h1_embedding;
    cert.book_embedding = find_book(complement(g), q.h2);
    cert.complement_book_free = !cert.book_embedding;
    if (cert.h1_free && cert.complement_book_free)
        cert.certified_lower = g.order() + 1;
    return cert;
}

/// Both freeness facts, without building the certificate.
inline bool is_counterexample(const Graph& g, const RamseyQuery& q)
{
    return !contains_multipartite(g, q.h1) && !contains_book(complement(g), q.h2);
}

// Closed-form values. Exact integer arithmetic throughout.

/// (chi(H1)-1)(n-1) + s(H1); a lower bound for connected H2 of order n >= s(H1).
inline std::int64_t burr_lower(const Graph& h1, std::int64_t n)
{
    const auto info = chromatic_info(h1);
    if (n < info.surplus)
        throw InputError("burr_lower needs n >= s(H1)");
    return static_cast<std::int64_t>(info.chi - 1) * (n - 1) + info.surplus;
}

/// r(K_p, T_n) = (p-1)(n-1) + 1 for any tree T_n.
inline std::int64_t chvatal_value(std::int64_t p, std::int64_t n)
{
    if (p < 2 || n < 1)
        throw InputError("chvatal_value needs p >= 2, n >= 1");
    return (p - 1) * (n - 1) + 1;
}

inline void check_formula_args(std::int64_t p, std::int64_t a2, std::int64_t k, std::int64_t n)
{
    if (p < 2 || a2 < 1 || k < 1 || n < k + 2)
        throw InputError("formula needs p >= 2, a2 >= 1, k >= 1, n >= k + 2");
}

/// (p-1)(floor((n-k-1)/a2) + k) a2 + 1: the lower bound certified by make_section2_witness.
inline std::int64_t eq3_lower(std::int64_t p, std::int64_t a2, std::int64_t k, std::int64_t n)
{
    check_formula_args(p, a2, k, n);
    return (p - 1) * ((n - k - 1) / a2 + k) * a2 + 1;
}

struct TheoremValue {
    std::int64_t value = 0;
    /// a2 | (n-1-k): the case where the upper bound is attained.
    bool divisibility_holds = false;
};

/**
 * (p-1)(n-1) + k(p-1)(a2-1) + 1, the large-n upper bound for
 * r(K_p(1, a2, ...), B_{k,n}); also the K_p(1, a, b, ..., b) bound with a = a2.
 */
inline TheoremValue thm_value(std::int64_t p, std::int64_t a2, std::int64_t k, std::int64_t n)
{
    check_formula_args(p, a2, k, n);
    return {(p - 1) * (n - 1) + k * (p - 1) * (a2 - 1) + 1, (n - 1 - k) % a2 == 0};
}

// Exhaustive computation.

inline std::optional<Graph> find_counterexample(int order, const RamseyQuery& q, int threads = 1)
{
    const auto counter = [&](const Graph& g) { return is_counterexample(g, q); };
    // Counterexamples are closed under vertex deletion, so the search only grows counterexamples.
    return find_first_graph(order, [](const Graph&) { return true; }, counter, threads);
}

struct ArrowResult {
    bool arrows = false;
    /// Present iff !arrows: the first counterexample in generation order.
    std::optional<WitnessCertificate> counterexample;
};

/// Whether every graph on `order` vertices contains h1 or has h2 in its complement.
inline ArrowResult arrows(int order, const RamseyQuery& q, int threads = 1)
{
    auto hit = find_counterexample(order, q, threads);
    if (!hit)
        return {true, std::nullopt};
    return {false, verify_witness(*hit, q)};
}

enum class BoundMethod { unknown, exhaustive, witness, formula };

inline std::string to_string(BoundMethod m)
{
    switch (m) {
    case BoundMethod::exhaustive:
        return "exhaustive";
    case BoundMethod::witness:
        return "witness";
    case BoundMethod::formula:
        return "formula";
    case BoundMethod::unknown:
        break;
    }
    return "unknown";
}

struct RamseyBound {
    RamseyQuery query;
    std::optional<std::int64_t> lower;
    std::optional<std::int64_t> upper;
    BoundMethod lower_method = BoundMethod::unknown;
    BoundMethod upper_method = BoundMethod::unknown;
    /// Free-text qualifier, e.g. the hypothesis a formula needs.
    std::string note;
    std::optional<WitnessCertificate> witness;

    std::optional<std::int64_t> value() const
    {
        if (lower && upper && *lower == *upper)
            return lower;
        return std::nullopt;
    }
};

/**
 * Smallest N <= n_max with arrows(N, q), searching upward from N = 1. The
 * counterexample on N-1 vertices is attached. If no N <= n_max arrows, the
 * result is "lower = n_max + 1, upper unknown" with the n_max counterexample.
 */
inline RamseyBound ramsey_exact(const RamseyQuery& q, int n_max, int threads = 1)
{
    detail::check_enumeration_order(n_max);
    RamseyBound bound;
    bound.query = q;
    std::optional<WitnessCertificate> last;
    if (auto zero = find_counterexample(0, q))
        last = verify_witness(*zero, q);
    for (int n = 1; n <= n_max; ++n) {
        auto result = arrows(n, q, threads);
        if (result.arrows) {
            bound.lower = bound.upper = n;
            bound.lower_method = bound.upper_method = BoundMethod::exhaustive;
            bound.witness = std::move(last);
            return bound;
        }
        last = std::move(result.counterexample);
    }
    bound.lower = n_max + 1;
    bound.lower_method = BoundMethod::exhaustive;
    bound.witness = std::move(last);
    bound.note = "no arrowing order <= " + std::to_string(n_max);
    return bound;
}

/// The lower bound a certified witness gives, as a RamseyBound.
inline RamseyBound bound_from_witness(const WitnessCertificate& cert, const RamseyQuery& q)
{
    RamseyBound bound;
    bound.query = q;
    if (cert.certified_lower) {
        bound.lower = cert.certified_lower;
        bound.lower_method = BoundMethod::witness;
    }
    bound.witness = cert;
    return bound;
}

/**
 * Lower bound from make_section2_witness and thm_value as the upper
 * bound, for h1 = K_p(1, a2, ...). The upper bound is only promised for
 * large n (and a_p small against n, or the K_p(1, a, b, ..., b) shape with
 * b <= delta ln n); that hypothesis is stated in `note`, never checked.
 */
inline RamseyBound formula_bound(const RamseyQuery& q)
{
    const auto& parts = q.h1.parts();
    if (parts.size() < 2 || parts[0] != 1)
        throw InputError("formula_bound needs h1 = K_p(1, a2, ...)");
    const std::int64_t p = q.h1.part_count();
    const std::int64_t a2 = parts[1];
    RamseyBound bound;
    bound.query = q;
    bound.lower = eq3_lower(p, a2, q.h2.spine, q.h2.total);
    bound.lower_method = BoundMethod::formula;
    bound.upper = thm_value(p, a2, q.h2.spine, q.h2.total).value;
    bound.upper_method = BoundMethod::formula;
    bound.note = "upper bound holds for large n only (a_p <= delta n, or K_p(1,a,b,...,b) with b <= delta ln n)";
    return bound;
}

} // namespace bookramsey

#endif
