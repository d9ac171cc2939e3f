#ifndef BOOKRAMSEY_RECORDS_HPP
#define BOOKRAMSEY_RECORDS_HPP

// JSON records written by the command-line tool. Field layout is fixed by the
// schemas under schema/; keys are emitted in sorted order so equal inputs give
// byte-identical output.

#include "extremal.hpp"
#include "graph6.hpp"
#include "ramsey.hpp"
#include "structure.hpp"

#include "json.hpp"

namespace bookramsey {

using Json = nlohmann::json;

inline Json to_json(const RamseyQuery& q)
{
    return Json{{"h1", q.h1.parts()}, {"h2", {{"k", q.h2.spine}, {"n", q.h2.total}}}};
}

template <typename T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const WitnessCertificate& c, const RamseyQuery& q)
{
    Json j;
    j["query"] = to_json(q);
    j["order"] = c.graph.order();
    j["graph6"] = graph6_encode(c.graph);
    j["h1_free"] = c.h1_free;
    j["complement_book_free"] = c.complement_book_free;
    j["certified_lower"] = optional_json(c.certified_lower);
    j["h1_embedding"] = c.h1_embedding ? Json(c.h1_embedding->parts) : Json(nullptr);
    j["book_embedding"] = c.book_embedding
                              ? Json{{"spine", c.book_embedding->spine}, {"pages", c.book_embedding->pages}}
                              : Json(nullptr);
    return j;
}

inline Json to_json(const RamseyBound& b)
{
    Json j;
    j["query"] = to_json(b.query);
    j["lower"] = optional_json(b.lower);
    j["upper"] = optional_json(b.upper);
    j["value"] = optional_json(b.value());
    j["method"] = {{"lower", to_string(b.lower_method)}, {"upper", to_string(b.upper_method)}};
    j["note"] = b.note;
    j["witness"] = b.witness ? to_json(*b.witness, b.query) : Json(nullptr);
    return j;
}

inline Json to_json(const DkResult& r, const DkQuery& q)
{
    return Json{{"n", q.n},
                {"k", q.k},
                {"pattern", q.pattern.parts()},
                {"value", r.value},
                {"witness_order", r.witness.order()},
                {"witness_graph6", graph6_encode(r.witness)},
                {"low_degree_count", r.low_degree_count}};
}

inline Json to_json(const PartitionDiagnostics& d, const PartitionState& st)
{
    return Json{{"classes", d.classes},
                {"epsilon", d.epsilon},
                {"assignment", st.assignment},
                {"part_sizes", st.part_sizes},
                {"internal_edges", st.internal_edges},
                {"moves", st.moves},
                {"internal_edge_ratio", d.internal_edge_ratio},
                {"size_deviations", d.size_deviations},
                {"cross_densities", d.cross_densities},
                {"condition_iv_violations", d.condition_iv_violations},
                {"internal_ok", d.internal_ok},
                {"sizes_ok", d.sizes_ok},
                {"cross_ok", d.cross_ok}};
}

} // namespace bookramsey

#endif
