#ifndef BOOKRAMSEY_CLI_HPP
#define BOOKRAMSEY_CLI_HPP

#include "cnf.hpp"
#include "constructions.hpp"
#include "extremal.hpp"
#include "graph6.hpp"
#include "patterns.hpp"
#include "ramsey.hpp"
#include "records.hpp"
#include "structure.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace bookramsey::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2, capacity = 3 };

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw InputError("");
        } catch (const std::exception&) {
            throw InputError("bad " + what + " '" + text + "': expected comma-separated integers");
        }
    }
    if (out.empty())
        throw InputError("empty " + what);
    return out;
}

inline MultipartitePattern parse_pattern(const std::string& text)
{
    return MultipartitePattern(parse_int_list(text, "multipartite pattern"));
}

inline BookPattern parse_book(const std::string& text)
{
    const auto v = parse_int_list(text, "book");
    if (v.size() != 2)
        throw InputError("book must be given as k,n");
    return BookPattern(v[0], v[1]);
}

inline Graph read_graph(const std::string& arg, std::istream& in)
{
    std::string text = arg;
    if (arg == "-" && !std::getline(in, text))
        throw InputError("no graph on standard input");
    return decode_graph(text);
}

/**
 * Runs one subcommand. Exit codes: 0 success or verified, 1 verification
 * failed or a counterexample was found (the output is still valid), 2 usage
 * or parse error, 3 capacity exceeded.
 */
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in)
{
    CLI::App app{"Ramsey goodness toolkit for books versus complete multipartite graphs", "bookramsey"};
    app.require_subcommand(1);

    std::string family, parts_text, h1_text, h2_text, graph_text, name, multipartite_text, book_text;
    int k = 0, n = 0, order = 0, classes = 0, p = 0, a2 = 0, q = 0, a = 0, max_n = enumeration_cap, threads = 1;
    std::uint64_t seed = 0;
    double epsilon = 0.1;
    bool in_complement = false;

    auto* construct = app.add_subcommand("construct", "Build a named graph family; prints graph6");
    construct->add_option("--family", family, "book|multipartite|turan|section2|er|cycle|path|complete|empty")
        ->required();
    construct->add_option("--k", k, "book spine / section2 k");
    construct->add_option("--n", n, "book order / section2 n");
    construct->add_option("--parts", parts_text, "part sizes, e.g. 1,2,2");
    construct->add_option("--order", order, "vertex count (turan, cycle, path, complete, empty)");
    construct->add_option("--classes", classes, "turan classes");
    construct->add_option("--p", p, "section2 p");
    construct->add_option("--a2", a2, "section2 a2");
    construct->add_option("--q", q, "ER_q prime");

    auto* check_free = app.add_subcommand("check-free", "Test a graph for a multipartite or book subgraph");
    check_free->add_option("--graph", graph_text, "graph6 or sparse6, '-' for stdin")->required();
    auto* mp_opt = check_free->add_option("--multipartite", multipartite_text, "part sizes, e.g. 2,2");
    auto* book_opt = check_free->add_option("--book", book_text, "k,n");
    mp_opt->excludes(book_opt);
    check_free->add_flag("--complement", in_complement, "check the complement instead");

    auto* verify = app.add_subcommand("verify-witness", "Certify a Ramsey lower bound; prints JSON");
    verify->add_option("--graph", graph_text, "graph6 or sparse6, '-' for stdin")->required();
    verify->add_option("--h1", h1_text, "K_p(a_1..a_p) part sizes")->required();
    verify->add_option("--h2", h2_text, "book k,n")->required();

    auto* exact = app.add_subcommand("ramsey-exact", "Exhaustive r(h1, h2) up to --max-n; prints JSON");
    exact->add_option("--h1", h1_text, "K_p(a_1..a_p) part sizes")->required();
    exact->add_option("--h2", h2_text, "book k,n")->required();
    exact->add_option("--max-n", max_n, "largest order searched (<= 10)");
    exact->add_option("--threads", threads, "worker threads");

    auto* dk = app.add_subcommand("dk", "Exhaustive d_k(n, H); prints JSON");
    dk->add_option("--n", n)->required();
    dk->add_option("--k", k)->required();
    dk->add_option("--pattern", parts_text, "forbidden K_p(a_1..a_p), e.g. 2,2")->required();

    auto* formula = app.add_subcommand("formula", "Evaluate a closed-form value");
    formula->add_option("--name", name, "burr|chvatal|eq3|thm14|thm15")->required();
    formula->add_option("--p", p);
    formula->add_option("--a2", a2);
    formula->add_option("--a", a, "thm15: the second part size a");
    formula->add_option("--k", k);
    formula->add_option("--n", n);
    formula->add_option("--h1", h1_text, "burr: K_p(a_1..a_p) part sizes");
    formula->add_option("--graph", graph_text, "burr: H1 as graph6");

    auto* partition = app.add_subcommand("partition", "Local-search partition and diagnostics; prints JSON");
    partition->add_option("--graph", graph_text, "graph6 or sparse6, '-' for stdin")->required();
    partition->add_option("--classes", classes)->required();
    auto* seed_opt = partition->add_option("--seed", seed, "shuffle the initial round-robin assignment");
    partition->add_option("--epsilon", epsilon, "threshold for the diagnostics, in (0,1)");

    auto* cnf = app.add_subcommand("export-cnf", "DIMACS CNF whose models are counterexamples");
    cnf->add_option("--order", order)->required();
    cnf->add_option("--h1", h1_text)->required();
    cnf->add_option("--h2", h2_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (construct->parsed()) {
            Graph g;
            if (family == "book")
                g = make_book(BookPattern(k, n));
            else if (family == "multipartite")
                g = make_multipartite(parse_pattern(parts_text));
            else if (family == "turan")
                g = make_turan(order, classes);
            else if (family == "section2")
                g = make_section2_witness(p, a2, k, n);
            else if (family == "er")
                g = make_er_polarity(q);
            else if (family == "cycle")
                g = make_cycle(order);
            else if (family == "path")
                g = make_path(order);
            else if (family == "complete")
                g = Graph::complete(order);
            else if (family == "empty")
                g = Graph::empty(order);
            else
                throw InputError("unknown family '" + family + "'");
            out << graph6_encode(g) << '\n';
            return ok;
        }
        if (check_free->parsed()) {
            Graph g = read_graph(graph_text, in);
            if (in_complement)
                g = complement(g);
            Json j;
            bool free = true;
            if (!multipartite_text.empty()) {
                const auto m = parse_pattern(multipartite_text);
                const auto e = find_multipartite(g, m);
                free = !e;
                j["pattern"] = {{"multipartite", m.parts()}};
                j["embedding"] = e ? Json(e->parts) : Json(nullptr);
            } else if (!book_text.empty()) {
                const auto b = parse_book(book_text);
                const auto e = find_book(g, b);
                free = !e;
                j["pattern"] = {{"book", {{"k", b.spine}, {"n", b.total}}}};
                j["embedding"] = e ? Json{{"spine", e->spine}, {"pages", e->pages}} : Json(nullptr);
            } else {
                throw InputError("check-free needs --multipartite or --book");
            }
            j["complement"] = in_complement;
            j["free"] = free;
            out << j.dump() << '\n';
            return free ? ok : failed;
        }
        if (verify->parsed()) {
            const RamseyQuery query{parse_pattern(h1_text), parse_book(h2_text)};
            const auto cert = verify_witness(read_graph(graph_text, in), query);
            out << to_json(cert, query).dump() << '\n';
            return cert.certified() ? ok : failed;
        }
        if (exact->parsed()) {
            const RamseyQuery query{parse_pattern(h1_text), parse_book(h2_text)};
            const auto bound = ramsey_exact(query, max_n, threads);
            out << to_json(bound).dump() << '\n';
            return bound.value() ? ok : failed;
        }
        if (dk->parsed()) {
            const DkQuery query{n, k, parse_pattern(parts_text)};
            out << to_json(dk_value(query), query).dump() << '\n';
            return ok;
        }
        if (formula->parsed()) {
            if (name == "burr") {
                Graph h1;
                if (!graph_text.empty())
                    h1 = read_graph(graph_text, in);
                else if (!h1_text.empty())
                    h1 = make_multipartite(parse_pattern(h1_text));
                else
                    throw InputError("burr needs --h1 or --graph");
                out << burr_lower(h1, n) << '\n';
            } else if (name == "chvatal") {
                out << chvatal_value(p, n) << '\n';
            } else if (name == "eq3") {
                out << eq3_lower(p, a2, k, n) << '\n';
            } else if (name == "thm14" || name == "thm15") {
                const int second = name == "thm15" && a > 0 ? a : a2;
                const auto t = thm_value(p, second, k, n);
                out << t.value << '\n' << "divisible=" << (t.divisibility_holds ? "true" : "false") << '\n';
            } else {
                throw InputError("unknown formula '" + name + "'");
            }
            return ok;
        }
        if (partition->parsed()) {
            const Graph g = read_graph(graph_text, in);
            const auto st = refine_partition(g, classes, seed_opt->count() ? std::optional(seed) : std::nullopt);
            out << to_json(partition_diagnostics(g, st, epsilon), st).dump() << '\n';
            return ok;
        }
        if (cnf->parsed()) {
            const RamseyQuery query{parse_pattern(h1_text), parse_book(h2_text)};
            const auto instance = encode_arrowing_cnf(order, query);
            write_dimacs(out, instance,
                         "graphs on " + std::to_string(order) + " vertices without K_p(" + h1_text
                             + ") whose complement has no B_{" + std::to_string(query.h2.spine) + ","
                             + std::to_string(query.h2.total) + "}");
            return ok;
        }
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return capacity;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in)
{
    std::vector<const char*> argv{"bookramsey"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err, in);
}

} // namespace bookramsey::cli

#endif
