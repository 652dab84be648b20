#include <cwlab/cli.hpp>
#include <cwlab/canonical.hpp>
#include <cwlab/classifier.hpp>
#include <cwlab/cliquewidth.hpp>
#include <cwlab/generators.hpp>
#include <cwlab/io.hpp>
#include <cwlab/patterns.hpp>
#include <cwlab/suites.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <sstream>

namespace cwlab {

namespace {

Graph load_graph(const std::string & spec)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec))
        return read_graph_file(spec);
    return pattern(spec);
}

std::string emit_graph(const Graph & g, bool graph6) { return graph6 ? write_graph6(g) + "\n" : write_text(g); }

VertexSet checked_set(const Graph & g, const std::vector<int> & s) { return normalize_set(g, s); }

struct Options {
    // gen
    std::string family;
    std::string pattern_name;
    int height = 2;
    int subdivide = 0;
    bool trace = false;
    bool graph6 = false;
    // transform
    std::string op;
    std::vector<int> set_a, set_b;
    // free, cw, classify
    std::string graph;
    std::vector<std::string> patterns;
    int max_n = 10;
    bool expr = false;
    std::string builder = "exact";
    std::string h1, h2;
    std::vector<std::string> family_names;
    std::vector<std::string> sc_set;
    bool with_complement = false;
    // verify
    std::string suite;
    int suite_max_n = 0;
    bool quiet = false;
    // enumerate
    int order = 0;
    bool self_comp = false;
    bool count_only = false;
};

int cmd_gen(const Options & o, std::ostream & out)
{
    if (! o.pattern_name.empty()) {
        out << emit_graph(pattern(o.pattern_name), o.graph6);
        return 0;
    }
    if (o.family == "wall") {
        Graph g = wall(o.height).graph;
        if (o.subdivide > 0)
            g = subdivide_all(g, o.subdivide).graph;
        out << emit_graph(g, o.graph6);
        return 0;
    }
    Construction c;
    if (o.family == "thm5")
        c = thm5_graph(o.height);
    else if (o.family == "thm6")
        c = thm6_graph(o.height);
    else if (o.family == "thm7")
        c = thm7_graph(o.height);
    else
        throw CLI::ValidationError("--family", "expected wall, thm5, thm6 or thm7");
    out << emit_graph(c.graph, o.graph6);
    if (o.trace)
        out << format_trace(c.trace);
    return 0;
}

int cmd_transform(const Options & o, std::ostream & out)
{
    const Graph g = load_graph(o.graph);
    Graph r;
    if (o.op == "complement")
        r = complement(g);
    else if (o.op == "subgraph-complement")
        r = subgraph_complementation(g, checked_set(g, o.set_a));
    else if (o.op == "bipartite-complement")
        r = bipartite_complementation(g, checked_set(g, o.set_a), checked_set(g, o.set_b));
    else if (o.op == "delete")
        r = delete_vertices(g, checked_set(g, o.set_a));
    else if (o.op == "induced")
        r = induced_subgraph(g, checked_set(g, o.set_a));
    else
        throw CLI::ValidationError("--op", "unknown operation '" + o.op + "'");
    out << emit_graph(r, o.graph6);
    return 0;
}

int cmd_free(const Options & o, std::ostream & out)
{
    const Graph g = load_graph(o.graph);
    bool all = true;
    for (const auto & name : o.patterns) {
        auto hit = contains_induced(g, pattern(name));
        all = all && ! hit;
        out << "ITEM " << name << (hit ? " FAIL " + format_set(*hit) : std::string(" PASS")) << "\n";
    }
    out << (all ? "PASS" : "FAIL") << " " << o.patterns.size() << " patterns\n";
    return all ? 0 : 1;
}

int cmd_cw(const Options & o, std::ostream & out)
{
    const Graph g = load_graph(o.graph);
    WidthCertificate cert;
    if (o.builder == "exact") {
        auto r = exact_cliquewidth(g, {.max_n = o.max_n, .budget = std::nullopt});
        out << r.width << "\n";
        if (o.expr && r.certificate)
            out << to_text(r.certificate->expr) << "\n";
        return 0;
    }
    if (o.builder == "cograph")
        cert = cograph_expression(g);
    else if (o.builder == "degree2")
        cert = degree2_expression(g);
    else if (o.builder == "primes") {
        out << cw_via_primes(g, o.max_n) << "\n";
        return 0;
    }
    else
        throw CLI::ValidationError("--builder", "expected exact, cograph, degree2 or primes");
    out << cert.width << "\n";
    if (o.expr)
        out << to_text(cert.expr) << "\n";
    return 0;
}

std::vector<Graph> load_all(const std::vector<std::string> & names)
{
    std::vector<Graph> out;
    for (const auto & n : names)
        out.push_back(load_graph(n));
    return out;
}

int cmd_classify(const Options & o, std::ostream & out)
{
    Verdict v;
    if (! o.sc_set.empty())
        v = classify_self_comp_set(load_all(o.sc_set));
    else if (o.h1.empty())
        throw CLI::ValidationError("--h1", "required unless --sc-set is given");
    else if (! o.family_names.empty())
        v = classify_pair_with_family(load_graph(o.h1), load_all(o.family_names));
    else if (o.with_complement)
        v = classify_pair_complement(load_graph(o.h1));
    else if (! o.h2.empty())
        v = classify_bigenic(load_graph(o.h1), load_graph(o.h2));
    else
        v = classify_single(load_graph(o.h1));
    out << to_string(v.status) << " " << v.citation << "\n";
    return v.status == Status::Open ? 1 : 0;
}

int cmd_verify(const Options & o, std::ostream & out)
{
    SuiteOptions so;
    if (o.suite_max_n > 0)
        so.max_n = o.suite_max_n;
    std::vector<std::string> names{o.suite};
    if (o.suite == "all")
        names = suite_names();
    bool all = true;
    for (const auto & name : names) {
        auto r = run_suite(name, so);
        all = all && r.pass;
        if (o.quiet)
            out << (r.pass ? "PASS " : "FAIL ") << r.summary << "\n";
        else
            out << r.text();
    }
    return all ? 0 : 1;
}

int cmd_enumerate(const Options & o, std::ostream & out)
{
    std::vector<Graph> gs;
    if (o.self_comp)
        gs = enumerate_self_complementary(o.order);
    else if (o.patterns.empty())
        gs = enumerate_graphs(o.order);
    else {
        auto forbid = load_all(o.patterns);
        gs = enumerate_hereditary(o.order, [&](const Graph & g) { return is_free(g, forbid); });
    }
    if (o.count_only)
        out << gs.size() << "\n";
    else
        for (const auto & g : gs)
            out << write_graph6(g) << "\n";
    return 0;
}

} // namespace

CliResult run(const std::vector<std::string> & args)
{
    CliResult result;
    std::ostringstream out, err;
    Options o;

    CLI::App app{"clique-width laboratory", "cwlab"};
    app.require_subcommand(1, 1);

    auto * gen = app.add_subcommand("gen", "generate a pattern, wall or construction");
    auto * fam = gen->add_option("--family", o.family, "wall, thm5, thm6 or thm7");
    gen->add_option("--pattern", o.pattern_name, "pattern name")->excludes(fam);
    gen->add_option("--height", o.height, "wall height");
    gen->add_option("--subdivide", o.subdivide, "subdivide every wall edge k times");
    gen->add_flag("--trace", o.trace, "print CLASS lines");
    gen->add_flag("--graph6", o.graph6, "graph6 output");

    auto * transform = app.add_subcommand("transform", "apply a graph operation");
    transform->add_option("--graph", o.graph, "pattern name or file")->required();
    transform->add_option("--op", o.op, "complement, subgraph-complement, bipartite-complement, delete or induced")->required();
    transform->add_option("--set", o.set_a, "vertex set")->delimiter(',');
    transform->add_option("--set2", o.set_b, "second vertex set")->delimiter(',');
    transform->add_flag("--graph6", o.graph6, "graph6 output");

    auto * free = app.add_subcommand("free", "check freeness of induced patterns");
    free->add_option("--graph", o.graph, "pattern name or file")->required();
    free->add_option("--patterns", o.patterns, "forbidden patterns")->required();

    auto * cw = app.add_subcommand("cw", "clique-width");
    cw->add_option("--graph", o.graph, "pattern name or file")->required();
    cw->add_option("--max-n", o.max_n, "largest order for the exact solver");
    cw->add_option("--builder", o.builder, "exact, cograph, degree2 or primes");
    cw->add_flag("--expr", o.expr, "print the expression");

    auto * classify = app.add_subcommand("classify", "boundedness verdict");
    classify->add_option("--h1", o.h1, "first forbidden graph");
    classify->add_option("--h2", o.h2, "second forbidden graph");
    classify->add_option("--family", o.family_names, "self-complementary family added to (h1, co-h1)");
    classify->add_flag("--with-complement", o.with_complement, "classify (h1, co-h1)");
    classify->add_option("--sc-set", o.sc_set, "set of self-complementary graphs");

    auto * verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", o.suite, "suite name or all")->required();
    verify->add_option("--max-n", o.suite_max_n, "override the suite's largest order");
    verify->add_flag("--quiet", o.quiet, "summary line only");

    auto * enumerate = app.add_subcommand("enumerate", "list graphs of one order in graph6");
    enumerate->add_option("--n", o.order, "order")->required();
    enumerate->add_option("--free", o.patterns, "forbidden patterns");
    enumerate->add_flag("--self-complementary", o.self_comp, "self-complementary graphs only");
    enumerate->add_flag("--count", o.count_only, "print the count only");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        result.code = code == 0 ? 0 : 2;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    try {
        if (gen->parsed())
            result.code = cmd_gen(o, out);
        else if (transform->parsed())
            result.code = cmd_transform(o, out);
        else if (free->parsed())
            result.code = cmd_free(o, out);
        else if (cw->parsed())
            result.code = cmd_cw(o, out);
        else if (classify->parsed())
            result.code = cmd_classify(o, out);
        else if (verify->parsed())
            result.code = cmd_verify(o, out);
        else
            result.code = cmd_enumerate(o, out);
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        result.code = 2;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace cwlab
