#include <dlab/cli.hpp>

#include <dlab/delta.hpp>
#include <dlab/families.hpp>
#include <dlab/io.hpp>
#include <dlab/lambda.hpp>
#include <dlab/sequences.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace dlab::cli {

namespace {
    using json = nlohmann::ordered_json;

    struct Flags {
        std::string kind;
        int order = 0;
        int defect = 1;
        std::string entries;

        std::string family;
        int n = 0, m = 0, k = 0;
        std::string spine;

        std::string graph_file;
        std::string labeling_file;
        int length = 0;
        std::string set;
        std::string gaps;
        int d1 = 1;
        int l = 0, r = 0;
        int l_max = 0;
        int max_order = delta_search_default_cap;
        bool allow_order8 = false;
        unsigned threads = 0;
        std::uint64_t budget = default_node_budget;

        bool as_json = false;
        bool as_dot = false;
        std::string out_file;
    };

    enum class Format { text, json, dot };

    Format format_of(const Flags & f)
    {
        // --json wins over --dot
        if (f.as_json)
            return Format::json;
        if (f.as_dot)
            return Format::dot;
        return Format::text;
    }

    class Usage : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    std::string read_source(const std::string & path, std::istream & in)
    {
        if (path == "-")
            return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        std::ifstream file(path);
        if (! file)
            throw Usage("cannot read " + path);
        return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }

    FamilySpec family_spec(const Flags & f)
    {
        auto family = parse_family(f.family);
        if (! family)
            throw Usage("unknown family '" + f.family + "'");
        FamilySpec spec;
        spec.family = *family;
        spec.n = f.n;
        spec.m = f.m;
        spec.k = f.k;
        if (! f.spine.empty())
            spec.spine = parse_int_list(f.spine);
        validate(spec);
        return spec;
    }

    DeltaSet set_flag(const Flags & f)
    {
        if (f.set.empty())
            throw Usage("--set is required");
        auto v = parse_int_list(f.set);
        if (v.empty())
            throw Usage("--set must not be empty");
        return DeltaSet(std::move(v));
    }

    json graph_json(const Graph & g) { return json::parse(encode_graph(g, GraphFormat::json)); }

    std::string status_line(SearchStatus s) { return std::string(status_name(s)); }

    int seq_gen(const Flags & f, std::ostream & out)
    {
        auto kind = parse_sequence_kind(f.kind);
        if (! kind)
            throw Usage("unknown sequence kind '" + f.kind + "'");
        if (f.order < 1)
            throw Usage("--order must be positive");

        SearchResult<Sequence> result;
        std::string why;
        int defect = 1;
        switch (*kind) {
        case SequenceKind::extended_skolem:
            result.status = SearchStatus::found;
            result.value = extended_skolem(f.order);
            break;
        case SequenceKind::hooked_skolem: result = generate_hooked_skolem(f.order, f.budget); break;
        case SequenceKind::skolem:
        case SequenceKind::langford: {
            defect = *kind == SequenceKind::skolem ? 1 : f.defect;
            if (defect < 1)
                throw Usage("--defect must be positive");
            why = langford_exists(f.order, defect).reason;
            result = generate_langford(f.order, defect, f.budget);
            break;
        }
        }

        if (format_of(f) == Format::json) {
            json j;
            j["kind"] = kind_name(*kind);
            j["order"] = f.order;
            j["defect"] = defect;
            j["status"] = status_line(result.status);
            if (result.value)
                j["entries"] = result.value->entries;
            else
                j["entries"] = nullptr;
            if (! why.empty() && ! result.found())
                j["reason"] = why;
            out << j.dump() << '\n';
        }
        else if (result.found())
            out << format_int_list(result.value->entries) << '\n';
        else if (result.status == SearchStatus::budget_exceeded)
            out << "unknown (budget exhausted after " << result.nodes << " nodes)\n";
        else
            out << "none (" << (why.empty() ? status_line(result.status) : why) << ")\n";

        if (result.found())
            return ok;
        return result.status == SearchStatus::budget_exceeded ? budget : negative;
    }

    int seq_verify(const Flags & f, std::ostream & out)
    {
        auto kind = parse_sequence_kind(f.kind.empty() ? "langford" : f.kind);
        if (! kind)
            throw Usage("unknown sequence kind '" + f.kind + "'");
        if (f.entries.empty())
            throw Usage("--seq is required");
        const int defect = *kind == SequenceKind::langford ? f.defect : 1;
        auto check = verify_sequence(Sequence{parse_int_list(f.entries), *kind, defect});

        if (format_of(f) == Format::json) {
            json j;
            j["valid"] = check.valid;
            j["diagnostic"] = check.diagnostic;
            out << j.dump() << '\n';
        }
        else if (check.valid)
            out << "valid\n";
        else
            out << "invalid: " << check.diagnostic << '\n';
        return check.valid ? ok : negative;
    }

    int graph_gen(const Flags & f, std::ostream & out)
    {
        auto spec = family_spec(f);
        auto g = gen_family(spec);
        switch (format_of(f)) {
        case Format::json: out << encode_graph(g, GraphFormat::json) << '\n'; break;
        case Format::dot: out << encode_graph(g, GraphFormat::dot); break;
        case Format::text:
            out << describe(spec) << ": order " << g.order() << ", size " << g.size() << '\n';
            for (auto [u, v] : g.edges())
                out << u << ' ' << v << '\n';
            break;
        }
        return ok;
    }

    int label_construct(const Flags & f, std::ostream & out)
    {
        auto spec = family_spec(f);
        auto c = construct_family_labeling(spec, f.budget);
        switch (format_of(f)) {
        case Format::json: {
            json j;
            j["family"] = describe(spec);
            j["length"] = c.length;
            j["construction"] = c.construction;
            j["graph"] = graph_json(c.graph);
            j["labels"] = c.labeling.labels();
            out << j.dump() << '\n';
            break;
        }
        case Format::dot: out << encode_graph(c.graph, GraphFormat::dot, &c.labeling); break;
        case Format::text:
            out << describe(spec) << ": length " << c.length << " (" << c.construction << ")\n"
                << format_int_list(c.labeling.labels()) << '\n';
            break;
        }
        return ok;
    }

    int label_verify(const Flags & f, std::istream & in, std::ostream & out)
    {
        if (f.graph_file.empty() || f.labeling_file.empty())
            throw Usage("--graph and --labeling are required");
        if (f.graph_file == "-" && f.labeling_file == "-")
            throw Usage("only one of --graph and --labeling can come from stdin");
        auto g = decode_graph(read_source(f.graph_file, in));
        auto labels = decode_labeling(read_source(f.labeling_file, in));

        LabelSetKind kind = LengthKind{f.length};
        if (! f.set.empty())
            kind = SetKind{set_flag(f)};
        else if (f.length < 1)
            throw Usage("one of --length or --set is required");

        auto report = verify_labeling(g, labels, kind);
        if (format_of(f) == Format::json) {
            json j;
            j["valid"] = report.valid;
            j["image"] = report.image;
            j["proper"] = report.proper;
            if (report.regular_degree)
                j["regular_degree"] = *report.regular_degree;
            else
                j["regular_degree"] = nullptr;
            if (report.first_violation)
                j["violation"] = *report.first_violation;
            else
                j["violation"] = nullptr;
            out << j.dump() << '\n';
        }
        else if (report.valid) {
            out << "valid";
            if (report.proper)
                out << ", proper";
            if (report.regular_degree)
                out << ", regular of degree " << *report.regular_degree;
            out << '\n';
        }
        else
            out << "invalid: " << report.first_violation.value_or("") << '\n';
        return report.valid ? ok : negative;
    }

    int lambda_solve(const Flags & f, std::istream & in, std::ostream & out)
    {
        if (f.family.empty() == f.graph_file.empty())
            throw Usage("give exactly one of --family or --graph");
        auto g = f.graph_file.empty() ? gen_family(family_spec(f)) : decode_graph(read_source(f.graph_file, in));
        std::optional<int> l_max;
        if (f.l_max > 0)
            l_max = f.l_max;
        auto result = lambda_exact(g, l_max, f.budget);

        if (format_of(f) == Format::json) {
            json j;
            j["status"] = status_line(result.status);
            if (result.value) {
                j["lambda"] = result.value->length;
                j["labels"] = result.value->labeling.labels();
            }
            else {
                j["lambda"] = nullptr;
                j["labels"] = nullptr;
            }
            j["nodes"] = result.nodes;
            out << j.dump() << '\n';
        }
        else if (format_of(f) == Format::dot && result.value)
            out << encode_graph(g, GraphFormat::dot, &result.value->labeling);
        else if (result.found())
            out << result.value->length << '\n';
        else if (result.status == SearchStatus::budget_exceeded)
            out << "unknown (budget exhausted after " << result.nodes << " nodes)\n";
        else
            out << "none (no labeling of length <= " << l_max.value_or(g.order()) << ")\n";

        if (result.found())
            return ok;
        return result.status == SearchStatus::budget_exceeded ? budget : negative;
    }

    int lambda_formula(const Flags & f, std::ostream & out)
    {
        auto spec = family_spec(f);
        auto value = lambda_closed_form(spec);
        if (format_of(f) == Format::json) {
            json j;
            j["family"] = describe(spec);
            if (value)
                j["lambda"] = *value;
            else
                j["lambda"] = nullptr;
            out << j.dump() << '\n';
        }
        else if (value)
            out << *value << '\n';
        else
            out << "none (no closed form for " << describe(spec) << ")\n";
        return value ? ok : negative;
    }

    void print_certificate(const RealizationCertificate & c, Format fmt, std::ostream & out)
    {
        switch (fmt) {
        case Format::json: out << encode_certificate(c) << '\n'; break;
        case Format::dot: out << encode_graph(c.graph, GraphFormat::dot, &c.labeling); break;
        case Format::text:
            out << construction_name(c.construction) << ": order " << c.graph.order() << ", size " << c.graph.size()
                << ", sigma " << to_string(c.sigma);
            if (c.regular_degree)
                out << ", regular of degree " << *c.regular_degree;
            out << "\nlabels " << format_int_list(c.labeling.labels()) << "\nedges";
            for (auto [u, v] : c.graph.edges())
                out << ' ' << u << '-' << v;
            out << '\n';
            break;
        }
    }

    int realize(const Flags & f, std::ostream & out)
    {
        if (f.kind == "regular")
            print_certificate(realize_regular(f.l, f.r), format_of(f), out);
        else if (f.kind == "dense")
            print_certificate(realize_dense_degree2(f.l), format_of(f), out);
        else if (f.kind == "caterpillar")
            print_certificate(realize_caterpillar(set_flag(f)), format_of(f), out);
        else if (f.kind == "gap-set") {
            auto gaps = f.gaps.empty() ? std::vector<int>{} : parse_int_list(f.gaps);
            print_certificate(realize_gap_set(gaps, f.d1, f.budget).certificate, format_of(f), out);
        }
        else
            throw Usage("--kind must be one of regular, dense, caterpillar, gap-set");
        return ok;
    }

    int delta_filter_cmd(const Flags & f, std::ostream & out)
    {
        auto sigma = set_flag(f);
        auto verdict = delta_filter(sigma);
        if (format_of(f) == Format::json) {
            json j;
            j["sigma"] = sigma.values();
            j["verdict"] = verdict_name(verdict);
            out << j.dump() << '\n';
        }
        else
            out << verdict_name(verdict) << '\n';
        return verdict == DeltaVerdict::passes ? ok : negative;
    }

    DeltaSearchOptions search_options(const Flags & f)
    {
        DeltaSearchOptions o;
        o.max_order = f.max_order;
        o.allow_order8 = f.allow_order8;
        o.threads = f.threads;
        o.budget = f.budget;
        return o;
    }

    int delta_search_cmd(const Flags & f, std::ostream & out)
    {
        auto sigma = set_flag(f);
        auto result = delta_search(sigma, search_options(f));
        const std::string none = "none (exhausted order ≤ " + std::to_string(f.max_order) + ")";
        if (result.found())
            print_certificate(*result.value, format_of(f), out);
        else if (format_of(f) == Format::json) {
            json j;
            j["status"] = status_line(result.status);
            j["max_order"] = f.max_order;
            j["certificate"] = nullptr;
            out << j.dump() << '\n';
        }
        else if (result.status == SearchStatus::budget_exceeded)
            out << "unknown (budget exhausted after " << result.nodes << " nodes)\n";
        else
            out << none << '\n';

        if (result.found())
            return ok;
        return result.status == SearchStatus::budget_exceeded ? budget : negative;
    }

    int delta_freedom_cmd(const Flags & f, std::ostream & out)
    {
        auto sigma = set_flag(f);
        auto result = delta_freedom(sigma, search_options(f));
        if (! result.found()) {
            if (format_of(f) == Format::json) {
                json j;
                j["status"] = status_line(result.status);
                j["r"] = nullptr;
                out << j.dump() << '\n';
            }
            else
                out << "unknown (budget exhausted after " << result.nodes << " nodes)\n";
            return budget;
        }

        const auto & v = *result.value;
        if (format_of(f) == Format::json) {
            json j;
            j["r"] = v.r;
            j["inconclusive"] = v.bounded_only;
            j["max_order"] = f.max_order;
            j["certificate"] = json::parse(encode_certificate(v.certificate));
            out << j.dump() << '\n';
        }
        else if (format_of(f) == Format::dot)
            out << encode_graph(v.certificate.graph, GraphFormat::dot, &v.certificate.labeling);
        else {
            out << "r = " << v.r;
            if (v.bounded_only)
                out << " (upper bound: smaller r ruled out only up to order " << f.max_order << ")";
            out << "\nlabels " << format_int_list(v.certificate.labeling.labels()) << "\nedges";
            for (auto [a, b] : v.certificate.graph.edges())
                out << ' ' << a << '-' << b;
            out << '\n';
        }
        return ok;
    }
}

int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Skolem-type sequences, distance labelings and delta-set realizations", "dlab"};
    app.require_subcommand(1);
    Flags f;

    auto output = [&](CLI::App * c) {
        c->add_flag("--json", f.as_json, "JSON output");
        c->add_flag("--dot", f.as_dot, "Graphviz output where a graph is produced");
        c->add_option("--out", f.out_file, "Write output to FILE instead of stdout");
    };
    auto family = [&](CLI::App * c, bool required) {
        auto o = c->add_option("--family", f.family,
            "path, cycle, complete, star, complete_bipartite, spider, wheel, fan, caterpillar");
        if (required)
            o->required();
        c->add_option("--n", f.n, "Family size parameter");
        c->add_option("--m", f.m, "First part size of K_{m,n}");
        c->add_option("--k", f.k, "Star leaves or spider arms");
        c->add_option("--spine", f.spine, "Caterpillar leaves per spine vertex, e.g. 2,0,1");
    };
    auto add_budget = [&](CLI::App * c) { c->add_option("--budget", f.budget, "Search node budget"); };
    auto search = [&](CLI::App * c) {
        c->add_option("--set", f.set, "Set sigma, e.g. 1,2,4")->required();
        c->add_option("--max-order", f.max_order, "Largest graph order to enumerate");
        c->add_flag("--allow-order8", f.allow_order8, "Permit --max-order 8");
        c->add_option("--threads", f.threads, "Worker threads (0 = hardware)");
        add_budget(c);
        output(c);
    };

    auto * seq_gen_c = app.add_subcommand("seq-gen", "Generate a Skolem, hooked, extended or Langford sequence");
    seq_gen_c->add_option("--kind", f.kind, "skolem, hooked, extended or langford")->required();
    seq_gen_c->add_option("--order", f.order, "Order m")->required();
    seq_gen_c->add_option("--defect", f.defect, "Defect d (langford)");
    add_budget(seq_gen_c);
    output(seq_gen_c);

    auto * seq_verify_c = app.add_subcommand("seq-verify", "Check a sequence against its definition");
    seq_verify_c->add_option("--seq", f.entries, "Entries, e.g. 3,4,2,3,2,4")->required();
    seq_verify_c->add_option("--kind", f.kind, "skolem, hooked, extended or langford (default)");
    seq_verify_c->add_option("--defect", f.defect, "Defect d (langford)");
    output(seq_verify_c);

    auto * graph_gen_c = app.add_subcommand("graph-gen", "Generate a graph from a named family");
    family(graph_gen_c, true);
    output(graph_gen_c);

    auto * construct_c = app.add_subcommand("label-construct", "Build a labeling of the known optimal length");
    family(construct_c, true);
    add_budget(construct_c);
    output(construct_c);

    auto * verify_c = app.add_subcommand("label-verify", "Verify a labeling of a graph");
    verify_c->add_option("--graph", f.graph_file, "Graph JSON file, - for stdin")->required();
    verify_c->add_option("--labeling", f.labeling_file, "Labeling JSON file, - for stdin")->required();
    verify_c->add_option("--length", f.length, "Require image [0,l] or [1,l]");
    verify_c->add_option("--set", f.set, "Require image equal to this set");
    output(verify_c);

    auto * solve_c = app.add_subcommand("lambda-solve", "Exact labeling length by search");
    family(solve_c, false);
    solve_c->add_option("--graph", f.graph_file, "Graph JSON file, - for stdin");
    solve_c->add_option("--l-max", f.l_max, "Largest length to try (default: order)");
    add_budget(solve_c);
    output(solve_c);

    auto * formula_c = app.add_subcommand("lambda-formula", "Closed-form labeling length of a family");
    family(formula_c, true);
    output(formula_c);

    auto * realize_c = app.add_subcommand("realize", "Run one of the explicit realizations");
    realize_c->add_option("--kind", f.kind, "regular, dense, caterpillar or gap-set")->required();
    realize_c->add_option("--l", f.l, "Length l (regular, dense)");
    realize_c->add_option("--r", f.r, "Degree r (regular)");
    realize_c->add_option("--set", f.set, "Set sigma (caterpillar)");
    realize_c->add_option("--gaps", f.gaps, "Increasing gaps k_1,k_2,.. (gap-set)");
    realize_c->add_option("--d1", f.d1, "Defect of the first block (gap-set)");
    add_budget(realize_c);
    output(realize_c);

    auto * filter_c = app.add_subcommand("delta-filter", "Necessary conditions for a delta-set");
    filter_c->add_option("--set", f.set, "Set sigma")->required();
    output(filter_c);

    auto * search_c = app.add_subcommand("delta-search", "Search small graphs for a proper sigma-labeling");
    search(search_c);
    auto * freedom_c = app.add_subcommand("delta-freedom", "Fewest labels of sigma that must appear once");
    search(freedom_c);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    }

    std::ostringstream text;
    int code = usage;
    try {
        auto * sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "seq-gen")
            code = seq_gen(f, text);
        else if (name == "seq-verify")
            code = seq_verify(f, text);
        else if (name == "graph-gen")
            code = graph_gen(f, text);
        else if (name == "label-construct")
            code = label_construct(f, text);
        else if (name == "label-verify")
            code = label_verify(f, in, text);
        else if (name == "lambda-solve")
            code = lambda_solve(f, in, text);
        else if (name == "lambda-formula")
            code = lambda_formula(f, text);
        else if (name == "realize")
            code = realize(f, text);
        else if (name == "delta-filter")
            code = delta_filter_cmd(f, text);
        else if (name == "delta-search")
            code = delta_search_cmd(f, text);
        else if (name == "delta-freedom")
            code = delta_freedom_cmd(f, text);
    }
    catch (const BudgetExceeded & e) {
        err << "dlab: " << e.what() << '\n';
        return budget;
    }
    catch (const Usage & e) {
        err << "dlab: " << e.what() << '\n';
        return usage;
    }
    catch (const std::invalid_argument & e) {
        err << "dlab: " << e.what() << '\n';
        return usage;
    }
    catch (const std::length_error & e) {
        err << "dlab: " << e.what() << '\n';
        return usage;
    }
    catch (const std::runtime_error & e) {
        // construction fallbacks that ran out of budget
        err << "dlab: " << e.what() << '\n';
        return budget;
    }

    if (f.out_file.empty())
        out << text.str();
    else {
        std::ofstream file(f.out_file);
        if (! (file << text.str())) {
            err << "dlab: cannot write " << f.out_file << '\n';
            return usage;
        }
    }
    return code;
}

}
