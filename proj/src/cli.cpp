#include "vmodel/cli.hpp"

#include "vmodel/certify.hpp"
#include "vmodel/connection.hpp"
#include "vmodel/error.hpp"
#include "vmodel/io.hpp"
#include "vmodel/isomorphism.hpp"
#include "vmodel/random.hpp"
#include "vmodel/suite.hpp"
#include "vmodel/symbolic.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <set>

namespace vmodel::cli {

namespace {

struct Globals {
    std::uint64_t seed = 7;
    std::optional<std::size_t> cap_edges;
    std::optional<int> cap_width;
    std::optional<int> cap_usize;
    std::string format = "text";

    bool json() const { return format == "json"; }

    PartitionLimits partition(PartitionLimits base = {}) const
    {
        if (cap_edges)
            base.max_brute_edges = *cap_edges;
        if (cap_width)
            base.max_width = *cap_width;
        return base;
    }
    AltSumLimits alt() const
    {
        AltSumLimits a;
        if (cap_usize)
            a.max_pins = *cap_usize;
        return a;
    }
};

// A graph parameter from "model:F", "table:F" or "counterexample". Exactly
// one of the two handles is set.
struct LoadedOracle {
    std::optional<ParamOracle> undirected;
    std::optional<DirectedParamOracle> directed;
    std::optional<VertexModel> model; // undirected model oracles only
    std::optional<std::map<Multigraph, Scalar>> table;
    std::optional<std::map<DirectedMultigraph, Scalar>> directed_table;
    bool counterexample = false;

    bool is_directed() const { return directed.has_value(); }
};

LoadedOracle load_oracle(const std::string& spec, const Globals& g)
{
    LoadedOracle o;
    if (spec == "counterexample") {
        o.undirected = counterexample_oracle();
        o.counterexample = true;
        return o;
    }
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("oracle must be model:FILE, table:FILE or counterexample, got '" + spec + "'");
    std::string kind = spec.substr(0, colon);
    std::string path = spec.substr(colon + 1);
    if (kind == "model") {
        auto doc = parse_model(read_json_file(path));
        if (doc.directed) {
            o.directed = directed_model_oracle(doc.directed_model, PartitionMethod::contract, g.partition());
        } else {
            o.undirected = model_oracle(doc.model, PartitionMethod::contract, g.partition());
            o.model = doc.model;
        }
    } else if (kind == "table") {
        auto doc = parse_table(read_json_file(path));
        if (doc.directed) {
            o.directed = table_oracle<true>(doc.directed_table, path);
            o.directed_table = doc.directed_table;
        } else {
            o.undirected = table_oracle<false>(doc.table, path);
            o.table = doc.table;
        }
    } else {
        throw ParseError("unknown oracle kind '" + kind + "'");
    }
    return o;
}

std::string oracle_spec(const std::string& oracle, const std::string& model)
{
    if (!oracle.empty() && !model.empty())
        throw ParseError("give either --oracle or --model, not both");
    if (!model.empty())
        return "model:" + model;
    if (oracle.empty())
        throw ParseError("an oracle is required (--oracle or --model)");
    return oracle;
}

void print_scalar(std::ostream& out, const Globals& g, const Scalar& value)
{
    if (g.json())
        out << Json{{"value", value.to_string()}}.dump() << "\n";
    else
        out << value.to_string() << "\n";
}

// ---------------------------------------------------------------- partition

struct PartitionArgs {
    std::string graph;
    std::string model;
    std::string method = "contract";
    std::string order = "greedy";
};

int cmd_partition(const PartitionArgs& a, const Globals& g, std::ostream& out)
{
    auto gd = parse_graph(read_json_file(a.graph));
    auto md = parse_model(read_json_file(a.model));
    if (gd.directed != md.directed)
        throw PreconditionError(gd.directed ? "directed graph needs a directed model"
                                            : "directed model needs a directed graph");
    EliminationOrder order;
    if (a.order.starts_with("given:"))
        order = parse_int_list(a.order.substr(6));
    else if (a.order != "greedy")
        throw ParseError("--order must be greedy or given:<list>");
    if (order && a.method == "brute")
        throw PreconditionError("an elimination order applies to --method contract only");
    const auto limits = g.partition();
    Scalar value;
    if (gd.directed)
        value = a.method == "brute" ? directed_partition_brute(gd.digraph, md.directed_model, limits)
                                    : directed_partition_contract(gd.digraph, md.directed_model, order, limits);
    else
        value = a.method == "brute" ? partition_brute(gd.graph, md.model, limits)
                                    : partition_contract(gd.graph, md.model, order, limits);
    print_scalar(out, g, value);
    return kOk;
}

// ------------------------------------------------------------------ certify

struct CertifyArgs {
    std::string theorem;
    std::string graph;
    std::string model;
    std::string oracle;
    std::string u;
    std::string s;
    int usize = 2;
    int max_n = 4;
    int max_e = 4;
    std::string mode = "pins";
    int count = 50;
};

template <bool D>
int report_sum(std::ostream& out, const Globals& g, const BasicMultigraph<D>& graph, const PinMap& pins,
               const Scalar& value)
{
    if (value.is_zero()) {
        if (g.json())
            out << Json{{"value", value.to_string()}, {"holds", true}}.dump() << "\n";
        else
            out << value.to_string() << " (identity holds)\n";
        return kOk;
    }
    out << witness_json(BasicWitness<D>{graph, pins, value}).dump() << "\n";
    return kViolation;
}

template <bool D>
int certify_instance(const BasicParamOracle<D>& f, const BasicMultigraph<D>& graph, const PinMap& pins, bool contract,
                     const Globals& g, std::ostream& out)
{
    Scalar value = contract ? alt_sum_contract(f, graph, pins, TargetPolicy::require_disjoint, g.alt())
                            : alt_sum_pins(f, graph, pins, g.alt());
    return report_sum(out, g, graph, pins, value);
}

template <bool D>
int search(const BasicParamOracle<D>& f, const CertifyArgs& a, const Globals& g, std::ostream& out)
{
    if (a.mode != "pins" && a.mode != "contract")
        throw ParseError("--mode must be pins or contract");
    SearchStats stats;
    auto w = search_violation(f, a.usize, SearchBounds{a.max_n, a.max_e},
                              a.mode == "pins" ? SumMode::pins : SumMode::contract, g.alt(), &stats);
    if (w) {
        out << witness_json(*w).dump() << "\n";
        return kViolation;
    }
    if (g.json())
        out << Json{{"witness", nullptr}, {"graphs", stats.graphs}, {"instances", stats.instances}}.dump() << "\n";
    else
        out << "no witness (" << stats.graphs << " graphs, " << stats.instances << " instances)\n";
    return kOk;
}

template <bool D>
std::vector<std::pair<BasicMultigraph<D>, BasicMultigraph<D>>>
table_pairs(const std::map<BasicMultigraph<D>, Scalar>& table)
{
    // Every pair whose union the table also lists.
    std::set<BasicMultigraph<D>> listed;
    for (const auto& entry : table)
        listed.insert(canonical_form(entry.first));
    std::vector<std::pair<BasicMultigraph<D>, BasicMultigraph<D>>> pairs;
    for (const auto& [a, fa] : table)
        for (const auto& [b, fb] : table)
            if (listed.count(canonical_form(disjoint_union(a, b))))
                pairs.emplace_back(a, b);
    return pairs;
}

int multiplicative(const LoadedOracle& o, const CertifyArgs& a, const Globals& g, std::ostream& out)
{
    Rng rng(g.seed);
    GraphShape shape{0, 4, 5, true};
    bool ok = false;
    std::size_t pairs = 0;
    if (o.is_directed()) {
        std::vector<std::pair<DirectedMultigraph, DirectedMultigraph>> list;
        if (o.directed_table) {
            list = table_pairs<true>(*o.directed_table);
        } else {
            for (int i = 0; i < a.count; ++i) {
                auto x = random_digraph(rng, shape);
                list.emplace_back(x, random_digraph(rng, shape));
            }
        }
        pairs = list.size();
        ok = check_multiplicative(*o.directed, list);
    } else {
        std::vector<std::pair<Multigraph, Multigraph>> list;
        if (o.table) {
            list = table_pairs<false>(*o.table);
        } else {
            for (int i = 0; i < a.count; ++i) {
                // Unions of cycles keep the counterexample away from zero.
                auto x = o.counterexample && i % 2 ? graphs::cycle(static_cast<int>(rng.uniform(1, 4)))
                                                   : random_graph(rng, shape);
                auto y = o.counterexample && i % 3 ? graphs::cycle(static_cast<int>(rng.uniform(1, 4)))
                                                   : random_graph(rng, shape);
                list.emplace_back(x, y);
            }
        }
        pairs = list.size();
        ok = check_multiplicative(*o.undirected, list);
    }
    if (g.json())
        out << Json{{"multiplicative", ok}, {"pairs", pairs}}.dump() << "\n";
    else
        out << (ok ? "multiplicative" : "not multiplicative") << " (" << pairs << " pairs)\n";
    return ok ? kOk : kViolation;
}

int cmd_certify(const CertifyArgs& a, const Globals& g, std::ostream& out)
{
    auto o = load_oracle(oracle_spec(a.oracle, a.model), g);
    if (a.theorem == "search")
        return o.is_directed() ? search(*o.directed, a, g, out) : search(*o.undirected, a, g, out);
    if (a.theorem == "multiplicative")
        return multiplicative(o, a, g, out);

    const bool directed_theorem = a.theorem == "thm3" || a.theorem == "thm4";
    const bool contract = a.theorem == "thm2" || a.theorem == "thm4";
    if (a.graph.empty())
        throw ParseError("--graph is required for " + a.theorem);
    auto gd = parse_graph(read_json_file(a.graph));
    if (gd.directed != directed_theorem)
        throw PreconditionError(a.theorem + (directed_theorem ? " needs a directed graph" : " needs an undirected graph"));
    if (o.is_directed() != directed_theorem)
        throw PreconditionError(a.theorem + (directed_theorem ? " needs a directed oracle" : " needs an undirected oracle"));
    PinMap pins(parse_int_list(a.u), parse_int_list(a.s));
    if (directed_theorem)
        return certify_instance(*o.directed, gd.digraph, pins, contract, g, out);
    return certify_instance(*o.undirected, gd.graph, pins, contract, g, out);
}

// ----------------------------------------------------------------- symbolic

struct SymbolicArgs {
    std::string graph;
    int k = 1;
    std::string monomial;
    int n = 0;
};

int cmd_symbolic_p(const SymbolicArgs& a, const Globals& g, std::ostream& out)
{
    auto gd = parse_graph(read_json_file(a.graph));
    if (gd.directed)
        throw PreconditionError("symbolic p takes an undirected graph");
    auto p = p_poly(gd.graph, a.k, g.partition());
    if (g.json())
        out << Json{{"k", a.k}, {"polynomial", to_string(p)}}.dump() << "\n";
    else
        out << to_string(p) << "\n";
    return kOk;
}

int cmd_symbolic_diagram(const SymbolicArgs& a, const Globals& g, std::ostream& out)
{
    auto q = parse_xmonomial(a.monomial);
    auto sides = diagram_sides(q, a.k, a.n);
    const bool ok = sides.commutes();
    if (g.json()) {
        out << Json{{"monomial", to_string(q)},
                    {"p_mu", to_string(sides.via_graph)},
                    {"sigma_tau", to_string(sides.via_z)},
                    {"commutes", ok}}
                   .dump()
            << "\n";
    } else {
        out << "p(mu(q))     = " << to_string(sides.via_graph) << "\n";
        out << "sigma(tau(q)) = " << to_string(sides.via_z) << "\n";
        out << (ok ? "commutes" : "does not commute") << "\n";
    }
    return ok ? kOk : kViolation;
}

// --------------------------------------------------------------- connection

struct ConnectionArgs {
    std::string oracle;
    int l = 1;
    int max_extra = 2;
    int max_edges = 3;
    std::optional<int> r;
};

int cmd_connection_rank(const ConnectionArgs& a, const Globals& g, std::ostream& out)
{
    auto o = load_oracle(a.oracle, g);
    if (o.is_directed())
        throw PreconditionError("connection slices are defined for undirected oracles");
    auto family = enumerate_labeled(a.l, a.max_extra, a.max_edges);
    std::size_t rank = exact_rank(connection_slice(memoized(*o.undirected), family));
    // A rank-r model bounds the rank by r^l; the counterexample by 4^l.
    std::optional<std::size_t> bound;
    auto power = [&](std::size_t base) {
        std::size_t b = 1;
        for (int i = 0; i < a.l; ++i)
            b *= base;
        return b;
    };
    if (a.r)
        bound = power(static_cast<std::size_t>(*a.r));
    else if (o.counterexample)
        bound = power(4);
    const bool ok = !bound || rank <= *bound;
    if (g.json()) {
        Json j{{"family", family.members.size()}, {"rank", rank}};
        j["bound"] = bound ? Json(*bound) : Json(nullptr);
        j["status"] = ok ? "ok" : "violation";
        out << j.dump() << "\n";
    } else {
        out << "family: " << family.members.size() << "\n";
        out << "rank: " << rank << "\n";
        out << "bound: " << (bound ? std::to_string(*bound) : std::string("unknown")) << "\n";
        out << (ok ? "ok" : "violation") << "\n";
    }
    return ok ? kOk : kViolation;
}

// -------------------------------------------------------------- moment-rank

struct MomentArgs {
    std::string model;
    int degree = 2;
};

int cmd_moment_rank(const MomentArgs& a, const Globals& g, std::ostream& out)
{
    auto md = parse_model(read_json_file(a.model));
    const VertexModel& y = md.directed ? md.directed_model.joint() : md.model;
    if (!y.determines_degree(2 * a.degree))
        throw PreconditionError("the model's degree cap does not cover the slice of degree " + std::to_string(a.degree));
    auto slice = moment_slice(y, a.degree);
    std::size_t rank = exact_rank(slice.matrix);
    if (g.json())
        out << Json{{"degree", a.degree}, {"size", slice.indices.size()}, {"rank", rank}}.dump() << "\n";
    else
        out << "rank " << rank << " (slice " << slice.indices.size() << "x" << slice.indices.size() << ")\n";
    return kOk;
}

// -------------------------------------------------------------------- suite

struct SuiteArgs {
    std::string scale = "smoke";
    std::vector<std::string> only;
    bool inject_fault = false;
};

int cmd_suite(const SuiteArgs& a, const Globals& g, const std::string& command, std::ostream& out)
{
    auto scale = parse_scale(a.scale);
    if (!scale)
        throw ParseError("unknown scale '" + a.scale + "' (expected smoke or desk)");
    checks::Config config;
    config.partition = g.partition(config.partition);
    config.alt = g.alt();
    config.inject_fault = a.inject_fault;
    auto report = run_suite(*scale, g.seed, config, command, a.only);
    out << (g.json() ? report.json() : report.text());
    return report.passed() ? kOk : kViolation;
}

std::string join(const std::vector<std::string>& args)
{
    std::string s;
    for (const auto& a : args)
        s += (s.empty() ? "" : " ") + a;
    return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact partition functions of vertex models on multigraphs", "vmodel"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Seed for random instances");
    app.add_option("--cap-edges", g.cap_edges, "Largest |E| for brute-force enumeration (default 16)");
    app.add_option("--cap-width", g.cap_width, "Largest open edge-ends of a contraction tensor (default 8; suite 12)");
    app.add_option("--cap-usize", g.cap_usize, "Largest |U| in alternating sums (default 6)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    PartitionArgs pa;
    auto* part = app.add_subcommand("partition", "Evaluate f_y(G) exactly");
    part->add_option("--graph", pa.graph, "Graph JSON file")->required();
    part->add_option("--model", pa.model, "Model JSON file")->required();
    part->add_option("--method", pa.method)->check(CLI::IsMember({"brute", "contract"}));
    part->add_option("--order", pa.order, "greedy or given:<edge list>");

    CertifyArgs ca;
    auto* cert = app.add_subcommand("certify", "Evaluate alternating sums and search for violations");
    cert->add_option("theorem", ca.theorem, "thm1 | thm2 | thm3 | thm4 | search | multiplicative")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "thm3", "thm4", "search", "multiplicative"}));
    cert->add_option("--graph", ca.graph, "Graph JSON file");
    cert->add_option("--model", ca.model, "Model JSON file (same as --oracle model:F)");
    cert->add_option("--oracle", ca.oracle, "model:F | table:F | counterexample");
    cert->add_option("--u", ca.u, "Pinned vertices, e.g. \"0,1,2\"");
    cert->add_option("--s", ca.s, "Targets s(u), same order as --u");
    cert->add_option("--usize", ca.usize, "|U| for search")->check(CLI::NonNegativeNumber);
    cert->add_option("--max-n", ca.max_n, "Largest vertex count for search")->check(CLI::NonNegativeNumber);
    cert->add_option("--max-e", ca.max_e, "Largest edge count for search")->check(CLI::NonNegativeNumber);
    cert->add_option("--mode", ca.mode, "pins | contract (search)");
    cert->add_option("--count", ca.count, "Random pairs for multiplicative")->check(CLI::NonNegativeNumber);

    SymbolicArgs sa;
    auto* sym = app.add_subcommand("symbolic", "Polynomial invariants");
    sym->require_subcommand(1);
    auto* sym_p = sym->add_subcommand("p", "Print p(G) in the y variables");
    sym_p->add_option("--graph", sa.graph)->required();
    sym_p->add_option("--k", sa.k)->required()->check(CLI::NonNegativeNumber);
    auto* sym_d = sym->add_subcommand("diagram", "Check p(mu(q)) = sigma(tau(q)) for a monomial");
    sym_d->add_option("--monomial", sa.monomial, "e.g. \"x[1,2]^2\" (1-based)")->required();
    sym_d->add_option("--k", sa.k)->required()->check(CLI::NonNegativeNumber);
    sym_d->add_option("--n", sa.n)->required()->check(CLI::NonNegativeNumber);

    ConnectionArgs na;
    auto* conn = app.add_subcommand("connection", "Connection matrix slices");
    conn->require_subcommand(1);
    auto* conn_rank = conn->add_subcommand("rank", "Exact rank of a slice");
    conn_rank->add_option("--oracle", na.oracle, "model:F | table:F | counterexample")->required();
    conn_rank->add_option("--l", na.l, "Number of labels")->check(CLI::NonNegativeNumber);
    conn_rank->add_option("--max-extra", na.max_extra)->check(CLI::NonNegativeNumber);
    conn_rank->add_option("--max-edges", na.max_edges)->check(CLI::NonNegativeNumber);
    conn_rank->add_option("--r", na.r, "Known model rank; the bound is r^l")->check(CLI::PositiveNumber);

    MomentArgs ma;
    auto* mom = app.add_subcommand("moment-rank", "Exact rank of a moment matrix slice");
    mom->add_option("--model", ma.model)->required();
    mom->add_option("--degree", ma.degree, "Slice over |alpha| <= degree")->check(CLI::NonNegativeNumber);

    SuiteArgs su;
    auto* suite = app.add_subcommand("suite", "Run the property battery");
    suite->add_option("--scale", su.scale, "smoke | desk");
    suite->add_option("--only", su.only, "Run checks whose name starts with a prefix");
    suite->add_flag("--inject-fault", su.inject_fault, "Compare against a perturbed model so checks must fail");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }

    try {
        if (*part)
            return cmd_partition(pa, g, out);
        if (*cert)
            return cmd_certify(ca, g, out);
        if (*sym_p)
            return cmd_symbolic_p(sa, g, out);
        if (*sym_d)
            return cmd_symbolic_diagram(sa, g, out);
        if (*conn_rank)
            return cmd_connection_rank(na, g, out);
        if (*mom)
            return cmd_moment_rank(ma, g, out);
        if (*suite)
            return cmd_suite(su, g, join(args), out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

} // namespace vmodel::cli
