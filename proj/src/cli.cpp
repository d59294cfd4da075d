#include <mlcp/analysis.hpp>
#include <mlcp/bench.hpp>
#include <mlcp/cli.hpp>
#include <mlcp/dominance.hpp>
#include <mlcp/errors.hpp>
#include <mlcp/format.hpp>
#include <mlcp/generator.hpp>
#include <mlcp/oracle.hpp>
#include <mlcp/reasoning.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace mlcp {

namespace {

struct Options
{
    std::string file;
    std::string given;
    std::vector<std::string> outcomes;
    std::string better;
    std::string worse;
    bool naive = false;
    bool oracle = false;
    bool rep_exhaustive = false;
    bool show_sequence = false;
    bool stats = false;
    bool report = false;
    std::uint64_t cap = 0;
    std::string out_path;
    std::size_t vars = 3;
    std::size_t domain = 6;
    std::size_t parents = 2;
    std::uint64_t seed = 1;
    std::size_t trials = 50;
    std::size_t queries = 10;
    std::string csv;
};

const char * verdict(bool b) { return b ? "true" : "false"; }

CPNet load_valid(const Options & opt)
{
    auto net = load_cpnet(opt.file);
    net.require_valid();
    return net;
}

int cmd_validate(const Options & opt, std::ostream & out)
{
    const auto net = load_cpnet(opt.file);
    const auto & structure = net.structure();
    out << "net " << net.name() << ": " << net.size() << " variables\n";
    if (! structure.ok()) {
        for (const auto & p : structure.problems())
            out << "error: " << p << "\n";
        out << "structure: invalid\n";
        return exit_validation;
    }
    out << "structure: ok\n";
    const auto report = check_more_or_less(net);
    out << describe(net, report) << key_values(net, report) << "more-or-less=" << verdict(report.is_more_or_less)
        << "\n";
    return exit_ok;
}

int cmd_optimize(const Options & opt, std::ostream & out)
{
    const auto net = load_valid(opt);
    out << format_outcome(net, optimize(net, parse_partial(net, opt.given))) << "\n";
    return exit_ok;
}

int cmd_order(const Options & opt, std::ostream & out)
{
    const auto net = load_valid(opt);
    std::vector<Outcome> outcomes;
    for (const auto & literal : opt.outcomes)
        outcomes.push_back(parse_outcome(net, literal));
    for (const auto & o : order_outcomes(net, outcomes))
        out << format_outcome(net, o) << "\n";
    return exit_ok;
}

int cmd_dominate(const Options & opt, std::ostream & out, std::ostream & err)
{
    const auto net = load_valid(opt);
    const auto better = parse_outcome(net, opt.better);
    const auto worse = parse_outcome(net, opt.worse);

    DominanceResult result;
    if (opt.naive) {
        result = dominates_naive(net, better, worse);
    } else {
        const auto report = check_more_or_less(net);
        if (opt.report)
            out << key_values(net, report);
        if (! report.is_more_or_less) {
            std::string names;
            for (auto x : report.offending())
                names += (names.empty() ? "" : ", ") + net.variable(x).name;
            throw ValidationError("net is not more-or-less; offending variables: " + names);
        }
        DominanceOptions options;
        options.rep_exhaustive = opt.rep_exhaustive;
        result = dominates(net, report, better, worse, options);
    }

    out << verdict(result.entailed) << "\n";
    if (opt.show_sequence && result.witness)
        for (const auto & o : *result.witness)
            out << format_outcome(net, o) << "\n";
    if (opt.stats)
        out << "nodes=" << result.stats.nodes_expanded << " depth=" << result.stats.max_depth
            << " len=" << result.stats.witness_length << " rep-runs=" << result.stats.representative_runs << "\n";

    if (opt.oracle) {
        const bool expected = oracle_dominates(net, better, worse, opt.cap ? opt.cap : oracle_cap_from_env());
        out << "oracle=" << verdict(expected) << "\n";
        if (expected != result.entailed) {
            err << "mlcp: search and oracle disagree\n";
            return exit_failure;
        }
    }
    return exit_ok;
}

int cmd_oracle(const Options & opt, std::ostream & out)
{
    const auto net = load_valid(opt);
    const auto better = parse_outcome(net, opt.better);
    const auto worse = parse_outcome(net, opt.worse);
    auto path = oracle_path(net, better, worse, opt.cap ? opt.cap : oracle_cap_from_env());
    out << verdict(path.has_value()) << "\n";
    if (opt.show_sequence && path)
        for (const auto & o : *path)
            out << format_outcome(net, o) << "\n";
    return exit_ok;
}

int cmd_graph(const Options & opt, std::ostream & out)
{
    const auto net = load_valid(opt);
    const auto dot = to_dot(induced_graph(net, opt.cap ? opt.cap : oracle_cap_from_env()));
    if (opt.out_path.empty()) {
        out << dot;
        return exit_ok;
    }
    std::ofstream file(opt.out_path);
    if (! (file << dot))
        throw std::runtime_error("cannot write '" + opt.out_path + "'");
    return exit_ok;
}

GenSpec gen_spec(const Options & opt, bool parents_given)
{
    GenSpec spec;
    spec.n_vars = opt.vars;
    spec.max_domain = opt.domain;
    spec.max_parents = parents_given ? opt.parents : std::min<std::size_t>(opt.parents, opt.vars - 1);
    spec.seed = opt.seed;
    return spec;
}

int cmd_gen(const Options & opt, bool parents_given, std::ostream & out)
{
    out << serialize_cpnet(random_ml_net(gen_spec(opt, parents_given)));
    return exit_ok;
}

int cmd_bench(const Options & opt, bool parents_given, std::ostream & out, std::ostream & err)
{
    BenchSpec spec;
    spec.trials = opt.trials;
    spec.queries = opt.queries;
    spec.net = gen_spec(opt, parents_given);
    spec.net.validate();
    if (opt.cap)
        spec.oracle_cap = opt.cap;
    else
        spec.oracle_cap = oracle_cap_from_env();

    std::vector<BenchRecord> records;
    try {
        records = run_bench(spec);
    } catch (const DisagreementError & e) {
        err << "mlcp: " << e.what() << "\n";
        return exit_failure;
    }

    const auto csv = bench_csv(records);
    if (opt.csv.empty()) {
        out << csv;
    } else {
        std::ofstream file(opt.csv);
        if (! (file << csv))
            throw std::runtime_error("cannot write '" + opt.csv + "'");
    }

    std::vector<double> ratios;
    std::uint64_t restricted = 0, naive = 0;
    for (const auto & r : records) {
        restricted += r.restricted_nodes;
        naive += r.naive_nodes;
        ratios.push_back(static_cast<double>(std::max<std::uint64_t>(r.naive_nodes, 1))
            / static_cast<double>(std::max<std::uint64_t>(r.restricted_nodes, 1)));
    }
    if (! ratios.empty()) {
        std::sort(ratios.begin(), ratios.end());
        err << "queries=" << records.size() << " restricted_nodes=" << restricted << " naive_nodes=" << naive
            << " median_ratio=" << ratios[ratios.size() / 2] << " disagreements=0\n";
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Reasoning over more-or-less CP-nets", "mlcp"};
    app.require_subcommand(1);
    Options opt;

    auto * validate = app.add_subcommand("validate", "Structure and more-or-less reports");
    validate->add_option("file", opt.file)->required();

    auto * optimize_cmd = app.add_subcommand("optimize", "Best completion of a partial outcome");
    optimize_cmd->add_option("file", opt.file)->required();
    optimize_cmd->add_option("--given", opt.given, "Partial outcome, e.g. X=2");

    auto * order = app.add_subcommand("order", "Order outcomes consistently with the net");
    order->add_option("file", opt.file)->required();
    order->add_option("outcomes", opt.outcomes)->required();

    auto * dominate = app.add_subcommand("dominate", "Does --better dominate --worse");
    dominate->add_option("file", opt.file)->required();
    dominate->add_option("--better", opt.better)->required();
    dominate->add_option("--worse", opt.worse)->required();
    dominate->add_flag("--naive", opt.naive, "Unrestricted search");
    dominate->add_flag("--oracle", opt.oracle, "Cross-check against the induced graph");
    dominate->add_flag("--rep-exhaustive", opt.rep_exhaustive, "Check every representative choice");
    dominate->add_flag("--show-sequence", opt.show_sequence, "Print the witness");
    dominate->add_flag("--stats", opt.stats, "Print search statistics");
    dominate->add_flag("--report", opt.report, "Print the per-variable key=value report");
    dominate->add_option("--cap", opt.cap, "Oracle cap (with --oracle)");

    auto * oracle = app.add_subcommand("oracle", "Dominance by search of the induced graph");
    oracle->add_option("file", opt.file)->required();
    oracle->add_option("--better", opt.better)->required();
    oracle->add_option("--worse", opt.worse)->required();
    oracle->add_option("--cap", opt.cap, "Maximum outcomes visited");
    oracle->add_flag("--show-sequence", opt.show_sequence, "Print a shortest improving sequence");

    auto * graph = app.add_subcommand("graph", "Induced preference graph as DOT");
    graph->add_option("file", opt.file)->required();
    graph->add_option("--out", opt.out_path);
    graph->add_option("--cap", opt.cap, "Maximum outcomes");

    auto * gen = app.add_subcommand("gen", "Random more-or-less net");
    auto * bench = app.add_subcommand("bench", "Restricted vs naive search on random nets");
    for (auto * sub : {gen, bench}) {
        sub->add_option("--vars", opt.vars)->check(CLI::PositiveNumber);
        sub->add_option("--domain", opt.domain);
        sub->add_option("--parents", opt.parents);
        sub->add_option("--seed", opt.seed);
    }
    bench->add_option("--trials", opt.trials);
    bench->add_option("--queries", opt.queries, "Queries per trial");
    bench->add_option("--csv", opt.csv, "Write CSV here instead of stdout");
    bench->add_option("--cap", opt.cap, "Oracle cap");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_failure;
    }

    try {
        if (validate->parsed())
            return cmd_validate(opt, out);
        if (optimize_cmd->parsed())
            return cmd_optimize(opt, out);
        if (order->parsed())
            return cmd_order(opt, out);
        if (dominate->parsed())
            return cmd_dominate(opt, out, err);
        if (oracle->parsed())
            return cmd_oracle(opt, out);
        if (graph->parsed())
            return cmd_graph(opt, out);
        const bool parents_given = (gen->parsed() ? gen : bench)->count("--parents") > 0;
        if (gen->parsed())
            return cmd_gen(opt, parents_given, out);
        return cmd_bench(opt, parents_given, out, err);
    } catch (const ParseError & e) {
        err << "mlcp: " << e.what() << "\n";
        return exit_parse;
    } catch (const ModelError & e) {
        err << "mlcp: " << e.what() << "\n";
        return exit_parse;
    } catch (const ValidationError & e) {
        err << "mlcp: " << e.what() << "\n";
        return exit_validation;
    } catch (const ResourceError & e) {
        err << "mlcp: " << e.what() << "\n";
        return exit_resource;
    } catch (const PreconditionError & e) {
        err << "mlcp: " << e.what() << "\n";
        return exit_failure;
    } catch (const std::runtime_error & e) {
        err << "mlcp: " << e.what() << "\n";
        return exit_failure;
    }
}

} // namespace mlcp
