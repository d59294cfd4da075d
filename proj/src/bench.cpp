#include <mlcp/analysis.hpp>
#include <mlcp/bench.hpp>
#include <mlcp/dominance.hpp>
#include <mlcp/errors.hpp>
#include <mlcp/format.hpp>

#include <algorithm>
#include <fstream>

namespace mlcp {

std::uint64_t trial_seed(std::uint64_t base, std::size_t t)
{
    // splitmix64 step over (base, t)
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (t + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

Outcome random_outcome(const CPNet & net, std::mt19937_64 & rng)
{
    std::vector<ValueIndex> values;
    for (VarIndex x = 0; x < net.size(); ++x)
        values.push_back(static_cast<ValueIndex>(draw(rng, 0, net.domain_size(x) - 1)));
    return Outcome(std::move(values));
}

std::string quote(const std::string & field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchSpec & spec)
{
    std::vector<BenchRecord> records;
    for (std::size_t t = 0; t < spec.trials; ++t) {
        GenSpec gen = spec.net;
        gen.seed = trial_seed(spec.net.seed, t);
        const CPNet net = random_ml_net(gen);
        const MlReport report = check_more_or_less(net);
        if (! report.is_more_or_less)
            throw InvariantError("generator produced a net that is not more-or-less");

        std::size_t max_domain = 0;
        for (VarIndex x = 0; x < net.size(); ++x)
            max_domain = std::max(max_domain, net.domain_size(x));
        const auto count = net.outcome_count();
        const bool oracle_ok = count && *count <= spec.oracle_cap;
        const OutcomeCodec codec(net);

        std::mt19937_64 rng(gen.seed ^ 0x5bd1e995ULL);
        for (std::size_t q = 0; q < spec.queries; ++q) {
            Outcome worse = random_outcome(net, rng);
            Outcome better = random_outcome(net, rng);
            if (q % 2 == 0 && oracle_ok) {
                auto reachable = oracle_reachable(net, worse, spec.oracle_cap);
                if (! reachable.empty())
                    better = codec.decode(reachable[draw(rng, 0, reachable.size() - 1)]);
            }

            auto restricted = dominates(net, report, better, worse);
            auto naive = dominates_naive(net, better, worse);

            BenchRecord rec;
            rec.net = net.name() + "-t" + std::to_string(t);
            rec.better = format_outcome(net, better);
            rec.worse = format_outcome(net, worse);
            rec.verdict = restricted.entailed;
            rec.restricted_nodes = restricted.stats.nodes_expanded;
            rec.naive_nodes = naive.stats.nodes_expanded;
            rec.max_domain = max_domain;
            rec.agreement = restricted.entailed == naive.entailed;
            if (oracle_ok) {
                rec.oracle_checked = true;
                rec.agreement = rec.agreement && oracle_dominates(net, better, worse, spec.oracle_cap) == restricted.entailed;
            }

            if (! rec.agreement) {
                auto path = spec.reproducer_dir / ("bench-reproducer-" + rec.net + ".mlcp");
                std::ofstream out(path);
                out << "# restricted=" << restricted.entailed << " naive=" << naive.entailed << "\n"
                    << "# better " << rec.better << "\n# worse " << rec.worse << "\n"
                    << serialize_cpnet(net);
                throw DisagreementError("verdict mismatch on " + rec.net + " (" + rec.better + " over " + rec.worse
                        + "); reproducer written to " + path.string(),
                    path);
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::string bench_csv(const std::vector<BenchRecord> & records)
{
    std::string out = "net,better,worse,verdict,restricted_nodes,naive_nodes\n";
    for (const auto & r : records)
        out += quote(r.net) + "," + quote(r.better) + "," + quote(r.worse) + "," + (r.verdict ? "true" : "false") + ","
            + std::to_string(r.restricted_nodes) + "," + std::to_string(r.naive_nodes) + "\n";
    return out;
}

} // namespace mlcp
