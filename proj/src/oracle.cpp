#include <mlcp/errors.hpp>
#include <mlcp/format.hpp>
#include <mlcp/oracle.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <unordered_map>

namespace mlcp {

std::uint64_t oracle_cap_from_env()
{
    if (const char * env = std::getenv("MLCP_ORACLE_CAP")) {
        auto v = parse_integer(env);
        if (v && *v > 0)
            return static_cast<std::uint64_t>(*v);
    }
    return default_oracle_cap;
}

std::vector<Flip> improving_flips(const CPNet & net, const Outcome & o)
{
    std::vector<Flip> out;
    for (VarIndex x : net.topological_order()) {
        const auto & ranking = lookup_ranking(net, x, o);
        for (auto pos = ranking.position(o[x]); pos-- > 0;)
            out.push_back({x, ranking.at_position(pos)});
    }
    return out;
}

OutcomeCodec::OutcomeCodec(const CPNet & net)
{
    for (const auto & v : net.variables()) {
        radix_.push_back(v.domain.size());
        if (__builtin_mul_overflow(count_, radix_.back(), &count_))
            throw ResourceError("outcome space of '" + net.name() + "' does not fit in 64 bits",
                std::numeric_limits<std::uint64_t>::max());
    }
}

std::uint64_t OutcomeCodec::encode(const Outcome & o) const
{
    std::uint64_t id = 0;
    for (std::size_t x = radix_.size(); x-- > 0;)
        id = id * radix_[x] + o[static_cast<VarIndex>(x)];
    return id;
}

Outcome OutcomeCodec::decode(std::uint64_t id) const
{
    std::vector<ValueIndex> values(radix_.size());
    for (std::size_t x = 0; x < radix_.size(); ++x) {
        values[x] = static_cast<ValueIndex>(id % radix_[x]);
        id /= radix_[x];
    }
    return Outcome(std::move(values));
}

std::size_t PreferenceGraph::edge_count() const
{
    std::size_t n = 0;
    for (const auto & s : successors_)
        n += s.size();
    return n;
}

bool PreferenceGraph::has_edge(const Outcome & from, const Outcome & to) const
{
    const auto & s = successors_[index(from)];
    return std::find(s.begin(), s.end(), index(to)) != s.end();
}

std::optional<std::vector<std::uint64_t>> PreferenceGraph::topological_order() const
{
    std::vector<std::uint32_t> in_degree(successors_.size(), 0);
    for (const auto & s : successors_)
        for (auto t : s)
            ++in_degree[t];
    std::vector<std::uint64_t> order, stack;
    for (std::uint64_t id = 0; id < successors_.size(); ++id)
        if (in_degree[id] == 0)
            stack.push_back(id);
    while (! stack.empty()) {
        auto id = stack.back();
        stack.pop_back();
        order.push_back(id);
        for (auto t : successors_[id])
            if (--in_degree[t] == 0)
                stack.push_back(t);
    }
    if (order.size() != successors_.size())
        return std::nullopt;
    return order;
}

PreferenceGraph induced_graph(const CPNet & net, std::uint64_t cap)
{
    net.require_valid();
    OutcomeCodec codec(net);
    if (codec.count() > cap)
        throw ResourceError("outcome space of " + std::to_string(codec.count()) + " exceeds the oracle cap of "
                + std::to_string(cap),
            codec.count());
    PreferenceGraph graph(net, codec);
    graph.successors_.resize(codec.count());
    for (std::uint64_t id = 0; id < codec.count(); ++id) {
        auto o = codec.decode(id);
        for (auto [x, v] : improving_flips(net, o))
            graph.successors_[id].push_back(codec.encode(o.with(x, v)));
    }
    return graph;
}

namespace {

// Breadth-first search over improving flips from `from`. Returns the
// predecessor map of every reached id; stops early once `target` is seen.
std::unordered_map<std::uint64_t, std::uint64_t> bfs(const CPNet & net, const OutcomeCodec & codec,
    const Outcome & from, std::optional<std::uint64_t> target, std::uint64_t cap)
{
    const auto start = codec.encode(from);
    std::unordered_map<std::uint64_t, std::uint64_t> parent{{start, start}};
    std::deque<std::uint64_t> queue{start};
    while (! queue.empty()) {
        auto id = queue.front();
        queue.pop_front();
        auto o = codec.decode(id);
        for (auto [x, v] : improving_flips(net, o)) {
            auto next = codec.encode(o.with(x, v));
            if (! parent.emplace(next, id).second)
                continue;
            if (parent.size() > cap)
                throw ResourceError("oracle search exceeded its cap of " + std::to_string(cap) + " outcomes",
                    parent.size());
            if (target && next == *target)
                return parent;
            queue.push_back(next);
        }
    }
    return parent;
}

} // namespace

std::optional<FlipSequence> oracle_path(const CPNet & net, const Outcome & better, const Outcome & worse,
    std::uint64_t cap)
{
    net.require_valid();
    net.check_outcome(better);
    net.check_outcome(worse);
    if (better == worse)
        return std::nullopt;
    OutcomeCodec codec(net);
    const auto goal = codec.encode(better);
    auto parent = bfs(net, codec, worse, goal, cap);
    if (! parent.contains(goal))
        return std::nullopt;
    FlipSequence path;
    for (auto id = goal;; id = parent.at(id)) {
        path.push_back(codec.decode(id));
        if (parent.at(id) == id)
            break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool oracle_dominates(const CPNet & net, const Outcome & better, const Outcome & worse, std::uint64_t cap)
{
    return oracle_path(net, better, worse, cap).has_value();
}

std::vector<std::uint64_t> oracle_reachable(const CPNet & net, const Outcome & from, std::uint64_t cap)
{
    net.require_valid();
    net.check_outcome(from);
    OutcomeCodec codec(net);
    auto parent = bfs(net, codec, from, std::nullopt, cap);
    std::vector<std::uint64_t> out;
    const auto start = codec.encode(from);
    for (const auto & [id, _] : parent)
        if (id != start)
            out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_improving_flip(const CPNet & net, const Outcome & from, const Outcome & to)
{
    if (from.size() != net.size() || to.size() != net.size())
        return false;
    std::optional<VarIndex> changed;
    for (VarIndex x = 0; x < net.size(); ++x) {
        if (from[x] == to[x])
            continue;
        if (changed)
            return false;
        changed = x;
    }
    if (! changed)
        return false;
    return lookup_ranking(net, *changed, from).prefers(to[*changed], from[*changed]);
}

bool is_improving_sequence(const CPNet & net, std::span<const Outcome> seq)
{
    if (seq.empty())
        return false;
    for (const auto & o : seq)
        net.check_outcome(o);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (! is_improving_flip(net, seq[i], seq[i + 1]))
            return false;
    return true;
}

bool is_irreducible(const CPNet & net, std::span<const Outcome> seq)
{
    if (! is_improving_sequence(net, seq))
        throw PreconditionError("irreducibility is only defined for improving sequences");
    // deleting block i+1..j-1 leaves an improving sequence iff seq[i] -> seq[j]
    // is itself an improving flip
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 2; j < seq.size(); ++j)
            if (is_improving_flip(net, seq[i], seq[j]))
                return false;
    return true;
}

FlipSequence make_irreducible(const CPNet & net, FlipSequence seq)
{
    if (! is_improving_sequence(net, seq))
        throw PreconditionError("only improving sequences can be reduced");
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < seq.size() && ! changed; ++i)
            for (std::size_t j = seq.size(); j-- > i + 2;)
                if (is_improving_flip(net, seq[i], seq[j])) {
                    seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(i) + 1, seq.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                    break;
                }
    }
    return seq;
}

bool ranking_satisfies(const CPNet & net, std::span<const Outcome> ranking, std::uint64_t cap)
{
    auto graph = induced_graph(net, cap);
    if (ranking.size() != graph.size())
        return false;
    std::vector<std::uint64_t> position(graph.size(), graph.size());
    for (std::size_t pos = 0; pos < ranking.size(); ++pos) {
        net.check_outcome(ranking[pos]);
        auto id = graph.index(ranking[pos]);
        if (position[id] != graph.size())
            return false;
        position[id] = pos;
    }
    for (std::uint64_t id = 0; id < graph.size(); ++id)
        for (auto better : graph.successors(id))
            if (position[better] > position[id])
                return false;
    return true;
}

std::string to_dot(const PreferenceGraph & graph)
{
    const auto & net = graph.net();
    std::string out = "digraph \"" + net.name() + "\" {\n";
    for (std::uint64_t id = 0; id < graph.size(); ++id)
        out += "  n" + std::to_string(id) + " [label=\"" + format_outcome(net, graph.outcome(id)) + "\"];\n";
    for (std::uint64_t id = 0; id < graph.size(); ++id)
        for (auto t : graph.successors(id))
            out += "  n" + std::to_string(id) + " -> n" + std::to_string(t) + ";\n";
    return out + "}\n";
}

} // namespace mlcp
