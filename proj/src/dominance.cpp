#include <mlcp/dominance.hpp>
#include <mlcp/errors.hpp>
#include <mlcp/format.hpp>

#include <algorithm>
#include <unordered_set>

namespace mlcp {

namespace {

Category other(Category c)
{
    return c == Category::less ? Category::more : Category::less;
}

void require_more_or_less(const CPNet & net, const MlReport & report)
{
    if (report.is_more_or_less)
        return;
    auto bad = report.offending();
    const auto & r = report[bad.front()];
    throw ValidationError("net '" + net.name() + "' is not a more-or-less CP-net: variable '"
        + net.variable(r.variable).name + "' is not monotonic (" + to_string(*r.failure) + ")");
}

RepresentativeSet make_set(const MonotonicityReport & r, ValueIndex a, ValueIndex b)
{
    return category(r, a) == Category::less ? RepresentativeSet{a, b} : RepresentativeSet{b, a};
}

std::optional<Outcome> flip_to(const CPNet & net, const Outcome & o, VarIndex x, ValueIndex target)
{
    if (target == o[x] || ! lookup_ranking(net, x, o).prefers(target, o[x]))
        return std::nullopt;
    return o.with(x, target);
}

} // namespace

std::vector<RepresentativeSet> representative_candidates(const CPNet & net, const MlReport & report, VarIndex x,
    const Outcome & worse, const Outcome & better)
{
    require_more_or_less(net, report);
    const auto & r = report[x];
    auto cw = category(r, worse[x]);
    auto cb = category(r, better[x]);
    if (cw != cb)
        return {make_set(r, worse[x], better[x])};

    std::vector<RepresentativeSet> out;
    const auto & free = cb == Category::less ? r.more : r.less;
    for (const auto & iv : free.intervals())
        for (std::uint64_t v = iv.lo; v <= iv.hi; ++v)
            out.push_back(make_set(r, static_cast<ValueIndex>(v), better[x]));
    return out;
}

RepresentativeSet default_representative(const CPNet & net, const MlReport & report, VarIndex x,
    const Outcome & worse, const Outcome & better)
{
    require_more_or_less(net, report);
    const auto & r = report[x];
    auto cw = category(r, worse[x]);
    auto cb = category(r, better[x]);
    if (cw != cb)
        return make_set(r, worse[x], better[x]);
    const ValueIndex c = *r.break_point;
    if (cb == Category::more)
        return {c, better[x]};
    return {better[x], c + 1};
}

RepMap default_representatives(const CPNet & net, const MlReport & report, const Outcome & worse,
    const Outcome & better)
{
    RepMap reps;
    for (VarIndex x = 0; x < net.size(); ++x)
        reps.push_back(default_representative(net, report, x, worse, better));
    return reps;
}

bool admissible(const MlReport & report, const RepMap & reps, const Outcome & worse, const Outcome & better)
{
    if (reps.size() != report.variables.size())
        return false;
    for (VarIndex x = 0; x < reps.size(); ++x) {
        const auto & r = report[x];
        if (! r.less.contains(reps[x].less_value) || ! r.more.contains(reps[x].more_value))
            return false;
        if (! reps[x].contains(better[x]))
            return false;
        bool worse_required = category(r, worse[x]) != category(r, better[x]) || worse[x] == better[x];
        if (worse_required != reps[x].contains(worse[x]))
            return false;
    }
    return true;
}

std::optional<Outcome> flip_in_category(const CPNet & net, const MlReport & report, const Outcome & o, VarIndex x,
    const RepresentativeSet & rep)
{
    return flip_to(net, o, x, rep.in(category(report[x], o[x])));
}

std::optional<Outcome> flip_out_category(const CPNet & net, const MlReport & report, const Outcome & o, VarIndex x,
    const RepresentativeSet & rep)
{
    return flip_to(net, o, x, rep.in(other(category(report[x], o[x]))));
}

namespace {

std::optional<VarIndex> changed_variable(const Outcome & a, const Outcome & b)
{
    for (VarIndex x = 0; x < a.size(); ++x)
        if (a[x] != b[x])
            return x;
    return std::nullopt;
}

void check_sequence(const CPNet & net, const MlReport & report, std::span<const Outcome> seq, const RepMap & reps)
{
    require_more_or_less(net, report);
    if (! is_improving_sequence(net, seq))
        throw SequenceError(SequenceError::Kind::not_improving, "sequence is not an improving flipping sequence");
    if (! is_irreducible(net, seq))
        throw SequenceError(SequenceError::Kind::not_irreducible, "sequence is not irreducible");
    if (! admissible(report, reps, seq.front(), seq.back()))
        throw SequenceError(SequenceError::Kind::bad_representatives,
            "representative sets do not fit the sequence endpoints");
}

bool flips_land_on_representatives(std::span<const Outcome> seq, const RepMap & reps)
{
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        auto x = changed_variable(seq[i], seq[i + 1]);
        if (x && ! reps[*x].contains(seq[i + 1][*x]))
            return false;
    }
    return true;
}

} // namespace

bool is_skip_flipping(const CPNet & net, const MlReport & report, std::span<const Outcome> seq, const RepMap & reps)
{
    check_sequence(net, report, seq, reps);
    return flips_land_on_representatives(seq, reps);
}

FlipSequence reduce_to_skip(const CPNet & net, const MlReport & report, std::span<const Outcome> seq,
    const RepMap & reps)
{
    check_sequence(net, report, seq, reps);
    const auto & first = seq.front();
    const auto & last = seq.back();

    std::vector<std::vector<ValueIndex>> columns(seq.size(), std::vector<ValueIndex>(net.size()));
    for (VarIndex x = 0; x < net.size(); ++x) {
        const auto & r = report[x];
        const ValueIndex start = first[x], goal = last[x];
        const auto home = category(r, goal);
        const bool crossing = category(r, start) != home;
        bool moved_on = false;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const ValueIndex v = seq[i][x];
            const auto cv = category(r, v);
            ValueIndex mapped;
            if (crossing || start == goal || cv != home)
                mapped = reps[x].in(cv);
            else {
                moved_on = moved_on || (goal > start ? v > start : v < start);
                mapped = moved_on ? goal : start;
            }
            // leaving the home category also ends the hold at `start`
            if (! crossing && start != goal && cv != home)
                moved_on = true;
            columns[i][x] = mapped;
        }
    }

    FlipSequence out;
    for (auto & col : columns) {
        Outcome o(std::move(col));
        if (out.empty() || out.back() != o)
            out.push_back(std::move(o));
    }
    if (! is_improving_sequence(net, out))
        throw InvariantError("category mapping produced a non-improving sequence");
    out = make_irreducible(net, std::move(out));
    if (out.front() != first || out.back() != last || ! is_skip_flipping(net, report, out, reps))
        throw InvariantError("reduction did not yield a skip-flipping sequence");
    return out;
}

FlipSequence reduce_to_skip(const CPNet & net, const MlReport & report, std::span<const Outcome> seq)
{
    if (seq.empty())
        throw SequenceError(SequenceError::Kind::not_improving, "empty sequence");
    return reduce_to_skip(net, report, seq, default_representatives(net, report, seq.front(), seq.back()));
}

namespace {

class RestrictedSearch
{
public:
    RestrictedSearch(const CPNet & net, const MlReport & report, const Outcome & better, const Outcome & worse,
        const RepMap & reps, const DominanceOptions & options) :
        net_(net),
        report_(report),
        better_(better),
        worse_(worse),
        reps_(reps),
        options_(options),
        least_variable_(options.least_variable_flipping && net.is_tree_structured())
    {
    }

    DominanceResult run()
    {
        DominanceResult result;
        if (better_ == worse_)
            return result;

        std::vector<Frame> stack;
        if (enter(worse_, stack, result))
            return finish(stack, result);
        while (! stack.empty()) {
            auto & top = stack.back();
            if (top.next == top.moves.size()) {
                stack.pop_back();
                continue;
            }
            Outcome move = top.moves[top.next++];
            if (enter(std::move(move), stack, result))
                return finish(stack, result);
        }
        return result;
    }

private:
    struct Frame
    {
        std::vector<Outcome> segment; // outcomes this step adds to the path
        std::vector<Outcome> moves;
        std::size_t next = 0;
    };

    // Normalizes `o`, and if the result is new, expands it onto the stack.
    // True when the goal is reached.
    bool enter(Outcome o, std::vector<Frame> & stack, DominanceResult & result)
    {
        Frame frame;
        frame.segment.push_back(o);
        normalize(frame.segment);
        const Outcome & state = frame.segment.back();
        if (! visited_.insert(key(state)).second)
            return false;
        if (++result.stats.nodes_expanded > options_.max_expansions)
            throw ResourceError("dominance search exceeded " + std::to_string(options_.max_expansions)
                    + " expansions",
                result.stats.nodes_expanded);
        bool goal = state == better_;
        if (! goal)
            frame.moves = moves(state);
        stack.push_back(std::move(frame));
        result.stats.max_depth = std::max<std::uint64_t>(result.stats.max_depth, stack.size());
        return goal;
    }

    // In-category pass: any variable still at worse(x) outside its
    // representative set moves to better(x) when that improves. Such a
    // variable can never come back to worse(x), so each is flipped at most
    // once along a path.
    void normalize(std::vector<Outcome> & segment) const
    {
        for (VarIndex x : net_.topological_order()) {
            const Outcome & o = segment.back();
            if (reps_[x].contains(o[x]))
                continue;
            if (o[x] != worse_[x])
                throw InvariantError("in-category flip attempted twice on one variable");
            if (auto p = flip_in_category(net_, report_, o, x, reps_[x]))
                segment.push_back(std::move(*p));
        }
    }

    std::string key(const Outcome & o) const
    {
        std::string k(o.size(), '\0');
        for (VarIndex x = 0; x < o.size(); ++x)
            k[x] = o[x] == reps_[x].less_value ? '\1' : o[x] == reps_[x].more_value ? '\2' : '\0';
        return k;
    }

    // Variables that already agree with `better` and whose descendants all
    // do too. No path ever needs to flip them.
    std::vector<bool> fixed_suffix(const Outcome & o) const
    {
        std::vector<bool> fixed(net_.size(), false);
        const auto & order = net_.topological_order();
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            VarIndex x = *it;
            const auto & ch = net_.children(x);
            fixed[x] = o[x] == better_[x] && std::all_of(ch.begin(), ch.end(), [&](VarIndex c) { return fixed[c]; });
        }
        return fixed;
    }

    // Per variable, the values it can still take on some path to `better`:
    // reachable from o(x) and able to reach better(x), using any ranking a
    // row compatible with the parents' live values could select. Empty
    // result means the state is dead.
    std::optional<std::vector<std::vector<ValueIndex>>> live_values(const Outcome & o) const
    {
        std::vector<std::vector<ValueIndex>> live(net_.size());
        for (VarIndex x : net_.topological_order()) {
            const auto & parents = net_.parents(x);
            std::vector<const Ranking *> rankings;
            for (const auto & row : net_.cpt(x).rows) {
                bool possible = true;
                for (std::size_t k = 0; k < parents.size() && possible; ++k)
                    possible = std::any_of(live[parents[k]].begin(), live[parents[k]].end(),
                        [&](ValueIndex v) { return row.condition[k].values.contains(v); });
                if (possible)
                    rankings.push_back(&row.ranking);
            }

            std::vector<ValueIndex> values{o[x]};
            for (auto v : {reps_[x].less_value, reps_[x].more_value})
                if (v != o[x])
                    values.push_back(v);
            auto step = [&](ValueIndex from, ValueIndex to) {
                return from != to && reps_[x].contains(to)
                    && std::any_of(rankings.begin(), rankings.end(), [&](const Ranking * r) { return r->prefers(to, from); });
            };

            std::vector<ValueIndex> reach{o[x]};
            for (std::size_t i = 0; i < reach.size(); ++i)
                for (auto v : values)
                    if (std::find(reach.begin(), reach.end(), v) == reach.end() && step(reach[i], v))
                        reach.push_back(v);
            if (std::find(reach.begin(), reach.end(), better_[x]) == reach.end())
                return std::nullopt;

            std::vector<ValueIndex> coreach{better_[x]};
            for (std::size_t i = 0; i < coreach.size(); ++i)
                for (auto v : reach)
                    if (std::find(coreach.begin(), coreach.end(), v) == coreach.end() && step(v, coreach[i]))
                        coreach.push_back(v);
            if (std::find(coreach.begin(), coreach.end(), o[x]) == coreach.end())
                return std::nullopt;
            live[x] = std::move(coreach);
        }
        return live;
    }

    std::vector<Outcome> moves(const Outcome & o) const
    {
        std::optional<std::vector<std::vector<ValueIndex>>> live;
        if (options_.forward_pruning) {
            live = live_values(o);
            if (! live)
                return {};
        }
        const bool need_fixed = options_.suffix_fixing || least_variable_;
        std::vector<bool> fixed = need_fixed ? fixed_suffix(o) : std::vector<bool>(net_.size(), false);

        std::vector<Outcome> out;
        std::optional<std::size_t> least;
        for (VarIndex x : net_.topological_order()) {
            if (options_.suffix_fixing && fixed[x])
                continue;
            auto p = flip_out_category(net_, report_, o, x, reps_[x]);
            if (! p)
                continue;
            if (live) {
                const auto & lx = (*live)[x];
                if (std::find(lx.begin(), lx.end(), (*p)[x]) == lx.end())
                    continue;
            }
            // a flip onto better(x) whose children are all settled affects
            // nothing else; committing to it loses no path
            if (least_variable_ && (*p)[x] == better_[x]) {
                const auto & ch = net_.children(x);
                if (std::all_of(ch.begin(), ch.end(), [&](VarIndex c) { return fixed[c]; }))
                    least = out.size();
            }
            out.push_back(std::move(*p));
        }
        if (least)
            return {out[*least]};
        return out;
    }

    DominanceResult finish(const std::vector<Frame> & stack, DominanceResult & result) const
    {
        FlipSequence witness;
        for (const auto & frame : stack)
            witness.insert(witness.end(), frame.segment.begin(), frame.segment.end());
        if (witness.front() != worse_ || witness.back() != better_ || ! is_improving_sequence(net_, witness)
            || ! flips_land_on_representatives(witness, reps_))
            throw InvariantError("dominance search produced an invalid witness");
        result.entailed = true;
        result.stats.witness_length = witness.size();
        result.witness = std::move(witness);
        return result;
    }

    const CPNet & net_;
    const MlReport & report_;
    const Outcome & better_;
    const Outcome & worse_;
    const RepMap & reps_;
    const DominanceOptions & options_;
    const bool least_variable_;
    std::unordered_set<std::string> visited_;
};

} // namespace

DominanceResult dominates(const CPNet & net, const MlReport & report, const Outcome & better, const Outcome & worse,
    const DominanceOptions & options)
{
    net.require_valid();
    require_more_or_less(net, report);
    net.check_outcome(better);
    net.check_outcome(worse);

    RepMap reps = options.representatives ? *options.representatives
                                          : default_representatives(net, report, worse, better);
    if (! admissible(report, reps, worse, better))
        throw PreconditionError("representative sets are not admissible for this query");

    auto result = RestrictedSearch(net, report, better, worse, reps, options).run();
    if (! options.rep_exhaustive)
        return result;

    for (VarIndex x = 0; x < net.size(); ++x) {
        for (const auto & candidate : representative_candidates(net, report, x, worse, better)) {
            if (candidate == reps[x])
                continue;
            RepMap alt = reps;
            alt[x] = candidate;
            auto verdict = RestrictedSearch(net, report, better, worse, alt, options).run().entailed;
            ++result.stats.representative_runs;
            if (verdict != result.entailed)
                throw InvariantError("verdict for " + format_outcome(net, better) + " over "
                    + format_outcome(net, worse) + " depends on the representative chosen for '"
                    + net.variable(x).name + "'");
        }
    }
    return result;
}

DominanceResult dominates(const CPNet & net, const Outcome & better, const Outcome & worse,
    const DominanceOptions & options)
{
    net.require_valid();
    return dominates(net, check_more_or_less(net), better, worse, options);
}

DominanceResult dominates_naive(const CPNet & net, const Outcome & better, const Outcome & worse,
    std::uint64_t max_expansions)
{
    net.require_valid();
    net.check_outcome(better);
    net.check_outcome(worse);

    DominanceResult result;
    if (better == worse)
        return result;

    struct Frame
    {
        Outcome state;
        std::vector<Flip> moves;
        std::size_t next = 0;
    };
    std::unordered_set<Outcome, OutcomeHash> visited;
    std::vector<Frame> stack;

    auto enter = [&](Outcome o) {
        if (! visited.insert(o).second)
            return false;
        if (++result.stats.nodes_expanded > max_expansions)
            throw ResourceError("naive dominance search exceeded " + std::to_string(max_expansions) + " expansions",
                result.stats.nodes_expanded);
        bool goal = o == better;
        auto flips = goal ? std::vector<Flip>{} : improving_flips(net, o);
        stack.push_back({std::move(o), std::move(flips)});
        result.stats.max_depth = std::max<std::uint64_t>(result.stats.max_depth, stack.size());
        return goal;
    };

    bool found = enter(worse);
    while (! found && ! stack.empty()) {
        auto & top = stack.back();
        if (top.next == top.moves.size()) {
            stack.pop_back();
            continue;
        }
        auto [x, v] = top.moves[top.next++];
        found = enter(top.state.with(x, v));
    }
    if (! found)
        return result;

    FlipSequence witness;
    for (const auto & frame : stack)
        witness.push_back(frame.state);
    result.entailed = true;
    result.stats.witness_length = witness.size();
    result.witness = std::move(witness);
    return result;
}

std::string render(const CPNet & net, const DominanceResult & result)
{
    std::string out = result.entailed ? "ENTAILED\n" : "NOT-ENTAILED\n";
    if (result.witness)
        for (const auto & o : *result.witness)
            out += format_outcome(net, o) + "\n";
    out += "nodes=" + std::to_string(result.stats.nodes_expanded) + " depth=" + std::to_string(result.stats.max_depth)
        + " len=" + std::to_string(result.stats.witness_length) + "\n";
    return out;
}

} // namespace mlcp
