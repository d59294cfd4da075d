#include <mlcp/errors.hpp>
#include <mlcp/reasoning.hpp>

#include <algorithm>
#include <set>

namespace mlcp {

Outcome optimize(const CPNet & net, const PartialAssignment & partial)
{
    net.require_valid();
    if (partial.size() != net.size())
        throw ModelError("partial assignment has the wrong width");
    std::vector<ValueIndex> values(net.size(), 0);
    for (VarIndex x = 0; x < net.size(); ++x)
        if (partial[x]) {
            if (*partial[x] >= net.domain_size(x))
                throw ModelError("value outside the domain of '" + net.variable(x).name + "'");
            values[x] = *partial[x];
        }
    for (VarIndex x : net.topological_order())
        if (! partial[x])
            values[x] = net.matching_row(x, values).ranking.best();
    return Outcome(std::move(values));
}

bool can_order_before(const CPNet & net, const Outcome & o, const Outcome & p)
{
    net.require_valid();
    net.check_outcome(o);
    net.check_outcome(p);
    if (o == p)
        throw PreconditionError("can_order_before needs two distinct outcomes");

    // differs_above[x]: x or one of its ancestors differs
    std::vector<bool> differs_above(net.size(), false);
    for (VarIndex x : net.topological_order()) {
        bool ancestor = false;
        for (VarIndex parent : net.parents(x))
            ancestor = ancestor || differs_above[parent];
        differs_above[x] = ancestor || o[x] != p[x];
        if (! ancestor && o[x] != p[x] && lookup_ranking(net, x, o).prefers(o[x], p[x]))
            return true;
    }
    return false;
}

namespace {

// o goes first when it wins on the topologically first differing variable.
bool first_difference_prefers(const CPNet & net, const Outcome & o, const Outcome & p)
{
    for (VarIndex x : net.topological_order())
        if (o[x] != p[x])
            return lookup_ranking(net, x, o).prefers(o[x], p[x]);
    return false;
}

} // namespace

std::vector<Outcome> order_outcomes(const CPNet & net, std::span<const Outcome> outcomes)
{
    net.require_valid();
    std::set<Outcome> seen;
    for (const auto & o : outcomes) {
        net.check_outcome(o);
        if (! seen.insert(o).second)
            throw PreconditionError("order_outcomes needs distinct outcomes");
    }

    std::vector<Outcome> out;
    for (const auto & o : outcomes) {
        auto pos = std::find_if(out.begin(), out.end(), [&](const Outcome & q) { return first_difference_prefers(net, o, q); });
        out.insert(pos, o);
    }
    return out;
}

} // namespace mlcp
