#include <mlcp/cpnet.hpp>
#include <mlcp/errors.hpp>

#include <algorithm>
#include <set>

namespace mlcp {

namespace detail {
StructureReport check_structure(const CPNet & net, const std::vector<std::string> & cycle);
}

bool CptRow::matches(std::span<const VarIndex> parents, std::span<const ValueIndex> assignment) const
{
    for (std::size_t k = 0; k < parents.size(); ++k)
        if (! condition[k].values.contains(assignment[parents[k]]))
            return false;
    return true;
}

std::size_t OutcomeHash::operator()(const Outcome & o) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : o.values()) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool StructureReport::ok() const
{
    return acyclic && std::all_of(cpts.begin(), cpts.end(), [](const CptCheck & c) { return c.ok(); });
}

std::vector<std::string> StructureReport::problems() const
{
    std::vector<std::string> out;
    if (! acyclic) {
        std::string path;
        for (const auto & v : cycle)
            path += v + " -> ";
        if (! cycle.empty())
            path += cycle.front();
        out.push_back("parent graph has a cycle: " + path);
    }
    for (const auto & c : cpts)
        out.insert(out.end(), c.problems.begin(), c.problems.end());
    return out;
}

namespace {

// Kahn's algorithm, smallest declared index first so the order is stable.
std::vector<VarIndex> topological_sort(const std::vector<Variable> & vars,
    const std::vector<std::vector<VarIndex>> & children)
{
    std::vector<std::size_t> in_degree(vars.size());
    for (std::size_t x = 0; x < vars.size(); ++x)
        in_degree[x] = vars[x].parents.size();

    std::set<VarIndex> ready;
    for (VarIndex x = 0; x < vars.size(); ++x)
        if (in_degree[x] == 0)
            ready.insert(x);

    std::vector<VarIndex> order;
    order.reserve(vars.size());
    while (! ready.empty()) {
        VarIndex x = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(x);
        for (VarIndex c : children[x])
            if (--in_degree[c] == 0)
                ready.insert(c);
    }
    return order;
}

// Walks parent links among the variables Kahn could not place; any such
// walk must revisit a node, and the revisited stretch is a cycle.
std::vector<std::string> find_cycle(const std::vector<Variable> & vars, const std::vector<VarIndex> & placed)
{
    std::vector<bool> done(vars.size(), false);
    for (auto x : placed)
        done[x] = true;
    auto start = std::find(done.begin(), done.end(), false);
    if (start == done.end())
        return {};

    std::vector<VarIndex> walk;
    std::vector<int> seen_at(vars.size(), -1);
    VarIndex x = static_cast<VarIndex>(start - done.begin());
    while (seen_at[x] < 0) {
        seen_at[x] = static_cast<int>(walk.size());
        walk.push_back(x);
        for (VarIndex p : vars[x].parents)
            if (! done[p]) {
                x = p;
                break;
            }
    }
    std::vector<std::string> cycle;
    for (auto it = walk.begin() + seen_at[x]; it != walk.end(); ++it)
        cycle.push_back(vars[*it].name);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

} // namespace

CPNet::CPNet(std::string name, std::vector<Variable> variables, std::vector<Cpt> cpts) :
    name_(std::move(name)),
    variables_(std::move(variables)),
    cpts_(std::move(cpts))
{
    if (name_.empty())
        throw ModelError("net name must not be empty");
    if (variables_.empty())
        throw ModelError("net has no variables");
    if (cpts_.size() != variables_.size())
        throw ModelError("need exactly one CPT per variable");

    std::set<std::string_view> names;
    for (const auto & v : variables_) {
        if (v.name.empty())
            throw ModelError("variable name must not be empty");
        if (! names.insert(v.name).second)
            throw ModelError("duplicate variable '" + v.name + "'");
    }

    children_.resize(variables_.size());
    for (VarIndex x = 0; x < variables_.size(); ++x) {
        const auto & var = variables_[x];
        std::set<VarIndex> seen;
        for (VarIndex p : var.parents) {
            if (p >= variables_.size())
                throw ModelError("variable '" + var.name + "' has an unknown parent");
            if (p == x)
                throw ModelError("variable '" + var.name + "' lists itself as parent");
            if (! seen.insert(p).second)
                throw ModelError("variable '" + var.name + "' lists parent '" + variables_[p].name + "' twice");
            children_[p].push_back(x);
        }

        const auto & rows = cpts_[x].rows;
        if (rows.empty())
            throw ModelError("CPT of '" + var.name + "' has no rows");
        for (const auto & row : rows) {
            if (row.condition.size() != var.parents.size())
                throw ModelError("CPT row of '" + var.name + "' must constrain every parent exactly once");
            for (std::size_t k = 0; k < var.parents.size(); ++k) {
                const auto & pd = variables_[var.parents[k]].domain;
                const auto & vs = row.condition[k].values;
                if (vs.empty() || vs.intervals().back().hi >= pd.size())
                    throw ModelError("CPT row of '" + var.name + "' has a condition outside the domain of '"
                        + variables_[var.parents[k]].name + "'");
            }
            if (row.ranking.domain_size() != var.domain.size())
                throw ModelError("ranking in CPT of '" + var.name + "' does not cover its domain");
        }
    }

    topo_ = topological_sort(variables_, children_);
    auto cycle = find_cycle(variables_, topo_);
    structure_ = detail::check_structure(*this, cycle);
}

std::optional<VarIndex> CPNet::find_variable(std::string_view name) const
{
    for (VarIndex x = 0; x < variables_.size(); ++x)
        if (variables_[x].name == name)
            return x;
    return std::nullopt;
}

VarIndex CPNet::variable_index(std::string_view name) const
{
    if (auto x = find_variable(name))
        return *x;
    throw ModelError("unknown variable '" + std::string(name) + "'");
}

bool CPNet::is_tree_structured() const
{
    return std::all_of(variables_.begin(), variables_.end(), [](const Variable & v) { return v.parents.size() <= 1; });
}

void CPNet::require_valid() const
{
    if (structure_.ok())
        return;
    auto problems = structure_.problems();
    throw ValidationError("net '" + name_ + "' is not structurally valid: " + problems.front());
}

std::optional<std::uint64_t> CPNet::outcome_count() const
{
    std::uint64_t n = 1;
    for (const auto & v : variables_) {
        if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(v.domain.size()), &n))
            return std::nullopt;
    }
    return n;
}

void CPNet::check_outcome(const Outcome & o) const
{
    if (o.size() != variables_.size())
        throw ModelError("outcome must assign every variable");
    for (VarIndex x = 0; x < variables_.size(); ++x)
        if (o[x] >= variables_[x].domain.size())
            throw ModelError("value outside the domain of '" + variables_[x].name + "'");
}

const CptRow & CPNet::matching_row(VarIndex x, std::span<const ValueIndex> assignment) const
{
    const auto & parents = variables_[x].parents;
    const CptRow * found = nullptr;
    for (const auto & row : cpts_[x].rows) {
        if (! row.matches(parents, assignment))
            continue;
        if (found)
            throw InvariantError("several CPT rows of '" + variables_[x].name + "' match one context");
        found = &row;
    }
    if (! found)
        throw InvariantError("no CPT row of '" + variables_[x].name + "' matches the context");
    return *found;
}

const Ranking & lookup_ranking(const CPNet & net, VarIndex x, const Outcome & o)
{
    return net.matching_row(x, o.values()).ranking;
}

} // namespace mlcp
