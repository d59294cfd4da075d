#include <mlcp/cpnet.hpp>

#include <algorithm>
#include <optional>

namespace mlcp {

namespace {

using Box = std::vector<Predicate>;

std::string describe_region(const CPNet & net, VarIndex x, const std::vector<ValueSet> & region)
{
    std::string out;
    const auto & parents = net.parents(x);
    for (std::size_t k = 0; k < parents.size(); ++k) {
        const auto & pvar = net.variable(parents[k]);
        if (! out.empty())
            out += " & ";
        out += pvar.name + " in " + pvar.domain.format_set(region[k]);
    }
    return out;
}

std::string describe_row(const CptRow & row, std::size_t index)
{
    if (row.line != 0)
        return "line " + std::to_string(row.line);
    return "row " + std::to_string(index + 1);
}

// Finds one parent assignment covered by none of `rows`, sweeping the k-th
// parent's domain in elementary segments cut at the rows' interval ends.
std::optional<std::vector<ValueIndex>> find_gap(const CPNet & net, VarIndex x,
    const std::vector<const CptRow *> & rows, std::size_t k, std::vector<ValueIndex> & prefix)
{
    const auto & parents = net.parents(x);
    if (k == parents.size()) {
        if (rows.empty())
            return prefix;
        return std::nullopt;
    }

    const auto size = static_cast<ValueIndex>(net.domain_size(parents[k]));
    std::vector<ValueIndex> cuts{0};
    for (const auto * row : rows)
        for (const auto & iv : row->condition[k].values.intervals()) {
            cuts.push_back(iv.lo);
            if (iv.hi + 1 < size)
                cuts.push_back(iv.hi + 1);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (ValueIndex start : cuts) {
        std::vector<const CptRow *> covering;
        for (const auto * row : rows)
            if (row->condition[k].values.contains(start))
                covering.push_back(row);
        if (covering.empty()) {
            prefix.push_back(start);
            // remaining parents are unconstrained; any value will do
            while (prefix.size() < parents.size())
                prefix.push_back(0);
            return prefix;
        }
        prefix.push_back(start);
        if (auto gap = find_gap(net, x, covering, k + 1, prefix))
            return gap;
        prefix.pop_back();
    }
    return std::nullopt;
}

CptCheck check_cpt(const CPNet & net, VarIndex x)
{
    CptCheck check;
    check.variable = x;
    const auto & var = net.variable(x);
    const auto & rows = net.cpt(x).rows;

    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t s = r + 1; s < rows.size(); ++s) {
            std::vector<ValueSet> region;
            bool disjoint = false;
            for (std::size_t k = 0; k < var.parents.size() && ! disjoint; ++k) {
                region.push_back(rows[r].condition[k].values.intersect(rows[s].condition[k].values));
                disjoint = region.back().empty();
            }
            if (disjoint)
                continue;
            check.non_overlapping = false;
            std::string where = var.parents.empty() ? "every context" : describe_region(net, x, region);
            check.problems.push_back("CPT of " + var.name + ": rows at " + describe_row(rows[r], r) + " and "
                + describe_row(rows[s], s) + " overlap on " + where);
        }

    std::vector<const CptRow *> all;
    for (const auto & row : rows)
        all.push_back(&row);
    std::vector<ValueIndex> prefix;
    if (auto gap = find_gap(net, x, all, 0, prefix)) {
        check.exhaustive = false;
        std::vector<ValueSet> point;
        for (auto v : *gap)
            point.push_back(ValueSet::single(v));
        check.problems.push_back("CPT of " + var.name + ": no row matches " + describe_region(net, x, point));
    }

    for (const auto & row : rows)
        if (row.ranking.domain_size() != var.domain.size()) {
            check.rankings_total = false;
            check.problems.push_back("CPT of " + var.name + ": ranking does not cover the domain");
        }
    return check;
}

} // namespace

namespace detail {

StructureReport check_structure(const CPNet & net, const std::vector<std::string> & cycle)
{
    StructureReport report;
    report.acyclic = cycle.empty();
    report.cycle = cycle;
    for (VarIndex x = 0; x < net.size(); ++x)
        report.cpts.push_back(check_cpt(net, x));
    return report;
}

} // namespace detail

StructureReport validate_structure(const CPNet & net)
{
    return net.structure();
}

} // namespace mlcp
