#include <mlcp/analysis.hpp>
#include <mlcp/errors.hpp>

#include <algorithm>
#include <set>

namespace mlcp {

const char * to_string(MonotonicityFailure f)
{
    switch (f) {
    case MonotonicityFailure::non_monotone_ranking:
        return "non-monotone ranking";
    case MonotonicityFailure::multiple_change_boundaries:
        return "multiple change boundaries";
    case MonotonicityFailure::misaligned_child_boundaries:
        return "misaligned child boundaries";
    }
    return "?";
}

const char * to_string(Category c)
{
    return c == Category::less ? "LESS" : "MORE";
}

std::vector<VarIndex> MlReport::offending() const
{
    std::vector<VarIndex> out;
    for (const auto & r : variables)
        if (! r.is_monotonic)
            out.push_back(r.variable);
    return out;
}

namespace {

// Boundaries b of x's declared order at which CPT(child) selects a
// different ranking for some fixed assignment of the child's other parents.
std::vector<ValueIndex> change_boundaries(const CPNet & net, VarIndex x, VarIndex child)
{
    const auto & parents = net.parents(child);
    const auto slot = static_cast<std::size_t>(std::find(parents.begin(), parents.end(), x) - parents.begin());
    const auto size = net.domain_size(x);
    const auto & rows = net.cpt(child).rows;

    std::set<ValueIndex> candidates;
    for (const auto & row : rows)
        for (const auto & iv : row.condition[slot].values.intervals()) {
            if (iv.lo > 0)
                candidates.insert(iv.lo);
            if (iv.hi + 1 < size)
                candidates.insert(iv.hi + 1);
        }

    auto others_compatible = [&](const CptRow & a, const CptRow & b) {
        for (std::size_t k = 0; k < parents.size(); ++k)
            if (k != slot && ! a.condition[k].values.intersects(b.condition[k].values))
                return false;
        return true;
    };

    std::vector<ValueIndex> out;
    for (ValueIndex b : candidates) {
        bool changes = false;
        for (std::size_t i = 0; i < rows.size() && ! changes; ++i) {
            if (! rows[i].condition[slot].values.contains(b - 1))
                continue;
            for (std::size_t j = 0; j < rows.size() && ! changes; ++j) {
                if (i == j || ! rows[j].condition[slot].values.contains(b))
                    continue;
                changes = ! rows[i].ranking.equivalent(rows[j].ranking) && others_compatible(rows[i], rows[j]);
            }
        }
        if (changes)
            out.push_back(b);
    }
    return out;
}

} // namespace

MonotonicityReport check_monotonic(const CPNet & net, VarIndex x)
{
    net.require_valid();
    MonotonicityReport report;
    report.variable = x;

    for (const auto & row : net.cpt(x).rows)
        report.direction_by_row.push_back(row.ranking.direction());

    std::set<ValueIndex> all;
    bool multiple = false;
    for (VarIndex child : net.children(x)) {
        auto b = change_boundaries(net, x, child);
        multiple = multiple || b.size() > 1;
        all.insert(b.begin(), b.end());
        report.child_boundaries.push_back({child, std::move(b)});
    }

    if (std::any_of(report.direction_by_row.begin(), report.direction_by_row.end(),
            [](const auto & d) { return ! d.has_value(); }))
        report.failure = MonotonicityFailure::non_monotone_ranking;
    else if (multiple)
        report.failure = MonotonicityFailure::multiple_change_boundaries;
    else if (all.size() > 1)
        report.failure = MonotonicityFailure::misaligned_child_boundaries;

    if (report.failure)
        return report;

    report.is_monotonic = true;
    ValueIndex c = 0;
    if (all.empty())
        report.break_point_default = true;
    else
        c = *all.begin() - 1;
    const auto last = static_cast<ValueIndex>(net.domain_size(x) - 1);
    report.break_point = c;
    report.less = ValueSet::interval(0, c);
    report.more = ValueSet::interval(c + 1, last);
    return report;
}

MlReport check_more_or_less(const CPNet & net)
{
    MlReport report;
    report.is_more_or_less = true;
    for (VarIndex x = 0; x < net.size(); ++x) {
        report.variables.push_back(check_monotonic(net, x));
        report.is_more_or_less = report.is_more_or_less && report.variables.back().is_monotonic;
    }
    return report;
}

Category category(const MonotonicityReport & report, ValueIndex v)
{
    if (! report.is_monotonic)
        throw PreconditionError("categories are only defined for monotonic variables");
    if (report.less.contains(v))
        return Category::less;
    if (report.more.contains(v))
        return Category::more;
    throw ModelError("value outside the domain");
}

Category category(const CPNet & net, const MonotonicityReport & report, std::string_view value)
{
    const auto & var = net.variable(report.variable);
    auto v = var.domain.find(value);
    if (! v)
        throw ModelError("value '" + std::string(value) + "' is not in the domain of '" + var.name + "'");
    return category(report, *v);
}

std::string describe(const CPNet & net, const MlReport & report)
{
    std::string out = report.is_more_or_less ? "more-or-less CP-net: yes\n" : "more-or-less CP-net: no\n";
    for (const auto & r : report.variables) {
        const auto & var = net.variable(r.variable);
        out += "  " + var.name + ": ";
        if (! r.is_monotonic) {
            out += std::string("not monotonic (") + to_string(*r.failure) + ")";
            for (const auto & cb : r.child_boundaries) {
                if (cb.boundaries.empty())
                    continue;
                out += "; " + net.variable(cb.child).name + " changes at";
                for (auto b : cb.boundaries)
                    out += " " + var.domain.value(b - 1) + "|" + var.domain.value(b);
            }
            out += "\n";
            continue;
        }
        out += "monotonic, break point " + var.domain.value(*r.break_point);
        if (r.break_point_default)
            out += " (default)";
        out += ", less=" + var.domain.format_set(r.less) + ", more=" + var.domain.format_set(r.more) + "\n";
    }
    return out;
}

std::string key_values(const CPNet & net, const MlReport & report)
{
    std::string out;
    for (const auto & r : report.variables) {
        const auto & var = net.variable(r.variable);
        out += var.name + " monotonic=" + (r.is_monotonic ? "true" : "false");
        if (r.is_monotonic) {
            out += " c=" + var.domain.value(*r.break_point) + " less=" + var.domain.format_set(r.less);
            if (r.break_point_default)
                out += " c-default";
        }
        else {
            std::string reason = to_string(*r.failure);
            std::replace(reason.begin(), reason.end(), ' ', '-');
            out += " c=- less=- reason=" + reason;
        }
        out += "\n";
    }
    return out;
}

} // namespace mlcp
