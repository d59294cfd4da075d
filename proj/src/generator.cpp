#include <mlcp/errors.hpp>
#include <mlcp/generator.hpp>

#include <algorithm>
#include <limits>

namespace mlcp {

void GenSpec::validate() const
{
    if (n_vars < 1)
        throw ModelError("generator needs at least one variable");
    if (max_domain < 2)
        throw ModelError("generator needs max_domain >= 2");
    if (max_parents >= n_vars)
        throw ModelError("generator needs max_parents < n_vars");
}

std::uint64_t draw(std::mt19937_64 & rng, std::uint64_t lo, std::uint64_t hi)
{
    const std::uint64_t span = hi - lo + 1;
    if (span == 0)
        return rng();
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do
        r = rng();
    while (r >= limit);
    return lo + r % span;
}

CPNet random_ml_net(const GenSpec & spec)
{
    spec.validate();
    std::mt19937_64 rng(spec.seed);

    std::vector<Variable> vars;
    std::vector<ValueIndex> breaks;
    for (std::size_t i = 0; i < spec.n_vars; ++i) {
        auto k = draw(rng, 2, spec.max_domain);
        Variable v{"X" + std::to_string(i + 1),
            k == 2 ? OrderedDomain::enumerated({"lo", "hi"}) : OrderedDomain::integer_range(1, static_cast<std::int64_t>(k)),
            {}};
        breaks.push_back(static_cast<ValueIndex>(draw(rng, 0, k - 2)));

        std::vector<VarIndex> pool(i);
        for (VarIndex p = 0; p < i; ++p)
            pool[p] = p;
        auto n_parents = draw(rng, 0, std::min(spec.max_parents, i));
        for (std::size_t j = 0; j < n_parents; ++j) {
            auto pick = draw(rng, j, pool.size() - 1);
            std::swap(pool[j], pool[pick]);
            v.parents.push_back(pool[j]);
        }
        std::sort(v.parents.begin(), v.parents.end());
        vars.push_back(std::move(v));
    }

    std::vector<Cpt> cpts;
    for (const auto & v : vars) {
        Cpt cpt;
        const auto size = v.domain.size();
        const auto m = v.parents.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            std::vector<Predicate> condition;
            for (std::size_t k = 0; k < m; ++k) {
                const auto p = v.parents[k];
                const auto c = breaks[p];
                const auto last = static_cast<ValueIndex>(vars[p].domain.size() - 1);
                auto values = (mask >> k) & 1 ? ValueSet::interval(c + 1, last) : ValueSet::interval(0, c);
                auto form = values.size() == 1 ? PredicateForm::equals : PredicateForm::range;
                condition.push_back({form, std::move(values)});
            }
            auto ranking = draw(rng, 0, 1) ? Ranking::ascending(size) : Ranking::descending(size);
            cpt.rows.push_back(CptRow{std::move(condition), std::move(ranking)});
        }
        cpts.push_back(std::move(cpt));
    }
    return CPNet("gen" + std::to_string(spec.seed), std::move(vars), std::move(cpts));
}

} // namespace mlcp
