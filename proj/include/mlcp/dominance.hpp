#pragma once

#include <mlcp/analysis.hpp>
#include <mlcp/cpnet.hpp>
#include <mlcp/errors.hpp>
#include <mlcp/oracle.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mlcp {

/// One value from each category of a variable.
struct RepresentativeSet
{
    ValueIndex less_value;
    ValueIndex more_value;

    [[nodiscard]] bool contains(ValueIndex v) const { return v == less_value || v == more_value; }
    [[nodiscard]] ValueIndex in(Category c) const { return c == Category::less ? less_value : more_value; }

    bool operator==(const RepresentativeSet &) const = default;
};

/// Representative set per variable, declaration order.
using RepMap = std::vector<RepresentativeSet>;

/// All representative sets admissible for x on a query from `worse` to
/// `better`, ordered by the declared order of the free value:
///  - worse(x), better(x) in different categories: just {worse(x), better(x)};
///  - otherwise better(x) is forced and the slot in the other category
///    ranges over that whole category.
/// Throws ValidationError when `report` is not more-or-less.
[[nodiscard]] std::vector<RepresentativeSet> representative_candidates(const CPNet & net, const MlReport & report,
    VarIndex x, const Outcome & worse, const Outcome & better);

/// The candidate whose free value sits next to the break point: c itself
/// when the free category is less(x), c's successor when it is more(x).
[[nodiscard]] RepresentativeSet default_representative(const CPNet & net, const MlReport & report, VarIndex x,
    const Outcome & worse, const Outcome & better);
[[nodiscard]] RepMap default_representatives(const CPNet & net, const MlReport & report, const Outcome & worse,
    const Outcome & better);

/// Whether `reps` satisfies the representative-set constraints for a query
/// from `worse` to `better`: one value per category, better(x) a member,
/// and worse(x) a member exactly when the categories differ or the values
/// are equal.
[[nodiscard]] bool admissible(const MlReport & report, const RepMap & reps, const Outcome & worse,
    const Outcome & better);

/// Flip x to the member of `rep` in the same category as o(x), if that is a
/// strict improvement. nullopt otherwise, including when o(x) already is
/// that member.
[[nodiscard]] std::optional<Outcome> flip_in_category(const CPNet & net, const MlReport & report, const Outcome & o,
    VarIndex x, const RepresentativeSet & rep);
/// As flip_in_category, for the member in the other category.
[[nodiscard]] std::optional<Outcome> flip_out_category(const CPNet & net, const MlReport & report, const Outcome & o,
    VarIndex x, const RepresentativeSet & rep);

/// Raised when a sequence handed to is_skip_flipping / reduce_to_skip
/// breaks a precondition; `kind()` tells which one.
class SequenceError : public PreconditionError
{
public:
    enum class Kind
    {
        not_improving,
        not_irreducible,
        bad_representatives,
    };

    SequenceError(Kind k, const std::string & what) :
        PreconditionError(what),
        kind_(k)
    {
    }

    [[nodiscard]] Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Every value a variable is flipped to lies in that variable's
/// representative set. `seq` must be improving and irreducible and `reps`
/// admissible for its endpoints (SequenceError otherwise).
[[nodiscard]] bool is_skip_flipping(const CPNet & net, const MlReport & report, std::span<const Outcome> seq,
    const RepMap & reps);

/// Rewrites an irreducible improving sequence into a skip-flipping one with
/// the same endpoints.
///
/// Each variable's values are mapped through an order-preserving,
/// category-preserving map onto its representatives, so every step stays
/// improving or becomes a no-op (rankings only depend on parent categories
/// and run with or against the declared order):
///  - categories of the endpoints differ: each category collapses onto the
///    endpoint value in it;
///  - same category: the opposite category collapses onto the free
///    representative; in the endpoints' category, values on the far side of
///    o1(x) (away from ok(x)) stay at o1(x) until x first moves past o1(x)
///    or leaves the category, after which the whole category maps to ok(x).
/// Repeats are dropped and removable blocks deleted. The result is checked
/// and an InvariantError is raised if it is not skip-flipping.
[[nodiscard]] FlipSequence reduce_to_skip(const CPNet & net, const MlReport & report, std::span<const Outcome> seq,
    const RepMap & reps);
[[nodiscard]] FlipSequence reduce_to_skip(const CPNet & net, const MlReport & report, std::span<const Outcome> seq);

struct SearchStats
{
    std::uint64_t nodes_expanded = 0;
    std::uint64_t max_depth = 0;
    std::uint64_t witness_length = 0;
    std::uint64_t representative_runs = 1;
};

struct DominanceResult
{
    bool entailed = false;
    /// Improving sequence from `worse` to `better`, present iff entailed.
    std::optional<FlipSequence> witness;
    SearchStats stats;
};

struct DominanceOptions
{
    bool suffix_fixing = true;
    bool forward_pruning = true;
    /// Only takes effect on tree-structured nets.
    bool least_variable_flipping = true;
    /// Re-run the search once per alternative representative of every
    /// variable and raise InvariantError if any verdict differs.
    bool rep_exhaustive = false;
    std::uint64_t max_expansions = 1'000'000;
    /// Overrides default_representatives; must be admissible.
    std::optional<RepMap> representatives;
};

/// Dominance test `better ≻ worse` for more-or-less nets. Depth-first
/// backtracking from `worse` over the space where each variable keeps
/// worse(x) or takes a representative value. At each node variables not
/// yet at a representative are first flipped in-category when that
/// improves; branching is then over out-of-category flips in topological
/// order. Throws ValidationError for nets that are not more-or-less and
/// ResourceError past `max_expansions`.
[[nodiscard]] DominanceResult dominates(const CPNet & net, const MlReport & report, const Outcome & better,
    const Outcome & worse, const DominanceOptions & options = {});
[[nodiscard]] DominanceResult dominates(const CPNet & net, const Outcome & better, const Outcome & worse,
    const DominanceOptions & options = {});

/// Baseline: same depth-first skeleton, any improving flip is a move and no
/// pruning is applied. Works on any valid net.
[[nodiscard]] DominanceResult dominates_naive(const CPNet & net, const Outcome & better, const Outcome & worse,
    std::uint64_t max_expansions = 1'000'000);

/// `ENTAILED` / `NOT-ENTAILED`, witness literals one per line, then
/// `nodes=... depth=... len=...`.
[[nodiscard]] std::string render(const CPNet & net, const DominanceResult & result);

} // namespace mlcp
