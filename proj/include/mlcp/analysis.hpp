#pragma once

#include <mlcp/cpnet.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mlcp {

enum class Category
{
    less,
    more,
};

enum class MonotonicityFailure
{
    non_monotone_ranking,       ///< a CPT row is neither the declared order nor its reverse
    multiple_change_boundaries, ///< one child's CPT changes at two or more places
    misaligned_child_boundaries ///< children change at different places
};

[[nodiscard]] const char * to_string(MonotonicityFailure f);
[[nodiscard]] const char * to_string(Category c);

/// Where a child's CPT changes as only this variable moves. A boundary b
/// sits between values b-1 and b of the declared order.
struct ChildBoundaries
{
    VarIndex child = 0;
    std::vector<ValueIndex> boundaries;
};

struct MonotonicityReport
{
    VarIndex variable = 0;
    bool is_monotonic = false;
    /// Per CPT row, in row order; nullopt marks a non-monotone ranking.
    std::vector<std::optional<Direction>> direction_by_row;
    std::vector<ChildBoundaries> child_boundaries;
    /// Largest value of less(X). Set only when monotonic.
    std::optional<ValueIndex> break_point;
    /// No child pins the break point; the first declared value was chosen.
    bool break_point_default = false;
    ValueSet less;
    ValueSet more;
    std::optional<MonotonicityFailure> failure;
};

struct MlReport
{
    bool is_more_or_less = false;
    std::vector<MonotonicityReport> variables; ///< declaration order

    [[nodiscard]] const MonotonicityReport & operator[](VarIndex x) const { return variables[x]; }
    /// Variables that are not monotonic.
    [[nodiscard]] std::vector<VarIndex> offending() const;
};

/// Checks both the monotonicity constraint (every row of CPT(x) is the
/// declared order or its reverse) and the single-break-point constraint on
/// x's children. Boundaries are found from the children's row interval
/// endpoints, so cost is independent of |Dom(x)|. Requires a structurally
/// valid net.
[[nodiscard]] MonotonicityReport check_monotonic(const CPNet & net, VarIndex x);
[[nodiscard]] MlReport check_more_or_less(const CPNet & net);

/// Throws PreconditionError when the report is not monotonic and
/// ModelError when `v` is outside the domain.
[[nodiscard]] Category category(const MonotonicityReport & report, ValueIndex v);
[[nodiscard]] Category category(const CPNet & net, const MonotonicityReport & report, std::string_view value);

/// Human-readable multi-line rendering.
[[nodiscard]] std::string describe(const CPNet & net, const MlReport & report);
/// One line per variable: `name monotonic=<bool> c=<value|-> less=<set>`.
[[nodiscard]] std::string key_values(const CPNet & net, const MlReport & report);

} // namespace mlcp
