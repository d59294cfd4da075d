#pragma once

#include <mlcp/domain.hpp>
#include <mlcp/ranking.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mlcp {

using VarIndex = std::uint32_t;

struct Variable
{
    std::string name;
    OrderedDomain domain;
    std::vector<VarIndex> parents;

    bool operator==(const Variable &) const = default;
};

/// How a predicate was written; kept so serialization reproduces it.
enum class PredicateForm
{
    equals,   ///< `P=v`
    range,    ///< `P in lo..hi`
    set,      ///< `P in {v,...}`
};

struct Predicate
{
    PredicateForm form = PredicateForm::equals;
    ValueSet values;

    bool operator==(const Predicate &) const = default;
};

/// One CPT entry. `condition[k]` constrains the k-th parent of the owning
/// variable; a root variable's single row has an empty condition.
struct CptRow
{
    std::vector<Predicate> condition;
    Ranking ranking;
    std::size_t line = 0; ///< source line, 0 when built programmatically

    [[nodiscard]] bool matches(std::span<const VarIndex> parents, std::span<const ValueIndex> assignment) const;

    bool operator==(const CptRow & o) const { return condition == o.condition && ranking == o.ranking; }
};

struct Cpt
{
    std::vector<CptRow> rows;

    bool operator==(const Cpt &) const = default;
};

/// A total assignment of value indices, one per variable in declaration
/// order.
class Outcome
{
public:
    Outcome() = default;
    explicit Outcome(std::vector<ValueIndex> values) :
        values_(std::move(values))
    {
    }

    [[nodiscard]] ValueIndex operator[](VarIndex x) const { return values_[x]; }
    void set(VarIndex x, ValueIndex v) { values_[x] = v; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] std::span<const ValueIndex> values() const { return values_; }

    [[nodiscard]] Outcome with(VarIndex x, ValueIndex v) const
    {
        Outcome o = *this;
        o.values_[x] = v;
        return o;
    }

    auto operator<=>(const Outcome &) const = default;

private:
    std::vector<ValueIndex> values_;
};

struct OutcomeHash
{
    std::size_t operator()(const Outcome & o) const noexcept;
};

/// Per-variable optional values, declaration order.
using PartialAssignment = std::vector<std::optional<ValueIndex>>;

struct CptCheck
{
    VarIndex variable = 0;
    bool exhaustive = true;
    bool non_overlapping = true;
    bool rankings_total = true;
    std::vector<std::string> problems;

    [[nodiscard]] bool ok() const { return exhaustive && non_overlapping && rankings_total; }
};

struct StructureReport
{
    bool acyclic = true;
    std::vector<std::string> cycle; ///< variable names on one cycle, if any
    std::vector<CptCheck> cpts;

    [[nodiscard]] bool ok() const;
    /// All problems as human-readable lines.
    [[nodiscard]] std::vector<std::string> problems() const;
};

/// An immutable CP-net. Local well-formedness (known parents, predicate
/// values in domain, one predicate per parent, total rankings) is enforced
/// at construction; acyclicity and CPT partitioning are recorded in
/// `structure()` so that broken nets can still be inspected and reported.
class CPNet
{
public:
    /// Throws ModelError on empty name, duplicate variable names, bad
    /// parent lists, or CPT rows that don't fit their variable.
    CPNet(std::string name, std::vector<Variable> variables, std::vector<Cpt> cpts);

    [[nodiscard]] const std::string & name() const { return name_; }
    [[nodiscard]] std::size_t size() const { return variables_.size(); }
    [[nodiscard]] const Variable & variable(VarIndex x) const { return variables_[x]; }
    [[nodiscard]] const std::vector<Variable> & variables() const { return variables_; }
    [[nodiscard]] const Cpt & cpt(VarIndex x) const { return cpts_[x]; }
    [[nodiscard]] const std::vector<VarIndex> & parents(VarIndex x) const { return variables_[x].parents; }
    [[nodiscard]] const std::vector<VarIndex> & children(VarIndex x) const { return children_[x]; }
    [[nodiscard]] std::size_t domain_size(VarIndex x) const { return variables_[x].domain.size(); }

    [[nodiscard]] std::optional<VarIndex> find_variable(std::string_view name) const;
    /// Throws ModelError for unknown names.
    [[nodiscard]] VarIndex variable_index(std::string_view name) const;

    /// Parents before children. Only meaningful when `structure().acyclic`.
    [[nodiscard]] const std::vector<VarIndex> & topological_order() const { return topo_; }
    /// Every variable has at most one parent.
    [[nodiscard]] bool is_tree_structured() const;

    [[nodiscard]] const StructureReport & structure() const { return structure_; }
    /// Throws ValidationError unless `structure().ok()`.
    void require_valid() const;

    /// Product of domain sizes, or nullopt when it overflows 64 bits.
    [[nodiscard]] std::optional<std::uint64_t> outcome_count() const;

    /// Throws ModelError when `o` is not a total in-domain assignment.
    void check_outcome(const Outcome & o) const;

    /// The row of CPT(x) matching the parent values in `assignment` (a
    /// full-width vector; only x's parents are read). Throws InvariantError
    /// if zero or several rows match.
    [[nodiscard]] const CptRow & matching_row(VarIndex x, std::span<const ValueIndex> assignment) const;

    bool operator==(const CPNet & o) const
    {
        return name_ == o.name_ && variables_ == o.variables_ && cpts_ == o.cpts_;
    }

private:
    std::string name_;
    std::vector<Variable> variables_;
    std::vector<Cpt> cpts_;
    std::vector<std::vector<VarIndex>> children_;
    std::vector<VarIndex> topo_;
    StructureReport structure_;
};

/// The ranking CPT(x) dictates for the parent context found in `o`.
[[nodiscard]] const Ranking & lookup_ranking(const CPNet & net, VarIndex x, const Outcome & o);

/// Acyclicity, CPT partition (exhaustive and non-overlapping) and ranking
/// totality. Partitioning is decided on the row boxes by per-parent interval
/// arithmetic; the parent product space is never enumerated.
[[nodiscard]] StructureReport validate_structure(const CPNet & net);

} // namespace mlcp
