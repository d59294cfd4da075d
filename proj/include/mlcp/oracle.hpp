#pragma once

#include <mlcp/cpnet.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mlcp {

/// Ground-truth semantics by brute force: the induced preference graph
/// and plain reachability over it. Everything here is meant for desk-scale
/// nets and is guarded by an outcome budget.

inline constexpr std::uint64_t default_oracle_cap = 100000;

/// `MLCP_ORACLE_CAP` when set to a positive integer, else the default.
[[nodiscard]] std::uint64_t oracle_cap_from_env();

struct Flip
{
    VarIndex variable;
    ValueIndex value;

    bool operator==(const Flip &) const = default;
};

/// Outcomes o1..ok, consecutive ones differing in exactly one variable.
using FlipSequence = std::vector<Outcome>;

/// Every single-variable change of `o` to a strictly preferred value.
/// Variables in topological order; per variable, values from the smallest
/// improvement to the most preferred value.
[[nodiscard]] std::vector<Flip> improving_flips(const CPNet & net, const Outcome & o);

/// Mixed-radix packing of outcomes into 64-bit ids.
class OutcomeCodec
{
public:
    /// Throws ResourceError when the outcome space does not fit 64 bits.
    explicit OutcomeCodec(const CPNet & net);

    [[nodiscard]] std::uint64_t count() const { return count_; }
    [[nodiscard]] std::uint64_t encode(const Outcome & o) const;
    [[nodiscard]] Outcome decode(std::uint64_t id) const;

private:
    std::vector<std::uint64_t> radix_;
    std::uint64_t count_ = 1;
};

class PreferenceGraph
{
public:
    [[nodiscard]] const CPNet & net() const { return *net_; }
    [[nodiscard]] std::uint64_t size() const { return successors_.size(); }
    [[nodiscard]] std::size_t edge_count() const;
    [[nodiscard]] Outcome outcome(std::uint64_t id) const { return codec_.decode(id); }
    [[nodiscard]] std::uint64_t index(const Outcome & o) const { return codec_.encode(o); }
    /// Ids of outcomes reachable by one improving flip.
    [[nodiscard]] const std::vector<std::uint64_t> & successors(std::uint64_t id) const { return successors_[id]; }
    [[nodiscard]] bool has_edge(const Outcome & from, const Outcome & to) const;
    /// Kahn order (worst first) or nullopt if the graph has a cycle.
    [[nodiscard]] std::optional<std::vector<std::uint64_t>> topological_order() const;
    [[nodiscard]] bool is_acyclic() const { return topological_order().has_value(); }

private:
    friend PreferenceGraph induced_graph(const CPNet &, std::uint64_t);
    PreferenceGraph(const CPNet & net, OutcomeCodec codec) :
        net_(&net),
        codec_(std::move(codec))
    {
    }

    const CPNet * net_;
    OutcomeCodec codec_;
    std::vector<std::vector<std::uint64_t>> successors_;
};

/// Throws ResourceError carrying the outcome count when it exceeds `cap`.
/// The graph refers to `net`, which must outlive it.
[[nodiscard]] PreferenceGraph induced_graph(const CPNet & net, std::uint64_t cap = default_oracle_cap);

/// True iff an improving flipping path leads from `worse` to `better`.
/// Explores lazily from `worse`, so only the reachable part counts
/// against `cap`. Strict: an outcome never dominates itself.
[[nodiscard]] bool oracle_dominates(const CPNet & net, const Outcome & better, const Outcome & worse,
    std::uint64_t cap = default_oracle_cap);

/// A shortest improving path from `worse` to `better`, if any. Shortest
/// paths are irreducible.
[[nodiscard]] std::optional<FlipSequence> oracle_path(const CPNet & net, const Outcome & better, const Outcome & worse,
    std::uint64_t cap = default_oracle_cap);

/// Ids (per OutcomeCodec) of every outcome strictly reachable from `from`.
[[nodiscard]] std::vector<std::uint64_t> oracle_reachable(const CPNet & net, const Outcome & from,
    std::uint64_t cap = default_oracle_cap);

/// `to` differs from `from` in exactly one variable, and is preferred there.
[[nodiscard]] bool is_improving_flip(const CPNet & net, const Outcome & from, const Outcome & to);
[[nodiscard]] bool is_improving_sequence(const CPNet & net, std::span<const Outcome> seq);

/// No contiguous interior block can be deleted while leaving an improving
/// sequence with the same endpoints. Throws PreconditionError if `seq` is
/// not improving.
[[nodiscard]] bool is_irreducible(const CPNet & net, std::span<const Outcome> seq);
/// Deletes removable blocks until the sequence is irreducible.
[[nodiscard]] FlipSequence make_irreducible(const CPNet & net, FlipSequence seq);

/// `ranking` lists every outcome once, most preferred first, and is a
/// linear extension of the induced preference graph.
[[nodiscard]] bool ranking_satisfies(const CPNet & net, std::span<const Outcome> ranking,
    std::uint64_t cap = default_oracle_cap);

/// Graphviz rendering, node labels are outcome literals and each edge
/// points from an outcome to an improving flip of it.
[[nodiscard]] std::string to_dot(const PreferenceGraph & graph);

} // namespace mlcp
