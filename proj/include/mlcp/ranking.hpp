#pragma once

#include <mlcp/domain.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace mlcp {

/// Direction of a ranking relative to the declared domain order.
enum class Direction
{
    ascending,  ///< last declared value most preferred
    descending, ///< first declared value most preferred
};

/// A strict total order over one variable's domain, as written in a CPT
/// row. ASC/DESC stay symbolic so that 1000-value domains cost nothing.
class Ranking
{
public:
    enum class Kind
    {
        ascending,
        descending,
        explicit_order,
    };

    static Ranking ascending(std::size_t domain_size);
    static Ranking descending(std::size_t domain_size);
    /// `most_preferred_first` must be a permutation of 0..n-1; throws
    /// ModelError otherwise.
    static Ranking explicit_order(std::vector<ValueIndex> most_preferred_first, std::size_t domain_size);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::size_t domain_size() const { return size_; }

    /// Strict preference: a is ranked above b.
    [[nodiscard]] bool prefers(ValueIndex a, ValueIndex b) const;
    [[nodiscard]] ValueIndex best() const;
    /// 0 for the most preferred value.
    [[nodiscard]] std::size_t position(ValueIndex v) const;
    [[nodiscard]] ValueIndex at_position(std::size_t pos) const;

    /// Resolved explicit permutation, most preferred first.
    [[nodiscard]] std::vector<ValueIndex> permutation() const;
    /// Direction when the resolved order equals the declared order or its
    /// reverse; nullopt for any other permutation.
    [[nodiscard]] std::optional<Direction> direction() const;
    /// Same resolved permutation, regardless of how it was written.
    [[nodiscard]] bool equivalent(const Ranking & other) const;

    /// Textual identity (kind and listed order).
    bool operator==(const Ranking & other) const
    {
        return kind_ == other.kind_ && size_ == other.size_ && order_ == other.order_;
    }

private:
    Ranking(Kind k, std::size_t n) :
        kind_(k),
        size_(n)
    {
    }

    Kind kind_;
    std::size_t size_;
    std::vector<ValueIndex> order_;    // explicit only
    std::vector<std::size_t> rank_;    // explicit only, inverse of order_
};

} // namespace mlcp
