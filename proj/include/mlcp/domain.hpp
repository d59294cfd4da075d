#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mlcp {

/// Position of a value in its domain's declared order. Position is rank:
/// a lower index sits lower in the order.
using ValueIndex = std::uint32_t;

/// Closed range of value indices.
struct IndexInterval
{
    ValueIndex lo;
    ValueIndex hi;

    [[nodiscard]] bool contains(ValueIndex v) const { return lo <= v && v <= hi; }
    [[nodiscard]] std::uint64_t size() const { return std::uint64_t{hi} - lo + 1; }

    auto operator<=>(const IndexInterval &) const = default;
};

/// A set of value indices stored as sorted, disjoint, non-adjacent
/// intervals. Sets over huge integer ranges stay O(intervals).
class ValueSet
{
public:
    ValueSet() = default;

    static ValueSet single(ValueIndex v) { return interval(v, v); }
    static ValueSet interval(ValueIndex lo, ValueIndex hi);
    static ValueSet of(std::vector<ValueIndex> values);

    [[nodiscard]] bool empty() const { return intervals_.empty(); }
    [[nodiscard]] bool contains(ValueIndex v) const;
    [[nodiscard]] std::uint64_t size() const;
    [[nodiscard]] const std::vector<IndexInterval> & intervals() const { return intervals_; }

    [[nodiscard]] ValueSet intersect(const ValueSet & other) const;
    [[nodiscard]] bool intersects(const ValueSet & other) const { return ! intersect(other).empty(); }

    auto operator<=>(const ValueSet &) const = default;

private:
    void add(IndexInterval iv);

    std::vector<IndexInterval> intervals_;
};

/// A finite domain with a declared total order. Either an explicit list of
/// opaque tokens or an integer range lo..hi kept unexpanded.
class OrderedDomain
{
public:
    enum class Kind
    {
        enumerated,
        integer_range
    };

    /// Throws ModelError on fewer than two values, duplicates, or a list
    /// mixing integer and non-integer tokens.
    static OrderedDomain enumerated(std::vector<std::string> values);
    static OrderedDomain integer_range(std::int64_t lo, std::int64_t hi);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] std::string value(ValueIndex i) const;
    [[nodiscard]] std::optional<ValueIndex> find(std::string_view token) const;

    [[nodiscard]] std::int64_t range_lo() const { return lo_; }
    [[nodiscard]] std::int64_t range_hi() const { return hi_; }
    [[nodiscard]] const std::vector<std::string> & tokens() const { return tokens_; }

    /// `1..50` for integer domains, `{black,navy}` otherwise.
    [[nodiscard]] std::string format_set(const ValueSet & s) const;

    bool operator==(const OrderedDomain &) const = default;

private:
    OrderedDomain() = default;

    Kind kind_ = Kind::enumerated;
    std::vector<std::string> tokens_;
    std::int64_t lo_ = 0;
    std::int64_t hi_ = 0;
};

/// Parses a plain decimal integer (optional leading '-'), rejecting
/// anything else including leading '+' and embedded spaces.
[[nodiscard]] std::optional<std::int64_t> parse_integer(std::string_view token);

} // namespace mlcp
