#include <mlcp/domain.hpp>
#include <mlcp/errors.hpp>

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

namespace mlcp {

ValueSet ValueSet::interval(ValueIndex lo, ValueIndex hi)
{
    ValueSet s;
    if (lo <= hi)
        s.intervals_.push_back({lo, hi});
    return s;
}

ValueSet ValueSet::of(std::vector<ValueIndex> values)
{
    std::sort(values.begin(), values.end());
    ValueSet s;
    for (auto v : values)
        s.add({v, v});
    return s;
}

void ValueSet::add(IndexInterval iv)
{
    // callers add in ascending order of lo
    if (! intervals_.empty() && std::uint64_t{intervals_.back().hi} + 1 >= iv.lo) {
        intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
        return;
    }
    intervals_.push_back(iv);
}

bool ValueSet::contains(ValueIndex v) const
{
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), v,
        [](ValueIndex x, const IndexInterval & iv) { return x < iv.lo; });
    if (it == intervals_.begin())
        return false;
    return std::prev(it)->contains(v);
}

std::uint64_t ValueSet::size() const
{
    std::uint64_t n = 0;
    for (const auto & iv : intervals_)
        n += iv.size();
    return n;
}

ValueSet ValueSet::intersect(const ValueSet & other) const
{
    ValueSet out;
    auto a = intervals_.begin();
    auto b = other.intervals_.begin();
    while (a != intervals_.end() && b != other.intervals_.end()) {
        ValueIndex lo = std::max(a->lo, b->lo);
        ValueIndex hi = std::min(a->hi, b->hi);
        if (lo <= hi)
            out.add({lo, hi});
        if (a->hi < b->hi)
            ++a;
        else
            ++b;
    }
    return out;
}

std::optional<std::int64_t> parse_integer(std::string_view token)
{
    if (token.empty() || token.front() == '+')
        return std::nullopt;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        return std::nullopt;
    // reject non-canonical spellings such as "007" or "-0"
    if (std::to_string(v) != token)
        return std::nullopt;
    return v;
}

OrderedDomain OrderedDomain::enumerated(std::vector<std::string> values)
{
    if (values.size() < 2)
        throw ModelError("domain too small: need at least 2 values");
    std::set<std::string_view> seen;
    std::size_t integers = 0;
    for (const auto & v : values) {
        if (v.empty())
            throw ModelError("empty value token");
        if (! seen.insert(v).second)
            throw ModelError("duplicate domain value '" + v + "'");
        if (parse_integer(v))
            ++integers;
    }
    if (integers != 0 && integers != values.size())
        throw ModelError("mixed-kind domain: integer and symbolic values in one list");

    OrderedDomain d;
    d.kind_ = Kind::enumerated;
    d.tokens_ = std::move(values);
    return d;
}

OrderedDomain OrderedDomain::integer_range(std::int64_t lo, std::int64_t hi)
{
    if (lo >= hi)
        throw ModelError(lo == hi ? "domain too small: need at least 2 values"
                                  : "integer range needs lo < hi");
    // sizes must fit in a ValueIndex
    if (static_cast<unsigned __int128>(static_cast<__int128>(hi) - lo)
        >= std::numeric_limits<ValueIndex>::max())
        throw ModelError("integer range too large");

    OrderedDomain d;
    d.kind_ = Kind::integer_range;
    d.lo_ = lo;
    d.hi_ = hi;
    return d;
}

std::size_t OrderedDomain::size() const
{
    if (kind_ == Kind::enumerated)
        return tokens_.size();
    return static_cast<std::size_t>(hi_ - lo_ + 1);
}

std::string OrderedDomain::value(ValueIndex i) const
{
    if (kind_ == Kind::enumerated)
        return tokens_.at(i);
    return std::to_string(lo_ + static_cast<std::int64_t>(i));
}

std::optional<ValueIndex> OrderedDomain::find(std::string_view token) const
{
    if (kind_ == Kind::enumerated) {
        auto it = std::find(tokens_.begin(), tokens_.end(), token);
        if (it == tokens_.end())
            return std::nullopt;
        return static_cast<ValueIndex>(it - tokens_.begin());
    }
    auto v = parse_integer(token);
    if (! v || *v < lo_ || *v > hi_)
        return std::nullopt;
    return static_cast<ValueIndex>(*v - lo_);
}

std::string OrderedDomain::format_set(const ValueSet & s) const
{
    if (kind_ == Kind::integer_range && s.intervals().size() == 1) {
        const auto & iv = s.intervals().front();
        if (iv.lo == iv.hi)
            return value(iv.lo);
        return value(iv.lo) + ".." + value(iv.hi);
    }
    std::string out = "{";
    bool first = true;
    for (const auto & iv : s.intervals()) {
        if (kind_ == Kind::integer_range && iv.hi - iv.lo >= 2) {
            out += (first ? "" : ",") + value(iv.lo) + ".." + value(iv.hi);
            first = false;
            continue;
        }
        for (std::uint64_t v = iv.lo; v <= iv.hi; ++v) {
            out += (first ? "" : ",") + value(static_cast<ValueIndex>(v));
            first = false;
        }
    }
    return out + "}";
}

} // namespace mlcp
