#include <mlcp/errors.hpp>
#include <mlcp/ranking.hpp>

#include <numeric>

namespace mlcp {

Ranking Ranking::ascending(std::size_t n)
{
    return Ranking(Kind::ascending, n);
}

Ranking Ranking::descending(std::size_t n)
{
    return Ranking(Kind::descending, n);
}

Ranking Ranking::explicit_order(std::vector<ValueIndex> order, std::size_t n)
{
    if (order.size() != n)
        throw ModelError("ranking must list every domain value exactly once");
    Ranking r(Kind::explicit_order, n);
    r.rank_.assign(n, n);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (order[pos] >= n)
            throw ModelError("ranking value outside the domain");
        if (r.rank_[order[pos]] != n)
            throw ModelError("duplicate value in ranking");
        r.rank_[order[pos]] = pos;
    }
    r.order_ = std::move(order);
    return r;
}

std::size_t Ranking::position(ValueIndex v) const
{
    switch (kind_) {
    case Kind::ascending:
        return size_ - 1 - v;
    case Kind::descending:
        return v;
    case Kind::explicit_order:
        return rank_[v];
    }
    return 0;
}

ValueIndex Ranking::at_position(std::size_t pos) const
{
    switch (kind_) {
    case Kind::ascending:
        return static_cast<ValueIndex>(size_ - 1 - pos);
    case Kind::descending:
        return static_cast<ValueIndex>(pos);
    case Kind::explicit_order:
        return order_[pos];
    }
    return 0;
}

bool Ranking::prefers(ValueIndex a, ValueIndex b) const
{
    return position(a) < position(b);
}

ValueIndex Ranking::best() const
{
    return at_position(0);
}

std::vector<ValueIndex> Ranking::permutation() const
{
    if (kind_ == Kind::explicit_order)
        return order_;
    std::vector<ValueIndex> out(size_);
    for (std::size_t i = 0; i < size_; ++i)
        out[i] = at_position(i);
    return out;
}

std::optional<Direction> Ranking::direction() const
{
    if (kind_ == Kind::ascending)
        return Direction::ascending;
    if (kind_ == Kind::descending)
        return Direction::descending;
    bool asc = true, desc = true;
    for (std::size_t i = 0; i < size_; ++i) {
        asc = asc && order_[i] == size_ - 1 - i;
        desc = desc && order_[i] == i;
    }
    if (asc)
        return Direction::ascending;
    if (desc)
        return Direction::descending;
    return std::nullopt;
}

bool Ranking::equivalent(const Ranking & other) const
{
    if (size_ != other.size_)
        return false;
    auto d1 = direction(), d2 = other.direction();
    if (d1 || d2)
        return d1 == d2;
    return order_ == other.order_;
}

} // namespace mlcp
