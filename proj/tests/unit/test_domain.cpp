#include <doctest.h>

#include <mlcp/domain.hpp>
#include <mlcp/errors.hpp>
#include <mlcp/ranking.hpp>

using namespace mlcp;

TEST_CASE("value sets merge adjacent intervals")
{
    auto s = ValueSet::of({4, 1, 2, 7, 3});
    REQUIRE(s.intervals().size() == 2);
    CHECK(s.intervals()[0].lo == 1);
    CHECK(s.intervals()[0].hi == 4);
    CHECK(s.size() == 5);
    CHECK(s.contains(7));
    CHECK_FALSE(s.contains(5));
    CHECK(s.intersect(ValueSet::interval(3, 8)).size() == 3);
    CHECK_FALSE(s.intersects(ValueSet::interval(5, 6)));
}

TEST_CASE("enumerated domains")
{
    auto d = OrderedDomain::enumerated({"black", "navy", "white"});
    CHECK(d.size() == 3);
    CHECK(d.value(1) == "navy");
    CHECK(d.find("white") == 2u);
    CHECK_FALSE(d.find("red"));
    CHECK(d.format_set(ValueSet::interval(0, 1)) == "{black,navy}");
    CHECK_THROWS_AS(OrderedDomain::enumerated({"a"}), ModelError);
    CHECK_THROWS_AS(OrderedDomain::enumerated({"a", "a"}), ModelError);
}

TEST_CASE("integer ranges stay unexpanded")
{
    auto d = OrderedDomain::integer_range(1, 1000000);
    CHECK(d.size() == 1000000);
    CHECK(d.value(49) == "50");
    CHECK(d.find("50") == 49u);
    CHECK_FALSE(d.find("0"));
    CHECK_FALSE(d.find("050"));
    CHECK(d.format_set(ValueSet::interval(0, 49)) == "1..50");
    CHECK_THROWS_AS(OrderedDomain::integer_range(3, 3), ModelError);
}

TEST_CASE("parse_integer is strict")
{
    CHECK(parse_integer("-12") == -12);
    CHECK(parse_integer("0") == 0);
    CHECK_FALSE(parse_integer("+1"));
    CHECK_FALSE(parse_integer("1x"));
    CHECK_FALSE(parse_integer(""));
}

TEST_CASE("rankings")
{
    auto asc = Ranking::ascending(4);
    CHECK(asc.best() == 3);
    CHECK(asc.prefers(2, 1));
    CHECK(asc.direction() == Direction::ascending);

    auto desc = Ranking::descending(4);
    CHECK(desc.best() == 0);
    CHECK(desc.position(0) == 0);
    CHECK(desc.equivalent(Ranking::explicit_order({0, 1, 2, 3}, 4)));

    auto peaked = Ranking::explicit_order({2, 1, 3, 0}, 4);
    CHECK_FALSE(peaked.direction());
    CHECK(peaked.at_position(1) == 1);
    CHECK(peaked.prefers(3, 0));
    CHECK_THROWS_AS(Ranking::explicit_order({0, 0, 1}, 3), ModelError);
    CHECK_THROWS_AS(Ranking::explicit_order({0, 1}, 3), ModelError);
}
