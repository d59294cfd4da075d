#include <doctest.h>

#include "helpers.hpp"

#include <mlcp/errors.hpp>
#include <mlcp/generator.hpp>

using namespace mlcp;
using namespace mlcp::test;

namespace {

std::size_t parse_error_line(std::string_view text)
{
    try {
        (void)parse_cpnet(text);
    } catch (const ParseError & e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("corpus parses")
{
    for (auto name : {"fig1", "fig2", "fig3", "fig4", "fig6a", "fig6b"}) {
        CAPTURE(name);
        auto net = corpus(name);
        CHECK(net.structure().ok());
    }
}

TEST_CASE("fig2 keeps Price as an interval domain")
{
    auto net = corpus("fig2");
    auto price = net.variable_index("Price");
    CHECK(net.domain_size(price) == 1000);
    CHECK(net.variable(price).domain.kind() == OrderedDomain::Kind::integer_range);
    CHECK(net.outcome_count() == 2u * 2 * 1000 * 2 * 2);
}

TEST_CASE("round trip through the canonical form")
{
    for (auto name : {"fig1", "fig2", "fig3", "fig4", "fig6a", "fig6b"}) {
        CAPTURE(name);
        auto net = corpus(name);
        auto text = serialize_cpnet(net);
        auto again = parse_cpnet(text);
        CHECK(again == net);
        CHECK(serialize_cpnet(again) == text);
    }
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto net = random_ml_net({4, 6, 2, seed});
        CHECK(parse_cpnet(serialize_cpnet(net)) == net);
    }
}

TEST_CASE("canonical text of fig4")
{
    CHECK(serialize_cpnet(corpus("fig4")) ==
        "NET fig4\n"
        "VAR X : 1..6\n"
        "VAR Y : a, b\n"
        "CPT X\n"
        "  : ASC\n"
        "CPT Y | X\n"
        "  X in 1..3 : b > a\n"
        "  X in 4..6 : a > b\n");
}

TEST_CASE("parse errors name the line")
{
    CHECK(parse_error_line("VAR X : 1..3\n") == 1);
    CHECK(parse_error_line("NET n\nVAR X : 1..3\nCPT X\n  : 3 ~ 2 ~ 1\n") == 4);
    CHECK(parse_error_line("NET n\nVAR X : 1..3\nCPT X\n  : 3 > 2\n") == 4);
    CHECK(parse_error_line("NET n\nVAR X : 1..3\nVAR Y : a, b\nCPT X\n  : ASC\nCPT Y | X\n  X=7 : a > b\n  X in 1..3 : b > a\n")
        == 7);
    CHECK(parse_error_line("NET n\nVAR X : a\n") == 2);
    CHECK(parse_error_line("NET n\nVAR X : 1..3\nCPT X\n  : ASC\n  : DESC\n") == 5);
    CHECK(parse_error_line("NET n\nVAR X : 1..3\nCPT Z\n  : ASC\n") == 3);
    CHECK(parse_error_line("NET n\nVAR X : 1..3\nfoo\n") == 3);
}

TEST_CASE("partition problems are reported, not thrown")
{
    auto net = parse_cpnet("NET n\nVAR Price : 1..100\nVAR Y : a, b\nCPT Price\n  : ASC\nCPT Y | Price\n"
                           "  Price in 1..50 : a > b\n  Price in 40..100 : b > a\n");
    REQUIRE_FALSE(net.structure().ok());
    auto problems = net.structure().problems();
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("overlap") != std::string::npos);
    CHECK(problems[0].find("40..50") != std::string::npos);
    CHECK_THROWS_AS(net.require_valid(), ValidationError);

    auto gap = parse_cpnet("NET n\nVAR Price : 1..100\nVAR Y : a, b\nCPT Price\n  : ASC\nCPT Y | Price\n"
                           "  Price in 1..50 : a > b\n  Price in 52..100 : b > a\n");
    REQUIRE_FALSE(gap.structure().ok());
    CHECK(gap.structure().problems()[0].find("51") != std::string::npos);
}

TEST_CASE("cycles are reported")
{
    auto net = parse_cpnet("NET n\nVAR A : x, y\nVAR B : x, y\nCPT A | B\n  B=x : x > y\n  B=y : y > x\n"
                           "CPT B | A\n  A=x : x > y\n  A=y : y > x\n");
    CHECK_FALSE(net.structure().acyclic);
    CHECK(net.structure().cycle.size() == 2);
    CHECK_THROWS_AS(net.require_valid(), ValidationError);
}

TEST_CASE("outcome literals")
{
    auto net = corpus("fig4");
    auto o = parse_outcome(net, "X=5,Y=b");
    CHECK(o[0] == 4);
    CHECK(o[1] == 1);
    CHECK(format_outcome(net, o) == "X=5,Y=b");
    CHECK(parse_outcome(net, "Y=b, X=5") == o);
    CHECK_THROWS_AS((void)parse_outcome(net, "X=5"), ParseError);
    CHECK_THROWS_AS((void)parse_outcome(net, "X=7,Y=a"), ParseError);
    CHECK_THROWS_AS((void)parse_outcome(net, "X=1,Y=a,X=2"), ParseError);
    CHECK_THROWS_AS((void)parse_outcome(net, "Z=1"), ParseError);

    auto partial = parse_partial(net, "X=2");
    CHECK(partial[0] == 1u);
    CHECK_FALSE(partial[1]);
    CHECK(parse_partial(net, "").size() == 2);
}
