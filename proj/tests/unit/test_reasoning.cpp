#include <doctest.h>

#include "helpers.hpp"

#include <mlcp/errors.hpp>
#include <mlcp/generator.hpp>
#include <mlcp/oracle.hpp>
#include <mlcp/reasoning.hpp>

#include <random>

using namespace mlcp;
using namespace mlcp::test;

TEST_CASE("forward sweep on fig4")
{
    auto net = corpus("fig4");
    CHECK(format_outcome(net, optimize(net, parse_partial(net, ""))) == "X=6,Y=a");
    CHECK(format_outcome(net, optimize(net, parse_partial(net, "X=2"))) == "X=2,Y=b");
    CHECK(format_outcome(net, optimize(net, parse_partial(net, "Y=b"))) == "X=6,Y=b");
}

TEST_CASE("forward sweep on fig2")
{
    auto net = corpus("fig2");
    CHECK(format_outcome(net, optimize(net, parse_partial(net, "")))
        == "Action=sell,Site=ebay,Price=1000,Payment=charge,Transaction=auction");
    CHECK(format_outcome(net, optimize(net, parse_partial(net, "Action=buy")))
        == "Action=buy,Site=yahoo,Price=1,Payment=check,Transaction=direct");
}

TEST_CASE("optimum is undominated")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto net = random_ml_net({3, 4, 2, seed});
        PartialAssignment none(net.size());
        auto best = optimize(net, none);
        CHECK(improving_flips(net, best).empty());
        CHECK(oracle_reachable(net, best).empty());
    }
}

TEST_CASE("can_order_before")
{
    auto net = corpus("fig4");
    auto a = out(net, "X=5,Y=b");
    auto b = out(net, "X=1,Y=a");
    CHECK(can_order_before(net, a, b));
    CHECK_FALSE(can_order_before(net, b, a));
    // X differs and is the only root; X=1 loses
    CHECK_FALSE(can_order_before(net, out(net, "X=1,Y=b"), out(net, "X=6,Y=b")));
    CHECK_THROWS_AS((void)can_order_before(net, a, a), PreconditionError);
}

TEST_CASE("order_outcomes respects dominance")
{
    std::mt19937_64 rng(4);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto net = random_ml_net({3, 4, 2, seed});
        auto outcomes = all_outcomes(net);
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(outcomes.begin(), outcomes.end(), rng);
            std::vector<Outcome> pick(outcomes.begin(), outcomes.begin() + 6);
            auto ordered = order_outcomes(net, pick);
            REQUIRE(ordered.size() == 6);
            for (std::size_t i = 0; i < ordered.size(); ++i)
                for (std::size_t j = i + 1; j < ordered.size(); ++j)
                    CHECK_FALSE(oracle_dominates(net, ordered[j], ordered[i]));
        }
    }
}

TEST_CASE("order_outcomes rejects duplicates")
{
    auto net = corpus("fig4");
    std::vector<Outcome> dup{out(net, "X=1,Y=a"), out(net, "X=1,Y=a")};
    CHECK_THROWS_AS((void)order_outcomes(net, dup), PreconditionError);
}
