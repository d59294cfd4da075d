#include <doctest.h>

#include "helpers.hpp"

#include <mlcp/dominance.hpp>
#include <mlcp/errors.hpp>
#include <mlcp/generator.hpp>

#include <random>

using namespace mlcp;
using namespace mlcp::test;

namespace {

std::vector<Outcome> seq(const CPNet & net, std::initializer_list<const char *> literals)
{
    std::vector<Outcome> s;
    for (auto l : literals)
        s.push_back(out(net, l));
    return s;
}

RepresentativeSet rep(ValueIndex less, ValueIndex more) { return {less, more}; }

} // namespace

TEST_CASE("representatives of 1a -> 5b")
{
    auto net = corpus("fig4");
    auto report = check_more_or_less(net);
    auto worse = out(net, "X=1,Y=a");
    auto better = out(net, "X=5,Y=b");
    auto x = representative_candidates(net, report, 0, worse, better);
    REQUIRE(x.size() == 1);
    CHECK(x[0] == rep(0, 4));
    auto y = representative_candidates(net, report, 1, worse, better);
    REQUIRE(y.size() == 1);
    CHECK(y[0] == rep(0, 1));
}

TEST_CASE("representatives of 4b -> 6a")
{
    auto net = corpus("fig4");
    auto report = check_more_or_less(net);
    auto worse = out(net, "X=4,Y=b");
    auto better = out(net, "X=6,Y=a");
    auto x = representative_candidates(net, report, 0, worse, better);
    CHECK(x == std::vector<RepresentativeSet>{rep(0, 5), rep(1, 5), rep(2, 5)});
    CHECK(default_representative(net, report, 0, worse, better) == rep(2, 5));
}

TEST_CASE("skip-flipping on fig4")
{
    auto net = corpus("fig4");
    auto report = check_more_or_less(net);
    RepMap reps{rep(0, 4), rep(0, 1)};
    auto good = seq(net, {"X=1,Y=a", "X=1,Y=b", "X=5,Y=b"});
    auto detour = seq(net, {"X=1,Y=a", "X=2,Y=a", "X=2,Y=b", "X=5,Y=b"});
    CHECK(admissible(report, reps, good.front(), good.back()));
    CHECK(is_skip_flipping(net, report, good, reps));
    CHECK_FALSE(is_skip_flipping(net, report, detour, reps));

    auto reduced = reduce_to_skip(net, report, detour, reps);
    CHECK(reduced == good);

    auto hop = seq(net, {"X=4,Y=b", "X=4,Y=a", "X=6,Y=a"});
    for (ValueIndex free = 0; free < 3; ++free)
        CHECK(is_skip_flipping(net, report, hop, RepMap{rep(free, 5), rep(0, 1)}));
}

TEST_CASE("skip-flipping preconditions")
{
    auto net = corpus("fig4");
    auto report = check_more_or_less(net);
    RepMap reps{rep(0, 4), rep(0, 1)};
    auto reducible = seq(net, {"X=1,Y=a", "X=2,Y=a", "X=3,Y=a"});
    auto not_improving = seq(net, {"X=2,Y=a", "X=1,Y=a"});
    auto check_kind = [&](std::span<const Outcome> s, const RepMap & r, SequenceError::Kind kind) {
        try {
            (void)is_skip_flipping(net, report, s, r);
            FAIL("expected SequenceError");
        } catch (const SequenceError & e) {
            CHECK(e.kind() == kind);
        }
    };
    check_kind(reducible, RepMap{rep(0, 3), rep(0, 1)}, SequenceError::Kind::not_irreducible);
    check_kind(not_improving, reps, SequenceError::Kind::not_improving);
    auto good = seq(net, {"X=1,Y=a", "X=1,Y=b", "X=5,Y=b"});
    check_kind(good, RepMap{rep(1, 4), rep(0, 1)}, SequenceError::Kind::bad_representatives);
}

TEST_CASE("dominance on fig4")
{
    auto net = corpus("fig4");
    auto r = dominates(net, out(net, "X=5,Y=b"), out(net, "X=1,Y=a"));
    CHECK(r.entailed);
    REQUIRE(r.witness);
    CHECK(*r.witness == seq(net, {"X=1,Y=a", "X=1,Y=b", "X=5,Y=b"}));
    CHECK(r.stats.witness_length == 3);

    auto back = dominates(net, out(net, "X=1,Y=a"), out(net, "X=5,Y=b"));
    CHECK_FALSE(back.entailed);
    CHECK_FALSE(back.witness);
    CHECK_FALSE(dominates(net, out(net, "X=3,Y=a"), out(net, "X=3,Y=a")).entailed);
    CHECK(render(net, r).rfind("ENTAILED\nX=1,Y=a\n", 0) == 0);
}

TEST_CASE("dominance rejects nets that are not more-or-less")
{
    auto net = corpus("fig6a");
    auto a = out(net, "Client=large,meetingTime=12pm,Location=office");
    auto b = out(net, "Client=large,meetingTime=8am,Location=office");
    CHECK_THROWS_AS((void)dominates(net, a, b), ValidationError);
    CHECK(dominates_naive(net, a, b).entailed);
}

TEST_CASE("fig2 with an unexpanded Price")
{
    auto net = corpus("fig2");
    auto worse = out(net, "Action=buy,Site=ebay,Price=20,Payment=charge,Transaction=auction");
    auto better = out(net, "Action=sell,Site=ebay,Price=900,Payment=charge,Transaction=auction");
    auto r = dominates(net, better, worse);
    CHECK(r.entailed);
    CHECK(r.stats.nodes_expanded < 100);
    CHECK(oracle_dominates(net, better, worse));
    CHECK_FALSE(dominates(net, worse, better).entailed);
}

TEST_CASE("search budget")
{
    auto net = corpus("fig2");
    auto worse = out(net, "Action=buy,Site=yahoo,Price=1000,Payment=check,Transaction=direct");
    auto better = out(net, "Action=sell,Site=ebay,Price=1,Payment=check,Transaction=direct");
    CHECK_THROWS_AS((void)dominates_naive(net, better, worse, 10), ResourceError);
    DominanceOptions opt;
    opt.max_expansions = 1;
    CHECK_THROWS_AS((void)dominates(net, better, worse, opt), ResourceError);
}

namespace {

void check_against_oracle(const CPNet & net, const DominanceOptions & opt, std::mt19937_64 & rng, int queries)
{
    auto report = check_more_or_less(net);
    auto outcomes = all_outcomes(net);
    for (int q = 0; q < queries; ++q) {
        const auto & a = outcomes[draw(rng, 0, outcomes.size() - 1)];
        const auto & b = outcomes[draw(rng, 0, outcomes.size() - 1)];
        auto expected = oracle_dominates(net, a, b);
        auto r = dominates(net, report, a, b, opt);
        CHECK(r.entailed == expected);
        if (r.witness) {
            CHECK(r.witness->front() == b);
            CHECK(r.witness->back() == a);
            CHECK(is_improving_sequence(net, *r.witness));
        }
        CHECK(dominates_naive(net, a, b).entailed == expected);
    }
}

} // namespace

TEST_CASE("each pruning rule alone matches the oracle")
{
    std::mt19937_64 rng(17);
    for (int mask = 0; mask < 8; ++mask) {
        DominanceOptions opt;
        opt.suffix_fixing = mask & 1;
        opt.forward_pruning = mask & 2;
        opt.least_variable_flipping = mask & 4;
        CAPTURE(mask);
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            check_against_oracle(random_ml_net({4, 5, 2, seed}), opt, rng, 25);
            check_against_oracle(random_ml_net({4, 4, 1, seed + 100}), opt, rng, 25);
        }
    }
}

TEST_CASE("verdict does not depend on the representatives")
{
    std::mt19937_64 rng(3);
    DominanceOptions opt;
    opt.rep_exhaustive = true;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto net = random_ml_net({3, 6, 2, seed});
        auto report = check_more_or_less(net);
        auto outcomes = all_outcomes(net);
        for (int q = 0; q < 20; ++q) {
            const auto & a = outcomes[draw(rng, 0, outcomes.size() - 1)];
            const auto & b = outcomes[draw(rng, 0, outcomes.size() - 1)];
            DominanceResult r;
            CHECK_NOTHROW(r = dominates(net, report, a, b, opt));
            CHECK(r.entailed == oracle_dominates(net, a, b));
        }
    }
}

TEST_CASE("restricted search never expands more than naive")
{
    std::mt19937_64 rng(8);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto net = random_ml_net({4, 6, 2, seed});
        auto report = check_more_or_less(net);
        auto outcomes = all_outcomes(net);
        for (int q = 0; q < 20; ++q) {
            const auto & a = outcomes[draw(rng, 0, outcomes.size() - 1)];
            const auto & b = outcomes[draw(rng, 0, outcomes.size() - 1)];
            CHECK(dominates(net, report, a, b).stats.nodes_expanded <= dominates_naive(net, a, b).stats.nodes_expanded);
        }
    }
}

TEST_CASE("reduce_to_skip on oracle paths")
{
    std::mt19937_64 rng(21);
    int reduced = 0;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto net = random_ml_net({3, 6, 2, seed});
        auto report = check_more_or_less(net);
        auto outcomes = all_outcomes(net);
        for (int q = 0; q < 30; ++q) {
            const auto & a = outcomes[draw(rng, 0, outcomes.size() - 1)];
            const auto & b = outcomes[draw(rng, 0, outcomes.size() - 1)];
            auto path = oracle_path(net, a, b);
            if (! path)
                continue;
            auto reps = default_representatives(net, report, b, a);
            auto skip = reduce_to_skip(net, report, *path, reps);
            CHECK(skip.front() == b);
            CHECK(skip.back() == a);
            CHECK(is_skip_flipping(net, report, skip, reps));
            ++reduced;
        }
    }
    CHECK(reduced > 50);
}

TEST_CASE("reduce_to_skip on random improving walks")
{
    std::mt19937_64 rng(34);
    int changed = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto net = random_ml_net({4, 6, 2, seed});
        auto report = check_more_or_less(net);
        auto outcomes = all_outcomes(net);
        for (int q = 0; q < 20; ++q) {
            FlipSequence walk{outcomes[draw(rng, 0, outcomes.size() - 1)]};
            for (int s = 0; s < 8; ++s) {
                auto flips = improving_flips(net, walk.back());
                if (flips.empty())
                    break;
                auto [x, v] = flips[draw(rng, 0, flips.size() - 1)];
                walk.push_back(walk.back().with(x, v));
            }
            if (walk.size() < 2)
                continue;
            auto irreducible = make_irreducible(net, walk);
            auto reps = default_representatives(net, report, irreducible.front(), irreducible.back());
            auto skip = reduce_to_skip(net, report, irreducible, reps);
            CHECK(skip.front() == irreducible.front());
            CHECK(skip.back() == irreducible.back());
            CHECK(is_skip_flipping(net, report, skip, reps));
            if (skip != irreducible)
                ++changed;
        }
    }
    CHECK(changed > 20);
}
