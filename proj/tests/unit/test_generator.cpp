#include <doctest.h>

#include <mlcp/analysis.hpp>
#include <mlcp/bench.hpp>
#include <mlcp/errors.hpp>
#include <mlcp/format.hpp>
#include <mlcp/generator.hpp>

#include <filesystem>

using namespace mlcp;

TEST_CASE("generator is deterministic")
{
    CHECK(serialize_cpnet(random_ml_net({3, 6, 2, 1})) == serialize_cpnet(random_ml_net({3, 6, 2, 1})));
    CHECK(serialize_cpnet(random_ml_net({3, 6, 2, 1})) != serialize_cpnet(random_ml_net({3, 6, 2, 2})));
}

TEST_CASE("generator respects its size limits")
{
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto net = random_ml_net({5, 4, 2, seed});
        CHECK(net.size() == 5);
        for (VarIndex x = 0; x < net.size(); ++x) {
            CHECK(net.parents(x).size() <= 2);
            CHECK(net.domain_size(x) >= 2);
            CHECK(net.domain_size(x) <= 4);
        }
        CHECK(check_more_or_less(net).is_more_or_less);
    }
}

TEST_CASE("max_domain 2 gives binary nets")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto net = random_ml_net({4, 2, 3, seed});
        for (VarIndex x = 0; x < net.size(); ++x)
            CHECK(net.domain_size(x) == 2);
    }
}

TEST_CASE("invalid specs")
{
    CHECK_THROWS_AS((void)random_ml_net({0, 3, 0, 1}), ModelError);
    CHECK_THROWS_AS((void)random_ml_net({3, 1, 1, 1}), ModelError);
    CHECK_THROWS_AS((void)random_ml_net({3, 3, 3, 1}), ModelError);
}

TEST_CASE("bench output is deterministic and agrees")
{
    BenchSpec spec;
    spec.trials = 10;
    spec.net = {4, 6, 2, 7};
    spec.reproducer_dir = std::filesystem::temp_directory_path();
    auto first = run_bench(spec);
    CHECK(first.size() == 100);
    for (const auto & r : first) {
        CHECK(r.agreement);
        CHECK(r.oracle_checked);
        CHECK(r.restricted_nodes <= r.naive_nodes);
    }
    auto csv = bench_csv(first);
    CHECK(csv == bench_csv(run_bench(spec)));
    CHECK(csv.rfind("net,better,worse,verdict,restricted_nodes,naive_nodes\n", 0) == 0);
    CHECK(csv.find(",\"X1=") != std::string::npos);
}
