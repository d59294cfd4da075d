#pragma once

#include <mlcp/generator.hpp>
#include <mlcp/oracle.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlcp {

struct BenchSpec
{
    std::size_t trials = 50;
    GenSpec net;            ///< seed is the base seed; trial t uses a derived one
    std::size_t queries = 10; ///< per trial
    std::uint64_t oracle_cap = default_oracle_cap;
    /// Where a disagreeing net is written before the run aborts.
    std::filesystem::path reproducer_dir = ".";
};

struct BenchRecord
{
    std::string net;
    std::string better;
    std::string worse;
    bool verdict = false;
    std::uint64_t restricted_nodes = 0;
    std::uint64_t naive_nodes = 0;
    std::size_t max_domain = 0; ///< largest domain in the net
    bool oracle_checked = false;
    bool agreement = true;
};

/// Restricted and naive search (and the oracle, within budget) disagreed.
class DisagreementError : public std::runtime_error
{
public:
    DisagreementError(const std::string & what, std::filesystem::path reproducer) :
        std::runtime_error(what),
        reproducer_(std::move(reproducer))
    {
    }

    [[nodiscard]] const std::filesystem::path & reproducer() const { return reproducer_; }

private:
    std::filesystem::path reproducer_;
};

/// Seed for trial `t` of a run with base seed `base`.
[[nodiscard]] std::uint64_t trial_seed(std::uint64_t base, std::size_t t);

/// Runs every trial in order. Half of each trial's queries pair a random
/// outcome with one reachable from it (when any is and the oracle budget
/// allows), the rest are uniform pairs. Throws DisagreementError on the
/// first verdict mismatch.
[[nodiscard]] std::vector<BenchRecord> run_bench(const BenchSpec & spec);

/// `net,better,worse,verdict,restricted_nodes,naive_nodes`, RFC 4180
/// quoting.
[[nodiscard]] std::string bench_csv(const std::vector<BenchRecord> & records);

} // namespace mlcp
