#pragma once

#include <mlcp/cpnet.hpp>

#include <cstdint>
#include <random>

namespace mlcp {

struct GenSpec
{
    std::size_t n_vars = 3;
    std::size_t max_domain = 6;
    std::size_t max_parents = 2;
    std::uint64_t seed = 1;

    /// Throws ModelError unless n_vars >= 1, max_domain >= 2 and
    /// max_parents < n_vars.
    void validate() const;
};

/// Random more-or-less net, correct by construction: a random DAG over
/// X1..Xn (parents drawn from earlier variables), domain sizes in
/// [2, max_domain], a random break point per variable, and one CPT row per
/// combination of parent categories with an independent ASC/DESC ranking.
/// Binary domains use symbolic values, larger ones integer ranges 1..k.
/// Deterministic in the seed.
[[nodiscard]] CPNet random_ml_net(const GenSpec & spec);

/// Uniform draw in [lo, hi]. Spelled out instead of using
/// std::uniform_int_distribution so outputs match across standard
/// libraries.
[[nodiscard]] std::uint64_t draw(std::mt19937_64 & rng, std::uint64_t lo, std::uint64_t hi);

} // namespace mlcp
