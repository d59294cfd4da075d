#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include <mlcp/oracle.hpp>

namespace mlcp::test {

std::vector<Outcome> all_outcomes(const CPNet & net)
{
    OutcomeCodec codec(net);
    std::vector<Outcome> outcomes;
    for (std::uint64_t id = 0; id < codec.count(); ++id)
        outcomes.push_back(codec.decode(id));
    return outcomes;
}

} // namespace mlcp::test
