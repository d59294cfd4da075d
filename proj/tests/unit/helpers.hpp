#pragma once

#include <mlcp/format.hpp>

#include <string>

namespace mlcp::test {

inline CPNet corpus(const std::string & name)
{
    return load_cpnet(std::string(MLCP_CORPUS_DIR) + "/" + name + ".mlcp");
}

inline Outcome out(const CPNet & net, const std::string & literal) { return parse_outcome(net, literal); }

/// Every outcome of a small net, codec order.
std::vector<Outcome> all_outcomes(const CPNet & net);

} // namespace mlcp::test
