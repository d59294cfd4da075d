#pragma once

#include <mlcp/cpnet.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mlcp {

/// Reads the line-based `.mlcp` format:
///
///     NET <name>
///     VAR <name> : <v1>, <v2>, ..., <vk>     # declared order, left = least
///     VAR <name> : <lo>..<hi>                 # integer range
///     CPT <name> [| <parent>, ...]
///       <cond> & <cond> ... : <ranking>
///       : <ranking>                           # root row
///
/// cond is `P=v`, `P in lo..hi` or `P in {v,...}`; ranking is ASC, DESC or
/// `v > v > ... > v`, most preferred first. Ties (`~`) are rejected.
/// Throws ParseError naming the line; acyclicity and CPT partitioning are
/// not parse errors and show up in `CPNet::structure()`.
[[nodiscard]] CPNet parse_cpnet(std::istream & in);
[[nodiscard]] CPNet parse_cpnet(std::string_view text);
[[nodiscard]] CPNet load_cpnet(const std::filesystem::path & path);

/// Canonical text: declaration order throughout, predicates in parent
/// order, single spaces, two-space row indent.
[[nodiscard]] std::string serialize_cpnet(const CPNet & net);

/// `X=3,Y=a`. Every variable must be assigned exactly once.
[[nodiscard]] Outcome parse_outcome(const CPNet & net, std::string_view literal);
/// Same syntax as parse_outcome, but any subset of variables (possibly
/// none) may be assigned.
[[nodiscard]] PartialAssignment parse_partial(const CPNet & net, std::string_view literal);
[[nodiscard]] std::string format_outcome(const CPNet & net, const Outcome & o);

} // namespace mlcp
