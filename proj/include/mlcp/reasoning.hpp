#pragma once

#include <mlcp/cpnet.hpp>

#include <span>
#include <vector>

namespace mlcp {

/// Forward sweep: variables in topological order, assigned ones kept, each
/// unassigned one set to its most preferred value given its (already
/// fixed) parents.
[[nodiscard]] Outcome optimize(const CPNet & net, const PartialAssignment & partial);

/// Sound O(n) certificate that some consistent ranking puts `o` above `p`:
/// a differing variable with no differing ancestor prefers o's value in the
/// shared parent context. True means `p` does not dominate `o`. For distinct
/// outcomes at least one direction is certified. Throws PreconditionError
/// when o == p.
[[nodiscard]] bool can_order_before(const CPNet & net, const Outcome & o, const Outcome & p);

/// Orders distinct outcomes so that no outcome is placed before one that
/// dominates it. Insertion, placing each outcome before the first entry it
/// beats on the topologically first differing variable; that comparison
/// is one instance of the can_order_before certificate and is transitive.
/// Throws PreconditionError on duplicates.
[[nodiscard]] std::vector<Outcome> order_outcomes(const CPNet & net, std::span<const Outcome> outcomes);

} // namespace mlcp
