#pragma once

// Internal id-level enumeration cores shared by the disjunctive, canonical
// and repairs modules.

#include "index_set.hpp"

#include <vector>

namespace repairforge::detail {

std::vector<IndexSet> minimalTransversalsIdx(const std::vector<IndexSet>& edges,
                                             std::size_t universe, std::size_t maxResults);

/** Deduplicates and keeps the inclusion-minimal sets, in canonical order. */
std::vector<IndexSet> antichainFilterIdx(std::vector<IndexSet> sets);

}  // namespace repairforge::detail
