#pragma once

#include <map>
#include <vector>

#include "ptw/reductions.hpp"

namespace ptw::detail {

// logical sequence -> vertex sequence through path-crossing routes
std::vector<int> expand(const ReductionOutput& out, const std::vector<int>& seq, bool cyclic);

// First-fit over the leaf gadgets: forced records take the given option,
// then the rest in registry order, path-crossing internals last. Returns the
// chosen expanded sequence per leaf record (empty for non-leaves).
std::vector<std::vector<int>> greedy_leaves(const ReductionOutput& out, const std::map<int, int>& forced, bool cyclic);

bool is_leaf(const GadgetRecord& r);

}  // namespace ptw::detail
