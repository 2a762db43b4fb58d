#pragma once

#include <span>
#include <vector>

namespace angulate::detail {

// Height sequence of the p-tree whose white vertices, listed in preorder,
// have black-child counts `multipliers` (a valid Lukasiewicz word once each
// entry is scaled to (p-1)m - 1). Consecutive runs of p-1 white children
// share one black parent.
std::vector<int> heights_from_multipliers(int p, std::span<const int> multipliers);

}  // namespace angulate::detail
