#pragma once

#include <cstdint>

#include "angulate/mobile.hpp"
#include "angulate/rng.hpp"

namespace angulate {

// Uniform p-tree with n black vertices. The white vertices form a plane tree
// whose child counts are multiples of p-1; a uniform composition of n into
// (p-1)n+1 parts, rotated by the cycle lemma, gives its Lukasiewicz word.
PTree sample_ptree(int p, int n, RngStream& rng);

// Uniform free mobile (root label 0): uniform tree, then an independent
// uniform cyclic step sequence around every black vertex.
Mobile sample_free_mobile(int p, int n, RngStream& rng);

inline constexpr std::int64_t kDefaultMaxAttempts = 1'000'000;

// Uniform rooted mobile (root label 1, all labels >= 1) by rejection from
// the free construction started at label 1. Throws BudgetError after
// max_attempts rejected draws; large n should use pointed maps instead.
Mobile sample_rooted_mobile(int p, int n, RngStream& rng,
                            std::int64_t max_attempts = kDefaultMaxAttempts);

Mobile sample_mobile(int p, int n, Variant variant, RngStream& rng);

}  // namespace angulate
